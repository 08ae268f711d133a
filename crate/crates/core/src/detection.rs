//! Observation model and ROC geometry for the Gaussian shift-in-mean
//! channel: `r ~ N(0, 1)` under hypothesis 0 and `r ~ N(shift, 1)` under
//! hypothesis 1. Threshold rules trace out the ROC
//! `y = Q(Q^{-1}(x) - shift)`, where `Q` is the standard normal tail.

use crate::error::{Error, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const SQRT_2PI: f64 = 2.5066282746310002;

/// Prior probabilities of the two hypotheses. Only `pi0` is stored;
/// `pi1` is always the exact complement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Priors {
    pi0: f64,
}

impl Priors {
    pub fn new(pi0: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&pi0) {
            return Err(Error::InvalidScenario {
                field: "pi0",
                message: format!("must lie in [0, 1], got {pi0}"),
            });
        }
        Ok(Self { pi0 })
    }

    pub fn pi0(&self) -> f64 {
        self.pi0
    }

    pub fn pi1(&self) -> f64 {
        1.0 - self.pi0
    }
}

/// Separation between the hypothesis means, in units of the (unit) noise
/// standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianShiftModel {
    pub shift: f64,
}

impl GaussianShiftModel {
    pub fn new(shift: f64) -> Result<Self> {
        if !(shift > 0.0) || !shift.is_finite() {
            return Err(Error::InvalidScenario {
                field: "shift",
                message: format!("must be a positive finite real, got {shift}"),
            });
        }
        Ok(Self { shift })
    }
}

/// A point on (or under) the ROC: false-alarm probability `x` and
/// detection probability `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub x: f64,
    pub y: f64,
}

impl OperatingPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        for (name, v) in [("x", x), ("y", y)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain {
                    what: match name {
                        "x" => "operating point x",
                        _ => "operating point y",
                    },
                    value: v,
                });
            }
        }
        Ok(Self { x, y })
    }
}

/// An executable decision rule on the observation line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecisionRule {
    /// Decide 0 regardless of the observation: operating point (0, 0).
    AlwaysH0,
    /// Decide 1 regardless: operating point (1, 1).
    AlwaysH1,
    /// Decide 1 iff `r >= tau`.
    Threshold { tau: f64 },
    /// Decide 1 iff `r > tau`, flipping a `gamma`-coin exactly at the
    /// boundary. For a continuous observation the boundary has measure
    /// zero, so this behaves like `Threshold`; the variant exists so rules
    /// built for discrete-observation extensions have a home.
    RandomizedThreshold { tau: f64, gamma: f64 },
}

/// Which Bayes baseline to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BayesMode {
    /// Likelihood-ratio threshold, the rule that actually minimizes the
    /// expected cost for this model.
    #[default]
    Lrt,
    /// Apply the prior ratio `pi0/pi1` directly as a threshold on the
    /// observation, skipping the log-likelihood mapping. A simplified
    /// convention some analyses use; kept for comparison runs.
    PriorRatio,
}

/// Standard normal tail `Q(t) = Pr(N(0,1) >= t)`, accurate in both tails.
pub fn q(t: f64) -> f64 {
    0.5 * libm::erfc(t / SQRT_2)
}

/// Standard normal density.
fn phi(t: f64) -> f64 {
    libm::exp(-0.5 * t * t) / SQRT_2PI
}

/// Rational approximation for the inverse standard normal CDF,
/// Acklam's method: relative error below 1.2e-9 everywhere, which the
/// Newton polish in `q_inv` then drives to machine precision.
fn norm_cdf_inv(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let r = libm::sqrt(-2.0 * libm::log(p));
        (((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    } else if p <= 1.0 - P_LOW {
        let u = p - 0.5;
        let r = u * u;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * u
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let r = libm::sqrt(-2.0 * libm::log(1.0 - p));
        -(((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    }
}

/// Inverse of `q` on (0, 1). The boundary values return infinite
/// sentinels consumed only by corner handling in `point_to_rule`.
pub fn q_inv(p: f64) -> f64 {
    assert!(
        (0.0..=1.0).contains(&p),
        "q_inv argument must lie in [0, 1], got {p}"
    );
    if p == 0.0 {
        return f64::INFINITY;
    }
    if p == 1.0 {
        return f64::NEG_INFINITY;
    }
    // Q(t) = 1 - CDF(t), so Q^{-1}(p) = CDF^{-1}(1 - p) = -CDF^{-1}(p).
    let mut t = -norm_cdf_inv(p);
    for _ in 0..2 {
        let dens = phi(t);
        if dens > 0.0 {
            let step = (q(t) - p) / dens;
            if step.is_finite() {
                t += step;
            }
        }
    }
    t
}

/// Detection probability at false-alarm rate `x`: the ROC of the shift
/// channel. Endpoints are pinned exactly so corner arithmetic never sees
/// infinities.
pub fn roc(x: f64, model: &GaussianShiftModel) -> f64 {
    assert!(
        (0.0..=1.0).contains(&x),
        "roc argument must lie in [0, 1], got {x}"
    );
    if x == 0.0 {
        return 0.0;
    }
    if x == 1.0 {
        return 1.0;
    }
    q(q_inv(x) - model.shift)
}

/// Slope of the ROC, `dy/dx = exp(shift * Q^{-1}(x) - shift^2 / 2)`.
///
/// This is the likelihood ratio of the observation at the threshold
/// realizing `x`, hence positive and strictly decreasing (the ROC is
/// concave). Diverges at `x = 0`, vanishes at `x = 1`.
pub fn roc_deriv(x: f64, model: &GaussianShiftModel) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain {
            what: "roc_deriv x",
            value: x,
        });
    }
    let s = model.shift;
    Ok(libm::exp(s * q_inv(x) - 0.5 * s * s))
}

/// Realizes a target false-alarm probability as an executable rule.
pub fn point_to_rule(x: f64, _model: &GaussianShiftModel) -> DecisionRule {
    assert!(
        (0.0..=1.0).contains(&x),
        "point_to_rule argument must lie in [0, 1], got {x}"
    );
    if x == 0.0 {
        DecisionRule::AlwaysH0
    } else if x == 1.0 {
        DecisionRule::AlwaysH1
    } else {
        DecisionRule::Threshold { tau: q_inv(x) }
    }
}

/// Operating point achieved by a rule under the shift model.
pub fn rule_to_point(rule: &DecisionRule, model: &GaussianShiftModel) -> OperatingPoint {
    match *rule {
        DecisionRule::AlwaysH0 => OperatingPoint { x: 0.0, y: 0.0 },
        DecisionRule::AlwaysH1 => OperatingPoint { x: 1.0, y: 1.0 },
        DecisionRule::Threshold { tau } | DecisionRule::RandomizedThreshold { tau, .. } => {
            OperatingPoint {
                x: q(tau),
                y: q(tau - model.shift),
            }
        }
    }
}

/// The Bayes-optimal baseline rule for the given priors and costs.
///
/// Default mode thresholds the likelihood ratio at
/// `eta = pi0 (c10 - c00) / (pi1 (c01 - c11))`, which for the Gaussian
/// shift channel is the observation threshold
/// `tau = ln(eta)/shift + shift/2`. Degenerate priors collapse to the
/// corner rules. The prior-ratio mode instead applies `pi0/pi1`
/// directly as the observation threshold.
pub fn bayes_rule(
    priors: &Priors,
    costs: &crate::prospect::CostMatrix,
    model: &GaussianShiftModel,
    mode: BayesMode,
) -> Result<DecisionRule> {
    let d0 = costs.c10 - costs.c00;
    let d1 = costs.c01 - costs.c11;
    if d0 <= 0.0 || d1 <= 0.0 {
        return Err(Error::DegenerateCosts {
            detail: format!("c10 - c00 = {d0}, c01 - c11 = {d1}"),
        });
    }
    let pi0 = priors.pi0();
    let pi1 = priors.pi1();
    match mode {
        BayesMode::Lrt => {
            if pi0 == 0.0 {
                // Only hypothesis 1 occurs and a miss costs more than a hit.
                return Ok(DecisionRule::AlwaysH1);
            }
            if pi0 == 1.0 {
                return Ok(DecisionRule::AlwaysH0);
            }
            let eta = (pi0 * d0) / (pi1 * d1);
            Ok(DecisionRule::Threshold {
                tau: libm::log(eta) / model.shift + 0.5 * model.shift,
            })
        }
        BayesMode::PriorRatio => {
            if pi1 == 0.0 {
                return Ok(DecisionRule::AlwaysH0);
            }
            Ok(DecisionRule::Threshold { tau: pi0 / pi1 })
        }
    }
}
