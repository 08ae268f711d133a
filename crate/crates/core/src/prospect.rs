//! Prospect-theory primitives: the probability weight function, the cost
//! value function, and behavioral classification of agents.
//!
//! The weight family is `w(p) = p^alpha`. An exponent below one overweights
//! small probabilities (an optimist facing losses), above one underweights
//! them (a pessimist). The value function measures costs against a reference
//! point `c_star`: costs below it are perceived as gains, above as losses.

use crate::error::{Error, Result};

/// Largest |argument| fed to `exp`. Anything bigger would overflow f64;
/// scenario validation rejects costs beyond this before arithmetic starts.
pub const MAX_ABS_COST: f64 = 700.0;

/// How perceived cost scales with actual cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueFamily {
    /// `v(c) = e^c - e^{c_star}`, the behavioral model.
    #[default]
    Exponential,
    /// `v(c) = c - c_star`. With `alpha = 1` this makes the behavioral risk
    /// coincide with classical Bayes risk up to a constant, which is what the
    /// unbiased-reduction checks rely on.
    Linear,
}

/// Behavioral parameters of a single agent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgentProfile {
    /// Weight-function exponent; must be positive.
    pub alpha: f64,
    /// Reference cost separating perceived gains from losses.
    pub c_star: f64,
    pub value_family: ValueFamily,
}

/// The four decision costs `c_ij`: cost of deciding `u = i` when the truth
/// is `theta = j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostMatrix {
    pub c00: f64,
    pub c01: f64,
    pub c10: f64,
    pub c11: f64,
}

/// Shape class of the weight function, with the inflection point `p_star`
/// of the general S-shaped family as a derived attribute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttitudeClass {
    /// `alpha < 1`: concave weight everywhere, `p_star = 1`.
    Optimist,
    /// `alpha = 1`: identity weight, no distortion.
    Unbiased,
    /// `alpha > 1`: convex weight everywhere, `p_star = 0`.
    Pessimist,
}

/// Position of the reference cost relative to the cost matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostRegime {
    /// `c_star <= min(c_ij)`: every outcome is perceived as a loss.
    Type1,
    /// `c_star >= max(c_ij)`: every outcome is perceived as a gain.
    Type2,
    /// Reference strictly between the extremes; no corner/interior theory
    /// applies and the solver uses global search.
    Mixed,
}

impl AgentProfile {
    /// Exponential-value profile. Rejects nonpositive or nonfinite `alpha`
    /// and a reference cost too large for `exp`.
    pub fn new(alpha: f64, c_star: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidScenario {
                field: "alpha",
                message: format!("must be a positive finite real, got {alpha}"),
            });
        }
        if !c_star.is_finite() || c_star.abs() > MAX_ABS_COST {
            return Err(Error::InvalidScenario {
                field: "c_star",
                message: format!("must be finite with |c_star| <= {MAX_ABS_COST}, got {c_star}"),
            });
        }
        Ok(Self {
            alpha,
            c_star,
            value_family: ValueFamily::Exponential,
        })
    }

    pub fn with_value_family(mut self, family: ValueFamily) -> Self {
        self.value_family = family;
        self
    }

    /// `w(p) = p^alpha` on [0, 1].
    pub fn weight(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain {
                what: "weight probability",
                value: p,
            });
        }
        Ok(libm::pow(p, self.alpha))
    }

    /// `w'(p) = alpha * p^(alpha - 1)`.
    ///
    /// Diverges as `p -> 0` when `alpha < 1`; returns `+inf` there so corner
    /// diagnostics can flag it. The solver never differentiates at corners.
    pub fn weight_deriv(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain {
                what: "weight probability",
                value: p,
            });
        }
        if p == 0.0 {
            return Ok(match self.alpha {
                a if a < 1.0 => f64::INFINITY,
                a if a == 1.0 => 1.0,
                _ => 0.0,
            });
        }
        Ok(self.alpha * libm::pow(p, self.alpha - 1.0))
    }

    /// Perceived cost. Zero exactly at the reference point, strictly
    /// increasing, sign matching `c - c_star`. Inputs are clamped to
    /// `MAX_ABS_COST` so the exponential cannot overflow.
    pub fn value(&self, c: f64) -> f64 {
        match self.value_family {
            ValueFamily::Exponential => {
                let c = c.clamp(-MAX_ABS_COST, MAX_ABS_COST);
                let r = self.c_star.clamp(-MAX_ABS_COST, MAX_ABS_COST);
                if c == r {
                    0.0
                } else {
                    libm::exp(c) - libm::exp(r)
                }
            }
            ValueFamily::Linear => c - self.c_star,
        }
    }

    /// Derivative of the value function, used by delta-method error bars.
    pub fn value_deriv(&self, c: f64) -> f64 {
        match self.value_family {
            ValueFamily::Exponential => libm::exp(c.clamp(-MAX_ABS_COST, MAX_ABS_COST)),
            ValueFamily::Linear => 1.0,
        }
    }

    /// Classifies by exact comparison of `alpha` against 1: the exponent is
    /// user-chosen, so equality is a deliberate input, not noise.
    pub fn attitude(&self) -> AttitudeClass {
        if self.alpha < 1.0 {
            AttitudeClass::Optimist
        } else if self.alpha > 1.0 {
            AttitudeClass::Pessimist
        } else {
            AttitudeClass::Unbiased
        }
    }

    pub fn cost_regime(&self, costs: &CostMatrix) -> CostRegime {
        if self.c_star <= costs.min() {
            CostRegime::Type1
        } else if self.c_star >= costs.max() {
            CostRegime::Type2
        } else {
            CostRegime::Mixed
        }
    }
}

impl AttitudeClass {
    /// Inflection point of the weight function within the general S-shaped
    /// family; the power family only realizes the extremes. `None` for the
    /// unbiased agent, whose identity weight has no inflection.
    pub fn p_star(&self) -> Option<f64> {
        match self {
            AttitudeClass::Optimist => Some(1.0),
            AttitudeClass::Pessimist => Some(0.0),
            AttitudeClass::Unbiased => None,
        }
    }
}

impl CostMatrix {
    /// Requires all four costs finite and small enough for the exponential
    /// value function.
    pub fn new(c00: f64, c01: f64, c10: f64, c11: f64) -> Result<Self> {
        for (name, c) in [("c00", c00), ("c01", c01), ("c10", c10), ("c11", c11)] {
            if !c.is_finite() || c.abs() > MAX_ABS_COST {
                return Err(Error::InvalidScenario {
                    field: "costs",
                    message: format!("{name} must be finite with |{name}| <= {MAX_ABS_COST}, got {c}"),
                });
            }
        }
        Ok(Self { c00, c01, c10, c11 })
    }

    /// The symmetric matrix used throughout the worked examples:
    /// correct decisions cost `c_l`, errors cost `c_u`.
    pub fn symmetric(c_l: f64, c_u: f64) -> Result<Self> {
        Self::new(c_l, c_u, c_u, c_l)
    }

    pub fn min(&self) -> f64 {
        self.c00.min(self.c01).min(self.c10).min(self.c11)
    }

    pub fn max(&self) -> f64 {
        self.c00.max(self.c01).max(self.c10).max(self.c11)
    }

    /// Soft sanity checks: errors are normally at least as costly as correct
    /// decisions. Violations are legal (the optimization stays well defined)
    /// but usually indicate a mistyped config, so callers surface these as
    /// warnings rather than rejecting.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.c10 < self.c00 {
            out.push(format!(
                "c10 ({}) < c00 ({}): a false alarm costs less than a correct rejection",
                self.c10, self.c00
            ));
        }
        if self.c01 < self.c11 {
            out.push(format!(
                "c01 ({}) < c11 ({}): a miss costs less than a correct detection",
                self.c01, self.c11
            ));
        }
        out
    }
}
