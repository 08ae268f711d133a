//! Behavioral and classical risk along the ROC, with first and second
//! derivative machinery for the solver.
//!
//! The behavioral risk splits as `f(x, y) = g(x) + h(y)` where `g` collects
//! the hypothesis-0 outcomes and `h` the hypothesis-1 outcomes:
//!
//! ```text
//! g(x) = w[pi0 (1-x)] v(c00) + w[pi0 x] v(c10)
//! h(y) = w[pi1 (1-y)] v(c01) + w[pi1 y] v(c11)
//! ```
//!
//! Restricted to the ROC this is a one-dimensional objective
//! `f(x, y(x))`, the thing every solver routine minimizes.

use crate::detection::{roc, roc_deriv, BayesMode, GaussianShiftModel, OperatingPoint, Priors};
use crate::error::Result;
use crate::prospect::{AgentProfile, CostMatrix, ValueFamily};

/// Central finite-difference step for the curvature probe.
const CURVATURE_STEP: f64 = 1e-4;

/// A complete problem instance: who decides, what it costs, and what the
/// observations look like.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub priors: Priors,
    pub profile: AgentProfile,
    pub costs: CostMatrix,
    pub model: GaussianShiftModel,
    /// Which baseline rule solve reports alongside the behavioral optimum.
    pub bayes_mode: BayesMode,
}

/// Risk of one operating point, both as the behavioral agent perceives it
/// and as a classical expected cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskBreakdown {
    /// Total behavioral risk, `g + h`.
    pub f: f64,
    /// Hypothesis-0 contribution.
    pub g: f64,
    /// Hypothesis-1 contribution.
    pub h: f64,
    /// Classical expected cost at the same point.
    pub bayes: f64,
}

/// `w'(p) * v`, with the convention that a zero value kills the term even
/// when the weight derivative diverges at `p = 0`.
fn deriv_term(wd: f64, v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        wd * v
    }
}

impl Scenario {
    pub fn new(
        priors: Priors,
        profile: AgentProfile,
        costs: CostMatrix,
        model: GaussianShiftModel,
    ) -> Self {
        Self {
            priors,
            profile,
            costs,
            model,
            bayes_mode: BayesMode::Lrt,
        }
    }

    pub fn with_bayes_mode(mut self, mode: BayesMode) -> Self {
        self.bayes_mode = mode;
        self
    }

    fn w(&self, p: f64) -> f64 {
        self.profile
            .weight(p)
            .expect("probability stays in [0,1] by construction")
    }

    fn wd(&self, p: f64) -> f64 {
        self.profile
            .weight_deriv(p)
            .expect("probability stays in [0,1] by construction")
    }

    /// Hypothesis-0 share of the behavioral risk.
    pub fn g_of_x(&self, x: f64) -> f64 {
        assert!((0.0..=1.0).contains(&x), "g_of_x argument out of [0,1]: {x}");
        let pi0 = self.priors.pi0();
        self.w(pi0 * (1.0 - x)) * self.profile.value(self.costs.c00)
            + self.w(pi0 * x) * self.profile.value(self.costs.c10)
    }

    /// Hypothesis-1 share of the behavioral risk.
    pub fn h_of_y(&self, y: f64) -> f64 {
        assert!((0.0..=1.0).contains(&y), "h_of_y argument out of [0,1]: {y}");
        let pi1 = self.priors.pi1();
        self.w(pi1 * (1.0 - y)) * self.profile.value(self.costs.c01)
            + self.w(pi1 * y) * self.profile.value(self.costs.c11)
    }

    /// Full risk breakdown at an arbitrary operating point.
    pub fn behavioral_risk(&self, point: OperatingPoint) -> RiskBreakdown {
        let g = self.g_of_x(point.x);
        let h = self.h_of_y(point.y);
        RiskBreakdown {
            f: g + h,
            g,
            h,
            bayes: self.bayes_risk(point),
        }
    }

    /// Classical expected cost
    /// `pi0 [(1-x) c00 + x c10] + pi1 [(1-y) c01 + y c11]`.
    pub fn bayes_risk(&self, point: OperatingPoint) -> f64 {
        let pi0 = self.priors.pi0();
        let pi1 = self.priors.pi1();
        pi0 * ((1.0 - point.x) * self.costs.c00 + point.x * self.costs.c10)
            + pi1 * ((1.0 - point.y) * self.costs.c01 + point.y * self.costs.c11)
    }

    /// The one-dimensional objective `f(x, y(x))` on the ROC.
    pub fn risk_along_roc(&self, x: f64) -> f64 {
        self.g_of_x(x) + self.h_of_y(roc(x, &self.model))
    }

    /// `d g / d x`.
    fn g_deriv(&self, x: f64) -> f64 {
        let pi0 = self.priors.pi0();
        pi0 * (deriv_term(self.wd(pi0 * x), self.profile.value(self.costs.c10))
            - deriv_term(self.wd(pi0 * (1.0 - x)), self.profile.value(self.costs.c00)))
    }

    /// `d h / d y`.
    fn h_deriv(&self, y: f64) -> f64 {
        let pi1 = self.priors.pi1();
        pi1 * (deriv_term(self.wd(pi1 * y), self.profile.value(self.costs.c11))
            - deriv_term(self.wd(pi1 * (1.0 - y)), self.profile.value(self.costs.c01)))
    }

    /// Analytic chain-rule derivative of `risk_along_roc`:
    /// `g'(x) + h'(y(x)) y'(x)`. Diverges toward the endpoints when the
    /// weight exponent is below one, hence the open-interval domain.
    pub fn risk_gradient(&self, x: f64) -> Result<f64> {
        let slope = roc_deriv(x, &self.model)?;
        let y = roc(x, &self.model);
        Ok(self.g_deriv(x) + self.h_deriv(y) * slope)
    }

    /// Stationarity residual in the grouping used by the interior-optimum
    /// characterization: marginal perceived cost of raising the decision
    /// rate minus the marginal perceived saving,
    ///
    /// ```text
    /// [w'(pi0 x) pi0 v(c10) + w'(pi1 y) pi1 y' v(c11)]
    ///   - [w'(pi0 (1-x)) pi0 v(c00) + w'(pi1 (1-y)) pi1 y' v(c01)]
    /// ```
    ///
    /// Algebraically identical to `risk_gradient`; evaluated in this
    /// arrangement so reported residuals line up with the published
    /// optimality equation.
    pub fn foc_residual(&self, x: f64) -> Result<f64> {
        let slope = roc_deriv(x, &self.model)?;
        let y = roc(x, &self.model);
        let pi0 = self.priors.pi0();
        let pi1 = self.priors.pi1();
        let raise = deriv_term(self.wd(pi0 * x), pi0 * self.profile.value(self.costs.c10))
            + deriv_term(
                self.wd(pi1 * y),
                pi1 * slope * self.profile.value(self.costs.c11),
            );
        let save = deriv_term(
            self.wd(pi0 * (1.0 - x)),
            pi0 * self.profile.value(self.costs.c00),
        ) + deriv_term(
            self.wd(pi1 * (1.0 - y)),
            pi1 * slope * self.profile.value(self.costs.c01),
        );
        Ok(raise - save)
    }

    /// Finite-difference second derivative of `risk_along_roc`, step 1e-4.
    ///
    /// Shape diagnosis only: the solver uses it to decide which routine to
    /// run and to certify local convexity at a reported optimum, never as
    /// the optimizer's objective.
    pub fn risk_curvature(&self, x: f64) -> f64 {
        assert!(
            (1e-3..=1.0 - 1e-3).contains(&x),
            "risk_curvature probe point out of [1e-3, 1-1e-3]: {x}"
        );
        let h = CURVATURE_STEP;
        (self.risk_along_roc(x + h) - 2.0 * self.risk_along_roc(x) + self.risk_along_roc(x - h))
            / (h * h)
    }

    /// FNV-1a hash over every parameter that affects results; simulation
    /// reports carry it so later comparisons can detect a scenario switch.
    pub fn digest(&self) -> u64 {
        let mut acc = Fnv::new();
        acc.push_f64(self.priors.pi0());
        acc.push_f64(self.profile.alpha);
        acc.push_f64(self.profile.c_star);
        acc.push_u8(match self.profile.value_family {
            ValueFamily::Exponential => 0,
            ValueFamily::Linear => 1,
        });
        acc.push_f64(self.costs.c00);
        acc.push_f64(self.costs.c01);
        acc.push_f64(self.costs.c10);
        acc.push_f64(self.costs.c11);
        acc.push_f64(self.model.shift);
        acc.push_u8(match self.bayes_mode {
            BayesMode::Lrt => 0,
            BayesMode::PriorRatio => 1,
        });
        acc.finish()
    }
}

/// Minimal FNV-1a accumulator; enough structure hashing for digests
/// without pulling in a hashing framework.
pub(crate) struct Fnv(u64);

impl Fnv {
    pub fn new() -> Self {
        Fnv(0xcbf29ce484222325)
    }

    pub fn push_u8(&mut self, b: u8) {
        self.0 ^= b as u64;
        self.0 = self.0.wrapping_mul(0x100000001b3);
    }

    pub fn push_f64(&mut self, v: f64) {
        for b in v.to_bits().to_le_bytes() {
            self.push_u8(b);
        }
    }

    pub fn push_u64(&mut self, v: u64) {
        for b in v.to_le_bytes() {
            self.push_u8(b);
        }
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}
