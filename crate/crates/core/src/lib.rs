//! Optimal binary hypothesis testing for behavioral agents.
//!
//! A classical detector picks the likelihood-ratio threshold that
//! minimizes expected cost. An agent who distorts probabilities (hope,
//! dread) and costs (diminishing or growing sensitivity) perceives a
//! different objective over the same receiver operating curve, and its
//! optimum can sit at a corner (never/always alarm) or at an interior
//! threshold the classical analysis would reject.
//!
//! The crate is organized in layers:
//!
//! * [`prospect`]: probability weighting `w(p) = p^alpha`, cost
//!   valuation `v(c) = e^c - e^{c*}` (or linear), agent taxonomy.
//! * [`detection`]: Gaussian shift-in-noise channel, its ROC and
//!   likelihood-ratio rules, Q-function machinery.
//! * [`risk`]: perceived and classical risk of an operating point, the
//!   scenario type bundling priors, agent, costs, and channel.
//! * [`solver`]: shape classification of the perceived risk along the
//!   ROC and the matching minimization strategy (corner pick, interior
//!   first-order solve, or global grid search), plus parameter sweeps.
//! * [`sim`]: seeded Monte Carlo validation of analytic claims.
//!
//! ```
//! use bht_core::{
//!     solve, AgentProfile, CostMatrix, GaussianShiftModel, Priors, Scenario, SolverConfig,
//! };
//!
//! let scenario = Scenario::new(
//!     Priors::new(0.25).unwrap(),
//!     AgentProfile::new(0.5, 2.0).unwrap(), // optimist, gain-framed costs
//!     CostMatrix::symmetric(-1.0, 1.0).unwrap(),
//!     GaussianShiftModel::new(1.0).unwrap(),
//! );
//! let report = solve(&scenario, &SolverConfig::default()).unwrap();
//! assert!(report.point.x > 0.0 && report.point.x < 1.0);
//! assert!(report.risk.f <= report.bayes_baseline.risk.f + 1e-12);
//! ```

pub mod detection;
pub mod error;
pub mod prospect;
pub mod risk;
pub mod sim;
pub mod solver;

pub use detection::{
    bayes_rule, point_to_rule, q, q_inv, roc, roc_deriv, rule_to_point, BayesMode, DecisionRule,
    GaussianShiftModel, OperatingPoint, Priors,
};
pub use error::{Error, Result};
pub use prospect::{
    AgentProfile, AttitudeClass, CostMatrix, CostRegime, ValueFamily, MAX_ABS_COST,
};
pub use risk::{RiskBreakdown, Scenario};
pub use sim::{compare, simulate, Deviation, DeviationSummary, SimulationReport};
pub use solver::{
    classify_shape, corner_solution, interior_solution, solve, sweep, BayesBaseline, Method,
    Provenance, ShapeClass, ShapeLabel, SolveReport, SolverConfig, SweepParam,
};
