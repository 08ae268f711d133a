use thiserror::Error;

/// Errors produced by scenario validation, the solver, and the simulator.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the callee's domain.
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    /// A scenario field failed validation.
    #[error("invalid {field}: {message}")]
    InvalidScenario {
        field: &'static str,
        message: String,
    },

    /// The Bayes likelihood-ratio threshold is undefined for these costs.
    #[error("degenerate costs: {detail} (need c01 > c11 and c10 > c00)")]
    DegenerateCosts { detail: String },

    /// Root polishing ran out of iterations; carries the best point found.
    #[error("iteration budget exceeded; best x={best_x}, f={best_f}")]
    IterationBudget { best_x: f64, best_f: f64 },

    /// A sweep step produced an invalid scenario.
    #[error("sweep step {step} (value {value}): {source}")]
    SweepStep {
        step: usize,
        value: f64,
        #[source]
        source: Box<Error>,
    },

    /// A simulation report was compared against a different scenario or rule.
    #[error("report digest {report:#018x} does not match scenario digest {expected:#018x}")]
    ReportMismatch { report: u64, expected: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
