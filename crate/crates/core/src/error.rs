use thiserror::Error;

/// Errors raised by evaluation, quadrature and relation detection.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge after {levels} levels (best estimate {estimate}, error estimate {error_estimate:e})")]
    NoConvergence {
        levels: u32,
        estimate: String,
        error_estimate: f64,
    },

    #[error("integrand evaluation failed at node {0}")]
    Evaluation(String),

    #[error(
        "integrand has a declared singularity at {0} inside the interval; split the interval there"
    )]
    InteriorSingularity(String),

    #[error("integer relation search exhausted working precision after {iterations} iterations")]
    PrecisionExhausted { iterations: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
