use thiserror::Error;

/// Errors produced by the power engine and its supporting modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative routine stopped before reaching its accuracy target.
    /// Carries the best available estimate so callers can decide whether
    /// the result is still usable.
    #[error("accuracy error: {message} (best estimate {estimate:e}, estimated error {est_error:e})")]
    Accuracy {
        message: String,
        estimate: f64,
        est_error: f64,
    },

    /// A design matrix or stratum-indicator system is singular.
    #[error("rank deficiency: {0}")]
    RankDeficient(String),

    /// A sample-size target cannot be met below the search cap.
    #[error("unreachable target: {0}")]
    Unreachable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
