use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised before or during an evaluation.
///
/// Slow convergence is not an error: it is reported through
/// [`SeriesResult::converged`](crate::SeriesResult::converged).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numerical parameter is out of its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),
    /// The argument is too close to a pole.
    #[error("pole at s = 1 (|s - 1| = {distance:e})")]
    Pole { distance: f64 },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
