use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative solver ran out of iterations.
    #[error("no convergence after {iterations} iterations: {context}")]
    NonConvergence { iterations: usize, context: String },

    /// The derivative of W_L is unbounded at a branch point.
    #[error("derivative is singular at branch point y = {0}")]
    Singular(f64),

    /// Deformation parameters in a sign region with no branch rule.
    #[error("uncovered deformation region: {0}")]
    UncoveredRegion(String),

    /// A logarithm or power argument of a heat function is not positive.
    #[error("non-physical region: {0}")]
    NonPhysical(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn no_convergence(iterations: usize, context: impl Into<String>) -> Self {
        Error::NonConvergence {
            iterations,
            context: context.into(),
        }
    }
}
