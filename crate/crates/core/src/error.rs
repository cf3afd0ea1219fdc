use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ImspeError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("design points {i} and {j} coincide; the correlation matrix is singular")]
    CoincidentPoints { i: usize, j: usize },

    #[error("linear solve is ill-conditioned (estimated condition number {condition:.3e})")]
    IllConditioned { condition: f64 },

    #[error("twin points x1 = x2 = {x}: use the cluster expansion at zero separation")]
    TwinPoint { x: f64 },

    #[error("quadrature did not converge on [{lo}, {hi}] within depth {max_depth}")]
    QuadratureFailure { lo: f64, hi: f64, max_depth: u32 },
}

pub type Result<T> = std::result::Result<T, ImspeError>;

pub(crate) fn invalid(msg: impl Into<String>) -> ImspeError {
    ImspeError::InvalidArgument(msg.into())
}
