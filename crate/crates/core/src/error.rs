use alloc::string::String;

/// Errors reported by the solvers and problem constructors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index {index} out of range for {n} variables")]
    InvalidIndex { index: usize, n: usize },
    #[error("quadratic form is not convex (smallest eigenvalue {min_eigenvalue:e})")]
    NotConvex { min_eigenvalue: f64 },
    #[error("iteration limit of {iterations} reached (residual {residual:e})")]
    IterationLimit { iterations: usize, residual: f64 },
    #[error("problem with {n} variables exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("all correlators vanish; no variable can be eliminated")]
    AmbiguousElimination,
    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
