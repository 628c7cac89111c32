use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside [0, {n})")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("{what}: size {actual} exceeds the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("spectrum has no zero eigenvalue to consume")]
    NoZeroEigenvalue,
    #[error("negative eigenvalue {0}")]
    NegativeEigenvalue(f64),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("variance is zero, distance undefined")]
    DegenerateVariance,
    #[error("all coefficients are zero")]
    ZeroDistribution,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for errors raised by enumeration or size guards rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
