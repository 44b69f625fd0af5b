use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation of a negative power at zero")]
    ZeroBase,
    #[error("power iteration did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("ill-formed fusion data: {0}")]
    IllFormed(String),
    #[error("boundary point count {0} is odd")]
    OddBoundary(usize),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("loop parameters differ")]
    ParameterMismatch,
    #[error("quantum integer [{0}] vanishes")]
    QuantumIntegerZero(usize),
    #[error("center has {found} invertible simples, expected {expected}")]
    NotPointedCenter { found: usize, expected: usize },
    #[error("entry {0} is not a root of unity of its order")]
    NotRootOfUnity(String),
    #[error("non-integral fusion coefficient at ({0}, {1}, {2})")]
    NonIntegralFusion(usize, usize, usize),
    #[error("{0}")]
    Format(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
