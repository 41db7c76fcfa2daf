use thiserror::Error;

use crate::bicomplex::Bidegree;

/// Which bicomplex identity failed during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    DelSquared,
    DelbarSquared,
    Anticommute,
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Identity::DelSquared => "∂∂ ≠ 0",
            Identity::DelbarSquared => "∂̄∂̄ ≠ 0",
            Identity::Anticommute => "∂∂̄ + ∂̄∂ ≠ 0",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("subspace inclusion fails")]
    NotASubspace,
    #[error("matrix shape mismatch at {0}: {1}")]
    ShapeMismatch(Bidegree, String),
    #[error("not a bicomplex at {0}: {1}")]
    NotABicomplex(Bidegree, Identity),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("inconsistent multiplicity table: {0}")]
    Inconsistent(String),
    #[error("characterizations disagree: {0}")]
    CharacterizationMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graded piece in degree {degree} has dimension {dim}, above the cap {cap}")]
    InfiniteDimensional { degree: usize, dim: usize, cap: usize },
    #[error("minimal model did not stabilize: {0}")]
    NotStabilized(String),
    #[error("no Poincaré duality: {0}")]
    NoPoincareDuality(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    /// True for errors that indicate a bug (broken internal invariant) rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_) | Error::CharacterizationMismatch(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
