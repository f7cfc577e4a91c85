//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("arena mismatch: {0}")]
    ArenaMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),
    #[error("point does not lie on the variety: {0}")]
    PointNotOnVariety(String),
    #[error("embedding dimension is not 3: {0}")]
    EmbeddingDimension(String),
    #[error("local ideal is not a hypersurface: {0}")]
    NotHypersurface(String),
    #[error("truncation order too small: {0}")]
    TruncationTooSmall(String),
    #[error("almost-general-position violated: {0}")]
    AlmostGeneralPosition(String),
    #[error("basis choice does not span the linear system: {0}")]
    BasisNotInSystem(String),
    #[error("cubic-system dimension mismatch: {0}")]
    ConditionDependence(String),
    #[error("invalid catalog entry or index: {0}")]
    InvalidEntry(String),
    #[error("wall-clock budget exceeded")]
    BudgetExceeded,
    #[error("internal error: {0}")]
    Internal(String),
}
