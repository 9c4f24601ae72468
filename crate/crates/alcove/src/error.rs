use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum AlcoveError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("positive-root index {index} out of range (have {count})")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("coordinate vector has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("vector is not dominant: {0}")]
    NonDominant(String),
    #[error("vector is not a lattice element: {0}")]
    NotLattice(String),
    #[error("negative coefficient in height computation: {0}")]
    NegativeHeight(String),
    #[error("gallery index {index} out of range (p = {p})")]
    GalleryIndexOutOfRange { index: usize, p: usize },
    #[error("malformed gallery: {0}")]
    MalformedGallery(String),
    #[error("gallery types do not match")]
    TypeMismatch,
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid Maya set: {0}")]
    InvalidMaya(String),
    #[error("method precondition failed: {0}")]
    MethodPrecondition(String),
    #[error("quiver mismatch: {0}")]
    QuiverMismatch(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("unsupported rank for this operation: {0}")]
    UnsupportedRank(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, AlcoveError>;
