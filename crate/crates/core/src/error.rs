use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} appears in no facet")]
    GhostVertex { vertex: usize },

    #[error("{n} vertices requested; at most 64 are supported")]
    TooManyVertices { n: usize },

    #[error("face is not in the complex")]
    FaceNotInComplex,

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("subset sweep over {n} vertices exceeds the budget of {limit} for {field}")]
    ResourceLimit {
        n: usize,
        limit: usize,
        field: String,
    },

    #[error("the Stanley-Reisner ideal is zero (the complex is a simplex)")]
    ZeroIdeal,

    #[error("complex is not Cohen-Macaulay")]
    NotCohenMacaulay,

    #[error("skip sequence must start at 1 and be strictly increasing")]
    NonIncreasingSkips,

    #[error("sizes must be distinct, increasing, and lie in [2, n]")]
    SingularSystem,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),

    #[error("complex is not flag")]
    NotFlag,
}

pub type Result<T> = std::result::Result<T, Error>;
