use thiserror::Error;

/// Errors raised by constructors, builders and solvers in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("hypergraph has no edges; the complex is empty")]
    Edgeless,

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("degree mismatch: {0}")]
    Degree(String),

    #[error("face {0} is not a basis element of this complex")]
    NotInBasis(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("linear system has no solution: {0}")]
    Inconsistent(String),

    #[error("unsupported family: {0}")]
    Unsupported(String),

    #[error("wrong complex kind: {0}")]
    WrongKind(String),

    #[error("complex is not closed under the permutation {0}")]
    NotClosed(String),

    #[error("boundary of boundary is nonzero at degree {0}")]
    BoundarySquared(isize),

    #[error("facet list does not match the maximal faces: {0}")]
    FacetMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
