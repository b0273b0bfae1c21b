use thiserror::Error;

/// Errors produced by the exact kernels in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed combinatorial input: a non-involutive permutation, a facet
    /// referencing a missing vertex, a pair that is not a subcomplex, and so on.
    #[error("structural error: {0}")]
    Structure(String),

    /// An operation was invoked outside the hypotheses under which its
    /// formula is established.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A degree or index outside the range the formulas determine.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Input data contradicts itself, e.g. a half-integral value where an
    /// integer is forced, or two independent routes to the same number
    /// disagreeing.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
