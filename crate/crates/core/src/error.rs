use thiserror::Error;

/// Errors raised by the library. Identity mismatches are not errors; they are
/// reported through [`crate::Witness`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} on empty vector")]
    EmptyVector(&'static str),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("{what} budget exceeded: n = {n} > limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
