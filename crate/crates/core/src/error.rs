use thiserror::Error;

/// Errors reported by the enumeration library.
///
/// Internal identity violations (two algebraic routes disagreeing where a
/// proved identity says they must agree) are *not* errors: those panic, since
/// they indicate a bug rather than bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not an involution: {0}")]
    NotAnInvolution(String),

    #[error("pattern constraint violated: {0}")]
    PatternViolation(String),

    #[error("malformed label vector: {0}")]
    MalformedLabel(String),

    #[error("enumeration bound exceeded: requested {requested}, limit {limit} ({what})")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("invalid partition shape: {0}")]
    InvalidShape(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("route `{route}` does not support this query: {reason}")]
    UnsupportedQuery { route: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
