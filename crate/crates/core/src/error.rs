use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(i64, i64),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {0:?}: {1}")]
    ParseScalar(String, String),
    #[error("bidegree mismatch: ({0},{1}) vs ({2},{3})")]
    BidegreeMismatch(u32, u32, u32, u32),
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("duplicate point in point set: {0}")]
    DuplicatePoint(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("cross ratio needs four pairwise distinct points")]
    DegenerateCrossRatio,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle bound too small: {0}")]
    BoundTooSmall(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
