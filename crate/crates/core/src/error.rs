use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,

    #[error("series does not vanish to order {shift} as required for shifted division")]
    InsufficientVanishing { shift: usize },

    #[error("inner series of a composition must have zero constant term")]
    NonNilpotentInner,

    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entry count {got} does not match {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        got: usize,
    },

    #[error("lonesum enumeration of {rows}x{cols} matrices exceeds the {limit}-cell limit")]
    TooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },

    #[error("degenerate parameters: ln a + ln b must be non-zero")]
    DegenerateParams,

    #[error("k-vector must contain at least one index")]
    EmptyKVector,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid k-vector {0:?}")]
    ParseKVector(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}
