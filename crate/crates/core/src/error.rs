use thiserror::Error;

/// Errors raised by exact arithmetic and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is singular: no nonzero pivot in column {column}")]
    Singular { column: usize },

    #[error("matrix must be square and non-empty (got {rows} rows, row {bad_row} has {cols} entries)")]
    NotSquare {
        rows: usize,
        bad_row: usize,
        cols: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("entry ({row},{col}) is not in Q(sqrt5): {value}")]
    NotScalar {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("zero diagonal entry at {index}: normalized pairing is undefined, use raw pairing")]
    ZeroDiagonal { index: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
