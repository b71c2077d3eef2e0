use thiserror::Error;

/// Errors raised by the exact linear algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("{op}: matrix is not square ({rows}x{cols})")]
    NotSquare { op: &'static str, rows: usize, cols: usize },

    #[error("{op}: dimension mismatch ({left:?} vs {right:?})")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    /// A 1-based index or an order parameter fell outside its admissible range.
    #[error("{what} = {value} is out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    /// Raised by the limit evaluation when the numerator vanishes to a lower
    /// order than the denominator. Valid inputs never reach this.
    #[error("limit diverges: numerator order {num_order} < denominator order {den_order}")]
    LimitDiverges { num_order: usize, den_order: usize },

    #[error("matrix has index > 1 (index {0})")]
    IndexTooLarge(usize),

    /// The two determinantal routes of a solver disagreed; this is a bug.
    #[error("representation mismatch at entry ({row}, {col})")]
    RepresentationMismatch { row: usize, col: usize },

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
