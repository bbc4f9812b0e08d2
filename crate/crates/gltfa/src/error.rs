//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Column and row indices carried by variants are 0-based; `Display`
/// renders them 1-based to match the serialized formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix entries must be finite")]
    NonFiniteEntry,

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is rank deficient")]
    RankDeficient,

    #[error("column {} of the sparsity pattern is entirely zero", .0 + 1)]
    ZeroColumn(usize),

    #[error("not a GLT structure: {0}")]
    NotGlt(String),

    #[error(
        "variance underflow in row {}: loading^2 = {loading_sq} >= idiosyncratic variance {idio}",
        .row + 1
    )]
    VarianceUnderflow {
        row: usize,
        loading_sq: f64,
        idio: f64,
    },

    #[error("row {} is already a pivot row of an existing column", .0 + 1)]
    PivotCollision(usize),

    #[error("spurious loading must be nonzero")]
    ZeroSpuriousLoading,

    #[error("active columns fail the counting rule; draw is not variance identified")]
    NotIdentified,

    #[error("enumeration budget exceeded: {combinations} combinations requested, budget {budget}")]
    BudgetExceeded { combinations: u128, budget: u128 },

    #[error("archive contains no draws")]
    EmptyArchive,

    #[error("invalid scenario layout: {0}")]
    InvalidLayout(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
