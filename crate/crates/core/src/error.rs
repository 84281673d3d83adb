use thiserror::Error;

/// Errors produced by matrix, state and measure operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("entry buffer has length {len}, expected {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("{op}: incompatible dimensions {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |A - A^dagger| = {residual:e} exceeds {tol:e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e}")]
    NotPsd { eigenvalue: f64 },

    #[error("state is not normalized: deviation {deviation:e}")]
    NotNormalized { deviation: f64 },

    #[error("density matrix trace deviates from 1 by {deviation:e}")]
    BadTrace { deviation: f64 },

    #[error("dimension {dim} is not a power of two")]
    NotQubitDimension { dim: usize },

    #[error("{op} requires dimension {expected}, got {found}")]
    WrongDimension {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystems(String),

    #[error("invalid parameter {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("{op} is defined only for theta = 0, got theta = {theta}")]
    OutOfFamily { op: &'static str, theta: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numerical inconsistency in {quantity}: {value:e}")]
    NumericalInconsistency { quantity: &'static str, value: f64 },

    #[error("rank {rank} out of range for dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },

    #[error("malformed density-matrix file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
