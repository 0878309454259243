use thiserror::Error;

/// Errors raised by core operations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("zero entry at ({row},{col}) prevents dephasing")]
    ZeroPivot { row: usize, col: usize },

    #[error("entry at ({row},{col}) is not within {tol} of a {q}th root of unity")]
    NotRootOfUnity { row: usize, col: usize, q: usize, tol: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("sequence products differ: {0} vs {1}")]
    ProductMismatch(u64, u64),

    #[error("required block pattern not found")]
    PatternNotFound,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
