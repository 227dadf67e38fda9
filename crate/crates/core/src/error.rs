use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{op}: dimension mismatch between {left_rows}x{left_cols} and {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare { op: &'static str, rows: usize, cols: usize },

    #[error("matrix entries must be finite and number rows*cols = {expected}, got {got}")]
    InvalidEntries { expected: usize, got: usize },

    #[error("state vector is not normalized (norm^2 = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("matrix is not unitary within {tol}")]
    NotUnitary { tol: f64 },

    #[error("invalid mixture: {0}")]
    InvalidMixture(String),

    #[error("expectation value has imaginary residue {residue:e} (density matrix not Hermitian?)")]
    ImaginaryResidue { residue: f64 },

    #[error("expected a 2x2 game, got {rows}x{cols}")]
    NotTwoByTwo { rows: usize, cols: usize },

    #[error("game is not symmetric at cell ({row}, {col})")]
    AsymmetricGame { row: usize, col: usize },

    #[error("{what} index {index} out of range (size {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("resolution must be at least 2, got {0}")]
    ResolutionTooSmall(usize),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("game file: {path}: {message}")]
    GameFormat { path: String, message: String },

    #[error("unknown strategy label {0:?}")]
    UnknownStrategy(String),
}
