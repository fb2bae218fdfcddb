use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    EmptyPermutation,

    #[error("invalid permutation token `{0}`")]
    InvalidToken(String),

    #[error("{images:?} is not a permutation of 1..={n}")]
    NotABijection { n: usize, images: Vec<usize> },

    #[error("index ({p}, {q}) is out of range for n = {n}")]
    IndexOutOfRange { n: usize, p: usize, q: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("box ({row}, {col}) lies outside the {n}x{n} grid")]
    OutsideGrid { n: usize, row: usize, col: usize },

    #[error("box ({row}, {col}) lies on or below the antidiagonal for n = {n}")]
    OutsideStaircase { n: usize, row: usize, col: usize },

    #[error("grid size {0} exceeds the supported maximum of {max}", max = crate::MAX_GRID)]
    GridTooLarge(usize),

    #[error("n = {n} exceeds the oracle bound of {max}")]
    OracleBound { n: usize, max: usize },

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
