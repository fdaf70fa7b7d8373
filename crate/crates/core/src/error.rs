use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={n}: {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range for n = {n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("{v:?} is not below {w:?} in Bruhat order")]
    NotBruhatLeq { v: Vec<usize>, w: Vec<usize> },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{what} guard exceeded: n = {n} > {max}")]
    GuardExceeded { what: &'static str, n: usize, max: usize },
    #[error("index sets have different sizes {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{rows:?} is not below {cols:?} in Gale order")]
    NotGaleLeq { rows: Vec<usize>, cols: Vec<usize> },
    #[error("box content {content} outside 1..{n}")]
    ContentOutOfRange { content: i64, n: usize },
    #[error("matrix is not unitriangular")]
    NotUnitriangular,
    #[error("{0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
