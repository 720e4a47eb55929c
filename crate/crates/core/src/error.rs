use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}: images must be a bijection on 1..k")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid partition {0:?}: parts must be non-increasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid tableau {0:?}: {1}")]
    InvalidTableau(Vec<Vec<usize>>, &'static str),

    #[error("invalid injection {images:?} into [{target}]")]
    InvalidInjection { images: Vec<usize>, target: usize },

    #[error("cannot compose maps: {0}")]
    Composition(String),

    #[error("new top row of length {n} is shorter than the first row {first} of the diagram")]
    TopRowTooShort { n: usize, first: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("presentation entry ({row}, {col}) has arities {found:?}, expected {expected:?}")]
    EntryArity {
        row: usize,
        col: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("presentation index ({row}, {col}) out of range for a {rows}x{cols} presentation")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("degree {n} needs {rows} ambient rows, above the oracle cap of {cap}")]
    ResourceCap { n: usize, rows: usize, cap: usize },

    #[error("inconsistent decomposition: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
