use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("weight mismatch")]
    WeightMismatch,
    #[error("malformed generator: {0}")]
    MalformedToken(String),
    #[error("unsupported regime: {0}")]
    Unsupported(String),
    #[error("algebra is infinite-dimensional: {0}")]
    InfiniteDimensional(String),
    #[error("non-associative structure constants: {0}")]
    NonAssociative(String),
    #[error("d^2 != 0: {0}")]
    NotAComplex(String),
    #[error("non-split semisimple block: {0}")]
    NonSplit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
