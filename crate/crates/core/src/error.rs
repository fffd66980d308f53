use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("input is linearly dependent")]
    LinearlyDependent,
    #[error("degree {degree} exceeds ambient bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("not a flag: basis matrix is singular")]
    SingularFlag,
    #[error("determinant ad - bc must equal 1, got {0}")]
    NotUnimodular(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
