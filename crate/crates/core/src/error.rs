//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator index {index} out of range 1..={theta}")]
    IndexOutOfRange { index: usize, theta: usize },
    #[error("element is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("degree length {got} does not match rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("total degree {requested} exceeds cutoff {cutoff}")]
    CutoffExceeded { requested: i64, cutoff: i64 },
    #[error("ill-formed relation: {0}")]
    IllFormedRelation(String),
    #[error("m_{{{i},{j}}} is undefined for this braiding")]
    UndefinedM { i: usize, j: usize },
    #[error("unknown catalog tag `{0}`")]
    UnknownTag(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ground fields do not match: {0}")]
    FieldMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax { position, message: message.into() }
    }
}
