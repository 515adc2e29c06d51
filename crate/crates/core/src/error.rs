use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: u32,
        right: String,
        right_size: u32,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("series constant term must be {expected} for {op}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
