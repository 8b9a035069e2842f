use thiserror::Error;

/// Errors surfaced by the library and the CLI.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("blade mask {mask:#x} out of range for signature of {n} generators")]
    InvalidBlade { mask: u32, n: usize },
    #[error("requested algebra too large: {0} generators (cap is 16)")]
    TooLarge(usize),
    #[error("element does not belong to algebra `{0}`")]
    AlgebraMismatch(String),
    #[error("element is not an even idempotent")]
    NotIdempotent,
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("no graded basic representative matches the input algebra")]
    UnrecognizedBasic,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator e{index} out of range for signature of {n} generators")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("unknown table kind `{0}`")]
    UnknownTable(String),
    #[error("unknown check name `{0}`")]
    UnknownCheck(String),
    #[error("out of scope: {0}")]
    Scope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
