use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    #[error("series undefined at n = {n}: lower parameter {param} is a nonpositive integer")]
    UndefinedSeries { n: i64, param: Rational },

    #[error("division by the zero operator")]
    ZeroDivisor,

    #[error("operator is zero")]
    ZeroOperator,

    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(i64, i64),

    #[error("factor {kind}_{index} (c = {c:?}) has an identically vanishing denominator")]
    DegenerateFactor {
        kind: &'static str,
        index: i64,
        c: Option<Rational>,
    },

    #[error("degenerate factor outside the truncation window: {0}")]
    UnexpectedDegeneracy(String),

    #[error("entry {entry} does not apply: {reason}")]
    EntryConstraint { entry: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
