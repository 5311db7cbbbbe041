use thiserror::Error;

use crate::algebra::Var;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("enumeration budget exceeded: {needed} exceeds the limit of {limit}")]
    Budget { needed: u128, limit: u128 },
    #[error("division by {divisor} is not exact")]
    NonIntegral { divisor: i128 },
    #[error("result has a residual cyclotomic component")]
    NonRational,
    #[error("result has a negative coefficient: {0}")]
    NegativeCoefficient(String),
    #[error("variable {0} has no image in the substitution")]
    UnmappedVariable(Var),
    #[error("substitution image for {0} is not a polynomial")]
    NonPolynomial(Var),
    #[error("matrix is not of the form I - N*D")]
    NotAffineInD,
    #[error("entry is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("cannot bring generator to block form: {0}")]
    NoBlockForm(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
