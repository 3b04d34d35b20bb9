//! Exact coefficients: the tower Q(ζ_N)(t₁, …, t_m).

mod cyclotomic;
mod parse;
mod poly;
mod scalar;

pub use scalar::{Field, FieldSpec, Monomial, Order, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("zero scalar has no multiplicative order")]
    ZeroScalar,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("denominator vanishes under specialization")]
    DenominatorVanishes,
    #[error("no value assigned to parameter {0:?}")]
    MissingAssignment(String),
    #[error("incompatible fields: {0}")]
    IncompatibleField(String),
}
