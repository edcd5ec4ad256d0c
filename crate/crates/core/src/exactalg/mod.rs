//! Exact arithmetic: rationals and sparse multivariate polynomials over them.

mod parse;
mod poly;
mod rational;

use thiserror::Error;

pub use poly::{Monomial, Polynomial, VarId, NUM_VARS};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("variable {0} is not assigned")]
    MissingVariable(VarId),
    #[error("unsupported reduction relation: {0} (expected a monomial or binomial with the leading variable)")]
    UnsupportedRelation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
}
