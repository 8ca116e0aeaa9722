//! Exact arithmetic: parameter polynomials, the field `Q(q,t,a)`, and
//! Laurent polynomials in `x_1..x_n` over it.

pub mod field;
pub mod gcd;
pub mod parampoly;
pub mod parse;
pub mod point;
pub mod xpoly;

pub use field::{pochhammer, FieldElem, SignedMonomial};
pub use parampoly::{Exp3, ParamPoly};
pub use point::Point;
pub use xpoly::{sum_fields, ExpVec, XMono, XPolynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by a non-constant polynomial")]
    NonConstantDivisor,
}
