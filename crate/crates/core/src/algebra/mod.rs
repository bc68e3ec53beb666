//! Exact scalar, polynomial, rational-function and quadratic-extension
//! arithmetic. Nothing here touches floating point.

mod multipoly;
mod poly;
mod quadext;
mod ratfunc;
mod ring;
mod scalar;

pub use multipoly::{Alphabet, MultiPoly};
pub use poly::{poly_arith, Poly, PolyOp, PolyValue};
pub use quadext::QuadExt;
pub use ratfunc::RationalFunction;
pub use ring::Ring;
pub use scalar::{
    binomial, double_factorial_odd, factorial, int, is_nonnegative, parse_scalar, pow_i64, ratio, Scalar,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial has support outside the window [{low}, {high}]")]
    SupportOutOfRange { low: usize, high: usize },
    #[error("quadratic extension elements have different discriminants")]
    DiscriminantMismatch,
    #[error("polynomial alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("rational function is not a polynomial")]
    NotAPolynomial,
    #[error("cannot parse `{0}`")]
    Parse(String),
}
