//! Exact scalars in ℚ(√2), half-integer indices, basis symbols, sparse vectors
//! and exact linear algebra.

mod halfint;
mod key;
mod linalg;
mod lincomb;
mod rational;
mod scalar;

pub use halfint::HalfInt;
pub use key::{BasisKey, Family, Parity};
pub use linalg::{rank, solve_exact, EchelonBasis};
pub use lincomb::{LinComb, Vector};
pub use rational::Rational;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("index {index} is not allowed for family {family}")]
    IndexParity { family: Family, index: HalfInt },
}
