//! Exact arithmetic: rationals, polynomials, matrices and matrix polynomials.

mod matpoly;
mod matrix;
mod poly;
pub mod rational;

pub use matpoly::{interpolate_scalar, lagrange_basis, lagrange_interpolate, minimal_polynomial, MatrixPoly};
pub use matrix::ExactMatrix;
pub use poly::{is_squarefree, Poly, RationalFunction};
pub use rational::{frac, int, parse_rational, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("shape mismatch")]
    ShapeMismatch,
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(Rational),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division leaves a remainder")]
    NotDivisible,
    #[error("linear system has more than one solution")]
    Underdetermined,
    #[error("parse error: {0}")]
    Parse(String),
}
