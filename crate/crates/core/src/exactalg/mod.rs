//! Exact arithmetic kernel.
//!
//! Everything downstream reduces to computations in sparse multivariate
//! polynomials over `Q` with indexed variable alphabets, so correctness and
//! canonical forms live here: exact rational coefficients, a fixed term
//! order for deterministic output, the relation ring `S` (sum-zero `a`
//! variables), reduced fractions, and fraction-free determinants.

mod det;
mod fraction;
mod gcd;
mod poly;
mod sring;

pub use det::{det, det_brute_force};
pub use fraction::RationalFunction;
pub use gcd::poly_gcd;
pub use poly::{Monomial, Polynomial, VarFamily, VarId};
pub use sring::SRing;

use thiserror::Error;

pub type Rat = num_rational::BigRational;

/// Errors surfaced by the exact arithmetic kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgError {
    /// Exact division failed; for pipeline identities this signals a broken
    /// identity rather than a user error, so it carries both operands.
    #[error("polynomial division left a nonzero remainder: ({0}) not divisible by ({1})")]
    NotDivisible(String, String),
    #[error("matrix is not square: {rows} rows, {cols} cols")]
    NonSquare { rows: usize, cols: usize },
    #[error("zero denominator")]
    ZeroDenominator,
}

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(n))
}
