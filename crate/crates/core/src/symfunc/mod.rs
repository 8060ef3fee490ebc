//! A truncated model of the symmetric-series Hopf algebra in the `y`
//! alphabet with generic equivariant parameters `a_i`, `i` any integer.
//!
//! Everything is expanded on the classical `e_j[y]` basis and truncated at
//! a configurable `y`-degree; identities hold modulo that degree. The
//! generic `a`-alphabet is deliberately not reduced modulo `n` here — the
//! modular dictionary enters only through `kdouble_small`.

mod duale;
mod schur;
mod series;

pub use duale::{dual_e_family, omega_ratio, DualBasis};
pub use schur::{classical_schur_in_e, dual_schur, kdouble_small, DualSchurName};
pub use series::TruncatedSeries;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymfuncError {
    #[error("the two Jacobi-Trudi determinants disagree for {0}")]
    DeterminantMismatch(String),
    #[error("partition {0} has main hook length {1} > n-1 = {2}; outside the small regime")]
    HookTooLarge(String, u32, u32),
}
