//! The SL_n centralizer family in coordinates.
//!
//! The upper-triangular matrix `z` is generated by its first row
//! (`z_{11} = 1`, `z_{1,1+p} = g_p`) through the commutation recursion
//! `z_{ij} = z_{i-1,j-1} + (a_{i-1} - a_j) z_{i-1,j}`. Minors of the first
//! `k` rows realize affine Schubert classes; ratios of the distinguished
//! minors `D_i`, `D_i'` realize Kostant's solution of the Toda lattice.

mod entry;
mod kostant;
mod matrix;
mod phi;

pub use entry::EntryPoly;
pub use kostant::{DFraction, KostantImage};
pub use matrix::{CentralizerMatrix, CentralizerMutation};
pub use phi::PhiTilde;

use thiserror::Error;

use crate::exactalg::AlgError;
use crate::peterson::PetersonError;

#[derive(Debug, Clone, Error)]
pub enum CentralizerError {
    #[error("partition {0} does not fit in the {1}x{2} box")]
    BoxViolation(String, usize, usize),
    #[error("ratio is not degree-balanced: numerator degree {num}, denominator degree {den}")]
    IllBalanced { num: u32, den: u32 },
    #[error(transparent)]
    Peterson(#[from] PetersonError),
    #[error(transparent)]
    Alg(#[from] AlgError),
}
