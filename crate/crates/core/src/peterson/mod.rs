//! The Peterson centralizer subalgebra `B_e = Z_{A_e}(S)` and its `j`-basis.
//!
//! Two independent computation paths are kept for every class: the
//! constructive recursion (`j_translation`, `j_tau`, `j_tau_c`,
//! `j_partition`, twists, and rectangle stripping) and a linear solve
//! straight from the defining property (`j_solve`). The recursion is the
//! fast path; the solve is the oracle.

mod jbasis;
mod localized;
mod positivity;
mod solve;

pub use jbasis::JBasis;
pub use localized::LocalizedPetersonElement;
pub use positivity::{graham_positive, positivity_scan, ClassVerdict, PositivityReport};
pub use solve::j_solve;

use thiserror::Error;

use crate::exactalg::AlgError;
use crate::nilhecke::NilHeckeElement;

#[derive(Debug, Clone, Error)]
pub enum PetersonError {
    #[error("coweight {0} is not antidominant")]
    NotAntidominant(String),
    #[error("element {0} is not extended-Grassmannian")]
    NotGrassmannian(String),
    #[error("partition {0} violates the required box {1}x{2}")]
    BoxViolation(String, usize, usize),
    #[error("element fails the centralizer certificate: {0}")]
    NotCentral(String),
    #[error("no centralizer element supported below length {cutoff} for {w}")]
    CutoffTooSmall { w: String, cutoff: u32 },
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// A nilHecke element with certified centralizer membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersonElement {
    elem: NilHeckeElement,
}

impl PetersonElement {
    /// Certify `[alpha_i, b] = 0` for the generators of `S` and wrap.
    pub fn certify(elem: NilHeckeElement) -> Result<Self, PetersonError> {
        if !elem.commutes_with_scalars() {
            return Err(PetersonError::NotCentral(elem.to_string()));
        }
        Ok(PetersonElement { elem })
    }

    /// Wrap without re-running the certificate; for results of operations
    /// that preserve centrality (products, twists, sums).
    pub(crate) fn trusted(elem: NilHeckeElement) -> Self {
        debug_assert!(elem.commutes_with_scalars());
        PetersonElement { elem }
    }

    pub fn one(n: usize) -> Self {
        PetersonElement {
            elem: NilHeckeElement::one(n),
        }
    }

    pub fn n(&self) -> usize {
        self.elem.n()
    }

    pub fn elem(&self) -> &NilHeckeElement {
        &self.elem
    }

    pub fn into_elem(self) -> NilHeckeElement {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        PetersonElement {
            elem: self.elem.add(&other.elem),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PetersonElement {
            elem: self.elem.sub(&other.elem),
        }
    }

    pub fn scale(&self, c: &crate::exactalg::Polynomial) -> Self {
        PetersonElement {
            elem: self.elem.scale(c),
        }
    }

    /// Commutative product in `B_e`.
    pub fn mul(&self, other: &Self) -> Self {
        Self::trusted(self.elem.mul(&other.elem))
    }

    /// Dynkin twist `b -> tau^k b tau^{-k}`.
    pub fn twist(&self, k: i64) -> Self {
        Self::trusted(self.elem.twist(k))
    }

    /// The Grassmannian support with coefficients; for a `j`-class this is
    /// the single leading term.
    pub fn grassmannian_part(&self) -> Vec<(crate::weyl::ExtAffineElement, crate::exactalg::Polynomial)> {
        self.elem.grassmannian_part()
    }
}

impl std::fmt::Display for PetersonElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.elem)
    }
}

/// Determinant over a commutative family of nilHecke elements (cofactor
/// with memoized minors).
pub fn det_commutative(m: &[Vec<NilHeckeElement>], n: usize) -> NilHeckeElement {
    let k = m.len();
    if k == 0 {
        return NilHeckeElement::one(n);
    }
    let mut memo: std::collections::HashMap<u32, NilHeckeElement> = std::collections::HashMap::new();
    fn minor(
        m: &[Vec<NilHeckeElement>],
        n: usize,
        cols: u32,
        memo: &mut std::collections::HashMap<u32, NilHeckeElement>,
    ) -> NilHeckeElement {
        if cols == 0 {
            return NilHeckeElement::one(n);
        }
        if let Some(x) = memo.get(&cols) {
            return x.clone();
        }
        let k = m.len();
        let row = k - cols.count_ones() as usize;
        let mut acc = NilHeckeElement::zero(n);
        let mut negate = false;
        for j in 0..k {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let sub = minor(m, n, cols & !(1 << j), memo);
                let term = m[row][j].mul(&sub);
                acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            }
            negate = !negate;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(m, n, (1u32 << k) - 1, &mut memo)
}
