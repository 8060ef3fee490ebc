//! Finite, affine, and extended affine Weyl groups of type A.
//!
//! Elements of `W_af = ~S_n` are affine permutations in window notation;
//! the extended group `W_e = Sigma ⋉ W_af` carries an extra rotation power.
//! Windows are the canonical form — words are derived.

mod affine;
mod bijection;
mod coweight;
mod partition;

pub use affine::{AffinePerm, ExtAffineElement};
pub use bijection::{grassmannian_to_partition, partition_to_grassmannian};
pub use coweight::Coweight;
pub use partition::Partition;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("window {0:?} is not an affine permutation for n={1}")]
    BadWindow(Vec<i64>, usize),
    #[error("mismatched ranks: {0} vs {1}")]
    MismatchedRank(usize, usize),
    #[error("partition {0} is not (n-1)-bounded for n={1}")]
    Unbounded(String, usize),
    #[error("partition {0} does not fit the {1}x{2} box")]
    BoxViolation(String, usize, usize),
    #[error("coweight {0:?} is not antidominant")]
    NotAntidominant(Vec<i64>),
}

/// All of `S_n` in one-line notation.
pub fn finite_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=n).collect();
    fn rec(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(v, k + 1, out);
            v.swap(k, i);
        }
    }
    rec(&mut v, 0, &mut out);
    out.sort();
    out
}

/// All elements of `W_af` of length at most `max_len`, grouped by length.
pub fn affine_elements_by_length(n: usize, max_len: usize) -> Vec<Vec<AffinePerm>> {
    let mut by_len: Vec<Vec<AffinePerm>> = vec![vec![AffinePerm::identity(n)]];
    let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    seen.insert(AffinePerm::identity(n).window().to_vec());
    for l in 1..=max_len {
        let mut layer = Vec::new();
        for w in &by_len[l - 1] {
            for i in 0..n {
                let next = w.mul_simple_right(i);
                if next.length() == l as u32 && seen.insert(next.window().to_vec()) {
                    layer.push(next);
                }
            }
        }
        layer.sort();
        by_len.push(layer);
    }
    by_len
}
