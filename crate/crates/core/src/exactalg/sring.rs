//! The relation ring `S = Q[a_1,...,a_n]/(a_1+...+a_n)`.
//!
//! `S` is represented by eliminating `a_n`: the canonical coset
//! representative of a polynomial uses only `a_1..a_{n-1}`. Indices outside
//! `1..n` first fold modulo `n` (`a_{i+rn} -> a_i`).

use std::collections::BTreeMap;

use super::{Polynomial, VarFamily, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SRing {
    n: usize,
}

impl SRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "S requires n >= 2");
        SRing { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `-(a_1 + ... + a_{n-1})`, the representative of `a_n`.
    pub fn a_n_image(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for i in 1..self.n {
            p = p.sub(&Polynomial::var(VarId::a(i as i32)));
        }
        p
    }

    fn fold_index(&self, i: i32) -> i32 {
        let n = self.n as i32;
        (i - 1).rem_euclid(n) + 1
    }

    /// Canonical coset representative: all `a`-indices in `1..n-1`.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let n = self.n as i32;
        let needs_work = p.vars().into_iter().any(|v| {
            v.family == VarFamily::A && (v.index < 1 || v.index >= n)
        });
        if !needs_work {
            return p.clone();
        }
        // Fold indices mod n first, then eliminate a_n.
        let folded = p.rename_vars(|v| {
            if v.family == VarFamily::A {
                VarId::a(self.fold_index(v.index))
            } else {
                v
            }
        });
        folded.substitute(VarId::a(n), &self.a_n_image())
    }

    /// The generator `a_i` (any integer index), reduced.
    pub fn a(&self, i: i32) -> Polynomial {
        self.reduce(&Polynomial::var(VarId::a(i)))
    }

    /// Level-zero simple root `alpha_i = a_i - a_{i+1}`, indices mod `n`
    /// (so `alpha_0 = a_n - a_1`), reduced.
    pub fn alpha(&self, i: i32) -> Polynomial {
        self.a(i).sub(&self.a(i + 1))
    }

    /// Elementary symmetric polynomial `e_j(a_1,...,a_n)`, reduced.
    pub fn elementary(&self, j: usize) -> Polynomial {
        assert!(j <= self.n);
        let mut layers: Vec<Polynomial> = vec![Polynomial::zero(); j + 1];
        layers[0] = Polynomial::one();
        for i in 1..=self.n {
            let ai = Polynomial::var(VarId::a(i as i32));
            for k in (1..=j.min(i)).rev() {
                let add = layers[k - 1].mul(&ai);
                layers[k] = layers[k].add(&add);
            }
        }
        self.reduce(&layers[j])
    }

    /// Apply an index map to the `a`-variables (simultaneously on each
    /// monomial) and reduce.
    pub fn map_a_indices(&self, p: &Polynomial, f: impl Fn(i32) -> i32) -> Polynomial {
        let q = p.rename_vars(|v| {
            if v.family == VarFamily::A {
                VarId::new(VarFamily::A, f(v.index))
            } else {
                v
            }
        });
        self.reduce(&q)
    }

    /// Action of the simple reflection `s_i` (`i` mod `n`): swaps the
    /// residue classes of `i` and `i+1` on `a`-indices.
    pub fn act_simple(&self, i: i32, p: &Polynomial) -> Polynomial {
        let ci = self.fold_index(i);
        let cj = self.fold_index(i + 1);
        self.map_a_indices(p, |idx| {
            if idx == ci {
                cj
            } else if idx == cj {
                ci
            } else {
                idx
            }
        })
    }

    /// Action of `tau^k`: `a_i -> a_{i+k}` (indices mod `n`).
    pub fn act_tau_pow(&self, k: i32, p: &Polynomial) -> Polynomial {
        self.map_a_indices(p, |idx| self.fold_index(idx + k))
    }

    /// Action of a permutation of residues `1..=n` given as `perm[i-1] =
    /// image of i`.
    pub fn act_residue_perm(&self, perm: &[usize], p: &Polynomial) -> Polynomial {
        assert_eq!(perm.len(), self.n);
        self.map_a_indices(p, |idx| perm[(idx - 1) as usize] as i32)
    }

    /// Evaluation point for `a_1..a_{n-1}` extended by the sum-zero value of
    /// `a_n`; used by randomized identity tests.
    pub fn extend_point(&self, point: &mut BTreeMap<VarId, super::Rat>) {
        let mut an = super::Rat::from_integer(0.into());
        for i in 1..self.n {
            if let Some(v) = point.get(&VarId::a(i as i32)) {
                an -= v;
            }
        }
        point.insert(VarId::a(self.n as i32), an);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let s = SRing::new(3);
        // a_0 -> -a_1 - a_2
        let a0 = s.a(0);
        let expect = Polynomial::var(VarId::a(1))
            .neg()
            .sub(&Polynomial::var(VarId::a(2)));
        assert_eq!(a0, expect);
        // a_1 + a_2 + a_3 -> 0
        let sum = Polynomial::var(VarId::a(1))
            .add(&Polynomial::var(VarId::a(2)))
            .add(&Polynomial::var(VarId::a(3)));
        assert!(s.reduce(&sum).is_zero());
        // a_4 -> a_1
        assert_eq!(s.a(4), Polynomial::var(VarId::a(1)));
    }

    #[test]
    fn reduce_is_idempotent_and_multiplicative() {
        let s = SRing::new(3);
        let p = Polynomial::var(VarId::a(5)).mul(&Polynomial::var(VarId::a(0)));
        let q = Polynomial::var(VarId::a(3)).add(&Polynomial::one());
        let r1 = s.reduce(&p.mul(&q));
        let r2 = s.reduce(&s.reduce(&p).mul(&s.reduce(&q)));
        assert_eq!(r1, r2);
        assert_eq!(s.reduce(&r1), r1);
    }

    #[test]
    fn alpha_and_elementary() {
        let s = SRing::new(3);
        // alpha_0 = a_3 - a_1 = -2a_1 - a_2 reduced
        let alpha0 = s.alpha(0);
        let expect = s.a(3).sub(&s.a(1));
        assert_eq!(alpha0, expect);
        // e_1(a) = 0 in S
        assert!(s.elementary(1).is_zero());
        // alpha_0 + alpha_1 + alpha_2 = 0
        let total = s.alpha(0).add(&s.alpha(1)).add(&s.alpha(2));
        assert!(total.is_zero());
    }

    #[test]
    fn simple_reflection_action() {
        let s = SRing::new(3);
        // s_0 swaps a_1 and a_3
        assert_eq!(s.act_simple(0, &s.a(1)), s.a(3));
        assert_eq!(s.act_simple(0, &s.a(3)), s.a(1));
        assert_eq!(s.act_simple(0, &s.a(2)), s.a(2));
        // tau shifts residues
        assert_eq!(s.act_tau_pow(1, &s.a(1)), s.a(2));
        assert_eq!(s.act_tau_pow(1, &s.a(3)), s.a(1));
    }
}
