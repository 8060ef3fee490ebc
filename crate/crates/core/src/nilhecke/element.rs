//! `A_w`-basis arithmetic and the action on `S`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{Polynomial, SRing};
use crate::weyl::ExtAffineElement;

use super::demazure_action;

/// A finite sum `sum_w c_w A_w` with coefficients in `S` (reduced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilHeckeElement {
    n: usize,
    terms: BTreeMap<ExtAffineElement, Polynomial>,
}

impl NilHeckeElement {
    pub fn zero(n: usize) -> Self {
        NilHeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(ExtAffineElement::identity(n))
    }

    pub fn basis(w: ExtAffineElement) -> Self {
        Self::term(w, Polynomial::one())
    }

    pub fn term(w: ExtAffineElement, c: Polynomial) -> Self {
        let n = w.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NilHeckeElement { n, terms }
    }

    pub fn scalar(n: usize, c: Polynomial) -> Self {
        Self::term(ExtAffineElement::identity(n), c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> SRing {
        SRing::new(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffineElement, &Polynomial)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn support_lengths(&self) -> (u32, u32) {
        let min = self.terms.keys().map(|w| w.length()).min().unwrap_or(0);
        let max = self.terms.keys().map(|w| w.length()).max().unwrap_or(0);
        (min, max)
    }

    pub fn coefficient(&self, w: &ExtAffineElement) -> Polynomial {
        self.terms.get(w).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn add_term(&mut self, w: ExtAffineElement, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NilHeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    /// Left multiplication by a scalar in `S`.
    pub fn scale(&self, c: &Polynomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        NilHeckeElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Divide every coefficient exactly by `d`.
    pub fn divide_coeffs_exact(&self, d: &Polynomial) -> Result<Self, crate::exactalg::AlgError> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            terms.insert(w.clone(), c.divide_exact(d)?);
        }
        Ok(NilHeckeElement { n: self.n, terms })
    }

    /// `A_i * self` (one nilHecke generator on the left):
    /// `A_i (c A_v) = (s_i . c) A_{s_i v} [if length-additive] + (A_i . c) A_v`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let ring = self.ring();
        let si = ExtAffineElement::simple(self.n, i);
        let mut out = Self::zero(self.n);
        for (v, c) in &self.terms {
            let sv = si.mul(v);
            if sv.length() == v.length() + 1 {
                out.add_term(sv, ring.act_simple(i as i32, c));
            }
            out.add_term(v.clone(), demazure_action(&ring, i, c));
        }
        out
    }

    /// `tau^k * self`.
    pub fn left_mul_tau(&self, k: i64) -> Self {
        let ring = self.ring();
        let tau = ExtAffineElement::tau_power(self.n, k);
        let mut out = Self::zero(self.n);
        for (v, c) in &self.terms {
            out.add_term(tau.mul(v), ring.act_tau_pow(k as i32, c));
        }
        out
    }

    /// `A_w * self` for a basis element.
    fn left_mul_basis(&self, w: &ExtAffineElement) -> Self {
        let (tau, word) = w.reduced_word();
        let mut acc = self.clone();
        for &i in word.iter().rev() {
            acc = acc.left_mul_simple(i);
        }
        if tau != 0 {
            acc = acc.left_mul_tau(tau as i64);
        }
        acc
    }

    /// Noncommutative product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let part = other.left_mul_basis(w).scale(c);
            out = out.add(&part);
        }
        out
    }

    /// The nilHecke action on `S`.
    pub fn act(&self, f: &Polynomial) -> Polynomial {
        let ring = self.ring();
        let f = ring.reduce(f);
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let (tau, word) = w.reduced_word();
            let mut v = f.clone();
            for &i in word.iter().rev() {
                v = demazure_action(&ring, i, &v);
                if v.is_zero() {
                    break;
                }
            }
            if !v.is_zero() && tau != 0 {
                v = ring.act_tau_pow(tau as i32, &v);
            }
            out = out.add(&c.mul(&v));
        }
        out
    }

    /// The image of a group element under `W_e -> A_e`, expanded along the
    /// canonical reduced word. The result is word-independent.
    pub fn expand_group(w: &ExtAffineElement) -> Self {
        let (tau, word) = w.reduced_word();
        Self::expand_group_with_word(w.n(), tau, &word)
    }

    /// Expansion along a caller-chosen reduced word; used to assert
    /// word-independence.
    pub fn expand_group_with_word(n: usize, tau: u32, word: &[usize]) -> Self {
        let ring = SRing::new(n);
        let mut acc = Self::basis(ExtAffineElement::tau_power(n, tau as i64));
        for &i in word {
            // acc * (1 + alpha_i A_i)
            let si = Self::term(
                ExtAffineElement::simple(n, i),
                ring.alpha(i as i32),
            )
            .add(&Self::one(n));
            acc = acc.mul(&si);
        }
        acc
    }

    /// Conjugation by `tau^k`: relabels basis indices and `a`-indices.
    pub fn twist(&self, k: i64) -> Self {
        let ring = self.ring();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.conjugate_by_tau(k), ring.act_tau_pow(k as i32, c));
        }
        out
    }

    /// Coefficients on Grassmannian basis elements.
    pub fn grassmannian_part(&self) -> Vec<(ExtAffineElement, Polynomial)> {
        self.terms
            .iter()
            .filter(|(w, _)| w.is_grassmannian())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    /// `[f, self] = 0` for all generators `f` of `S`?
    pub fn commutes_with_scalars(&self) -> bool {
        let ring = self.ring();
        (1..self.n).all(|i| {
            let alpha = Self::scalar(self.n, ring.alpha(i as i32));
            alpha.mul(self) == self.mul(&alpha)
        })
    }
}

impl fmt::Display for NilHeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut items: Vec<(&ExtAffineElement, &Polynomial)> = self.terms.iter().collect();
        items.sort_by_key(|(w, _)| (w.length(), w.tau_part(), w.body().window().to_vec()));
        let mut first = true;
        for (w, c) in items {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (tau, word) = w.reduced_word();
            let word_str = if word.is_empty() {
                "e".to_string()
            } else {
                word.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let basis = if tau == 0 {
                format!("A[{word_str}]")
            } else {
                format!("A[tau^{tau}; {word_str}]")
            };
            if c.as_constant().map(|c| c == crate::exactalg::rat(1)).unwrap_or(false) {
                write!(f, "{basis}")?;
            } else {
                write!(f, "({c})*{basis}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarId;
    use crate::nilhecke::group_action;
    use crate::weyl::Coweight;

    fn simple(n: usize, i: usize) -> NilHeckeElement {
        NilHeckeElement::basis(ExtAffineElement::simple(n, i))
    }

    #[test]
    fn nil_squares_and_length_additivity() {
        let n = 2;
        let a0 = simple(n, 0);
        assert!(a0.mul(&a0).is_zero());
        let a1 = simple(n, 1);
        let prod = a1.mul(&a0);
        let s1s0 = ExtAffineElement::simple(n, 1).mul(&ExtAffineElement::simple(n, 0));
        assert_eq!(prod, NilHeckeElement::basis(s1s0));
    }

    #[test]
    fn scalar_commutation() {
        // A_1 * a_1 = a_2 A_1 - 1 for n >= 3
        let n = 3;
        let a1 = simple(n, 1);
        let f = NilHeckeElement::scalar(n, Polynomial::var(VarId::a(1)));
        let prod = a1.mul(&f);
        let expect = NilHeckeElement::term(
            ExtAffineElement::simple(n, 1),
            Polynomial::var(VarId::a(2)),
        )
        .add(&NilHeckeElement::scalar(n, Polynomial::int(-1)));
        assert_eq!(prod, expect);
    }

    #[test]
    fn expand_simple_and_tau() {
        let n = 3;
        let ring = SRing::new(n);
        let e = NilHeckeElement::expand_group(&ExtAffineElement::simple(n, 1));
        let expect = NilHeckeElement::one(n).add(&NilHeckeElement::term(
            ExtAffineElement::simple(n, 1),
            ring.alpha(1),
        ));
        assert_eq!(e, expect);
        let t = NilHeckeElement::expand_group(&ExtAffineElement::tau_power(n, 1));
        assert_eq!(
            t,
            NilHeckeElement::basis(ExtAffineElement::tau_power(n, 1))
        );
    }

    #[test]
    fn expansion_acts_like_the_group_element() {
        // act(expand(w), f) agrees with the group action of w for group
        // elements stretched over two letters.
        let n = 3;
        let ring = SRing::new(n);
        let w = ExtAffineElement::simple(n, 1).mul(&ExtAffineElement::simple(n, 0));
        let e = NilHeckeElement::expand_group(&w);
        let f = ring
            .a(1)
            .mul(&ring.a(1))
            .add(&ring.a(2).scale(&crate::exactalg::rat(3)));
        assert_eq!(e.act(&f), group_action(&ring, &w, &f));
    }

    #[test]
    fn expand_group_is_multiplicative() {
        let n = 3;
        let u = ExtAffineElement::from_parts(1, crate::weyl::AffinePerm::simple(n, 2));
        let v = ExtAffineElement::simple(n, 0).mul(&ExtAffineElement::simple(n, 1));
        let lhs = NilHeckeElement::expand_group(&u).mul(&NilHeckeElement::expand_group(&v));
        let rhs = NilHeckeElement::expand_group(&u.mul(&v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_word_independent() {
        // Braid relation s_0 s_1 s_0 = s_1 s_0 s_1 at n = 3 (adjacent
        // nodes; at n = 2 the bond is infinite and there is no relation).
        let lhs = NilHeckeElement::expand_group_with_word(3, 0, &[0, 1, 0]);
        let rhs = NilHeckeElement::expand_group_with_word(3, 0, &[1, 0, 1]);
        assert_eq!(lhs, rhs);
        // Commutation at n = 4: s_0 s_2 = s_2 s_0.
        let lhs = NilHeckeElement::expand_group_with_word(4, 1, &[0, 2]);
        let rhs = NilHeckeElement::expand_group_with_word(4, 1, &[2, 0]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_expansion_n2_fixture() {
        // t_{omega_1^vee} = A_tau - alpha A_{tau s_1} with alpha = a_1 - a_2.
        let n = 2;
        let ring = SRing::new(n);
        let t = NilHeckeElement::expand_group(&ExtAffineElement::translation(
            &Coweight::fundamental(n, 1),
        ));
        let tau = ExtAffineElement::tau_power(n, 1);
        let tau1 = tau.mul(&ExtAffineElement::simple(n, 1));
        let expect = NilHeckeElement::basis(tau.clone())
            .add(&NilHeckeElement::term(tau1, ring.alpha(1).neg()));
        assert_eq!(t, expect);
    }

    #[test]
    fn act_is_a_ring_action() {
        let n = 3;
        let ring = SRing::new(n);
        let x = NilHeckeElement::basis(ExtAffineElement::simple(n, 0))
            .add(&NilHeckeElement::scalar(n, ring.alpha(2)));
        let y = NilHeckeElement::basis(ExtAffineElement::simple(n, 1));
        let f = ring.a(1).mul(&ring.a(3)).add(&ring.a(2));
        assert_eq!(x.mul(&y).act(&f), x.act(&y.act(&f)));
    }

    #[test]
    fn tau_action_shifts_indices() {
        let n = 3;
        let ring = SRing::new(n);
        let tau = NilHeckeElement::basis(ExtAffineElement::tau_power(n, 1));
        assert_eq!(tau.act(&ring.a(1)), ring.a(2));
    }
}
