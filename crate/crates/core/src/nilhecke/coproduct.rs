//! The coproduct on `A_e`.
//!
//! `Delta(q) = q ⊗ 1` for scalars, `Delta(w) = w ⊗ w` for group elements,
//! and `Delta(A_i) = A_i ⊗ 1 + 1 ⊗ A_i + alpha_i A_i ⊗ A_i`. Elements of
//! `A_e ⊗_S A_e` are kept left-normalized: every term is `c (A_u ⊗ A_v)`
//! with `c` in `S`, scalars pulled into the left slot.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{Polynomial, SRing};
use crate::weyl::ExtAffineElement;

use super::NilHeckeElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    terms: BTreeMap<(ExtAffineElement, ExtAffineElement), Polynomial>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(u: ExtAffineElement, v: ExtAffineElement, c: Polynomial) -> Self {
        let n = u.n();
        let mut t = Self::zero(n);
        t.add_term(u, v, c);
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(ExtAffineElement, ExtAffineElement), &Polynomial)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, u: ExtAffineElement, v: ExtAffineElement, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((u, v)) {
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
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut out = Self::zero(self.n);
        for ((u, v), k) in &self.terms {
            out.add_term(u.clone(), v.clone(), k.mul(c));
        }
        out
    }

    /// Left-normalized form of `x ⊗ y`: right-slot scalars migrate left via
    /// the bimodule relation `(x · d) ⊗ A_v = x ⊗ d A_v`.
    pub fn from_factors(x: &NilHeckeElement, y: &NilHeckeElement) -> Self {
        let n = x.n();
        let mut out = Self::zero(n);
        for (v, d) in y.terms() {
            let left = x.mul(&NilHeckeElement::scalar(n, d.clone()));
            for (u, c) in left.terms() {
                out.add_term(u.clone(), v.clone(), c.clone());
            }
        }
        out
    }

    /// Componentwise product; well-defined on coproduct images.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                let right = v1.mul(v2);
                if right.length() != v1.length() + v2.length() {
                    continue;
                }
                let left = NilHeckeElement::term(u1.clone(), c1.clone())
                    .mul(&NilHeckeElement::term(u2.clone(), c2.clone()));
                for (z, c) in left.terms() {
                    out.add_term(z.clone(), right.clone(), c.clone());
                }
            }
        }
        out
    }

    /// `Delta(A_i)`.
    pub fn delta_simple(n: usize, i: usize) -> Self {
        let ring = SRing::new(n);
        let id = ExtAffineElement::identity(n);
        let si = ExtAffineElement::simple(n, i);
        let mut out = Self::zero(n);
        out.add_term(si.clone(), id.clone(), Polynomial::one());
        out.add_term(id.clone(), si.clone(), Polynomial::one());
        out.add_term(si.clone(), si, ring.alpha(i as i32));
        out
    }

    /// Coproduct of a basis term computed multiplicatively along a reduced
    /// word of the basis element.
    pub fn delta_term_with_word(
        n: usize,
        coeff: &Polynomial,
        tau: u32,
        word: &[usize],
    ) -> Self {
        let t = ExtAffineElement::tau_power(n, tau as i64);
        let mut acc = Self::term(t.clone(), t, coeff.clone());
        for &i in word {
            acc = acc.mul(&Self::delta_simple(n, i));
        }
        acc
    }

    /// Coproduct of a full element along canonical reduced words.
    pub fn coproduct(x: &NilHeckeElement) -> Self {
        let n = x.n();
        let mut out = Self::zero(n);
        for (w, c) in x.terms() {
            let (tau, word) = w.reduced_word();
            out = out.add(&Self::delta_term_with_word(n, c, tau, &word));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let render = |w: &ExtAffineElement| {
            let (tau, word) = w.reduced_word();
            let word_str = if word.is_empty() {
                "e".to_string()
            } else {
                word.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            if tau == 0 {
                format!("A[{word_str}]")
            } else {
                format!("A[tau^{tau}; {word_str}]")
            }
        };
        let mut first = true;
        for ((u, v), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}(x){}", c, render(u), render(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Coweight;

    fn alpha(n: usize, i: i32) -> Polynomial {
        SRing::new(n).alpha(i)
    }

    #[test]
    fn scalars_are_left_primitive() {
        let n = 2;
        let a1 = NilHeckeElement::scalar(n, SRing::new(n).a(1));
        let d = TensorElement::coproduct(&a1);
        let id = ExtAffineElement::identity(n);
        assert_eq!(
            d,
            TensorElement::term(id.clone(), id, SRing::new(n).a(1))
        );
    }

    #[test]
    fn group_elements_are_group_like() {
        for mu in [Coweight::new(vec![-1, 0, 0]), Coweight::new(vec![-2, -1, 0])] {
            let t = ExtAffineElement::translation(&mu);
            let e = NilHeckeElement::expand_group(&t);
            let d = TensorElement::coproduct(&e);
            assert_eq!(d, TensorElement::from_factors(&e, &e), "t_{mu}");
        }
    }

    #[test]
    fn coproduct_is_multiplicative_on_samples() {
        let n = 2;
        let x = NilHeckeElement::basis(ExtAffineElement::simple(n, 0)).add(
            &NilHeckeElement::scalar(n, alpha(n, 1)),
        );
        let y = NilHeckeElement::basis(ExtAffineElement::simple(n, 1));
        let lhs = TensorElement::coproduct(&x.mul(&y));
        let rhs = TensorElement::coproduct(&x).mul(&TensorElement::coproduct(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_braid_invariant() {
        let n = 3;
        let one = Polynomial::one();
        let lhs = TensorElement::delta_term_with_word(n, &one, 0, &[0, 1, 0]);
        let rhs = TensorElement::delta_term_with_word(n, &one, 0, &[1, 0, 1]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_j0_fixture_n2() {
        // j_0 = A_0 + A_1 - alpha A_{01};
        // Delta(j_0) = 1 (x) j_0 + j_0 (x) 1 - alpha j_0 (x) j_0.
        let n = 2;
        let a = alpha(n, 1);
        let s0 = ExtAffineElement::simple(n, 0);
        let s1 = ExtAffineElement::simple(n, 1);
        let s0s1 = s0.mul(&s1);
        let j0 = NilHeckeElement::basis(s0)
            .add(&NilHeckeElement::basis(s1))
            .add(&NilHeckeElement::term(s0s1, a.neg()));
        let one = NilHeckeElement::one(n);
        let lhs = TensorElement::coproduct(&j0);
        let rhs = TensorElement::from_factors(&one, &j0)
            .add(&TensorElement::from_factors(&j0, &one))
            .add(&TensorElement::from_factors(&j0, &j0).scale(&a.neg()));
        assert_eq!(lhs, rhs);
    }
}
