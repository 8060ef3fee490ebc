//! Symmetric series truncated at a fixed `y`-degree, on the `e[y]` basis.

use std::fmt;

use crate::exactalg::{Monomial, Polynomial, Rat, VarFamily, VarId};

/// `deg e_j[y] = j`; `a`-variables carry degree 0 here.
fn y_degree(m: &Monomial) -> u32 {
    m.pairs()
        .iter()
        .map(|&(v, e)| {
            if v.family == VarFamily::EY {
                v.index as u32 * e as u32
            } else {
                0
            }
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    cutoff: u32,
    poly: Polynomial,
}

impl TruncatedSeries {
    pub fn new(cutoff: u32, poly: Polynomial) -> Self {
        let poly = Polynomial::from_terms(
            poly.terms()
                .filter(|(m, _)| y_degree(m) <= cutoff)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        TruncatedSeries { cutoff, poly }
    }

    pub fn zero(cutoff: u32) -> Self {
        Self::new(cutoff, Polynomial::zero())
    }

    pub fn one(cutoff: u32) -> Self {
        Self::new(cutoff, Polynomial::one())
    }

    /// The classical `e_j[y]` generator.
    pub fn e(cutoff: u32, j: u32) -> Self {
        Self::new(cutoff, e_poly(j))
    }

    /// The classical `h_j[y]` expanded on the `e` basis.
    pub fn h(cutoff: u32, j: u32) -> Self {
        Self::new(cutoff, h_in_e(j))
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff);
        Self::new(self.cutoff, self.poly.add(&other.poly))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff);
        Self::new(self.cutoff, self.poly.sub(&other.poly))
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            cutoff: self.cutoff,
            poly: self.poly.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff);
        Self::new(self.cutoff, self.poly.mul(&other.poly))
    }

    /// Scale by a polynomial in the `a`-alphabet.
    pub fn scale(&self, c: &Polynomial) -> Self {
        Self::new(self.cutoff, self.poly.mul(c))
    }

    /// `tau^m`: shift every `a`-index by `m`; the `y`-part is fixed.
    pub fn tau_shift(&self, m: i64) -> Self {
        TruncatedSeries {
            cutoff: self.cutoff,
            poly: self.poly.rename_vars(|v| {
                if v.family == VarFamily::A {
                    VarId::a(v.index + m as i32)
                } else {
                    v
                }
            }),
        }
    }

    /// `eta`: `a_i -> -a_{1-i}` on coefficients only.
    pub fn eta(&self) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in self.poly.terms() {
            let mut sign = Rat::from_integer(1.into());
            let pairs = m
                .pairs()
                .iter()
                .map(|&(v, e)| {
                    if v.family == VarFamily::A {
                        if e % 2 == 1 {
                            sign = -sign.clone();
                        }
                        (VarId::a(1 - v.index), e)
                    } else {
                        (v, e)
                    }
                })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone() * sign.clone());
        }
        TruncatedSeries {
            cutoff: self.cutoff,
            poly: out,
        }
    }

    /// `omega`: the `e <-> h` basis exchange on the `y`-part, coefficients
    /// fixed.
    pub fn omega(&self) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in self.poly.terms() {
            let mut term = Polynomial::term(
                Monomial::from_pairs(
                    m.pairs()
                        .iter()
                        .filter(|&&(v, _)| v.family != VarFamily::EY)
                        .cloned()
                        .collect(),
                ),
                c.clone(),
            );
            for &(v, e) in m.pairs() {
                if v.family == VarFamily::EY {
                    let h = h_in_e(v.index as u32);
                    term = term.mul(&h.pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        Self::new(self.cutoff, out)
    }

    /// Set every `a_i` to zero.
    pub fn classical_limit(&self) -> Self {
        TruncatedSeries {
            cutoff: self.cutoff,
            poly: Polynomial::from_terms(
                self.poly
                    .terms()
                    .filter(|(m, _)| {
                        m.pairs().iter().all(|&(v, _)| v.family != VarFamily::A)
                    })
                    .map(|(m, c)| (m.clone(), c.clone())),
            ),
        }
    }

    /// The set of `a`-indices appearing.
    pub fn a_indices(&self) -> std::collections::BTreeSet<i32> {
        self.poly
            .vars()
            .into_iter()
            .filter(|v| v.family == VarFamily::A)
            .map(|v| v.index)
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod y-degree > {})", self.poly, self.cutoff)
    }
}

pub(super) fn e_poly(j: u32) -> Polynomial {
    if j == 0 {
        Polynomial::one()
    } else {
        Polynomial::var(VarId::ey(j as i32))
    }
}

/// `h_j` on the `e` basis via `h_j = sum_{i>=1} (-1)^{i-1} e_i h_{j-i}`.
pub(super) fn h_in_e(j: u32) -> Polynomial {
    let mut hs: Vec<Polynomial> = vec![Polynomial::one()];
    for m in 1..=j {
        let mut acc = Polynomial::zero();
        for i in 1..=m {
            let term = e_poly(i).mul(&hs[(m - i) as usize]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        hs.push(acc);
    }
    hs[j as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_expansion() {
        // h_1 = e_1, h_2 = e_1^2 - e_2
        assert_eq!(h_in_e(1), e_poly(1));
        assert_eq!(h_in_e(2), e_poly(1).mul(&e_poly(1)).sub(&e_poly(2)));
    }

    #[test]
    fn omega_swaps_e_and_h() {
        let n = 6;
        let e2 = TruncatedSeries::e(n, 2);
        assert_eq!(e2.omega(), TruncatedSeries::h(n, 2));
        assert_eq!(e2.omega().omega(), e2);
        // multiplicativity sample
        let e1 = TruncatedSeries::e(n, 1);
        let prod = e1.mul(&e2);
        assert_eq!(prod.omega(), e1.omega().mul(&e2.omega()));
    }

    #[test]
    fn eta_is_an_involution() {
        let n = 4;
        let a0 = Polynomial::var(VarId::a(0));
        let s = TruncatedSeries::e(n, 2).scale(&a0).add(&TruncatedSeries::one(n));
        assert_eq!(s.eta().eta(), s);
        // a_0 -> -a_1
        let moved = s.eta();
        let expect = TruncatedSeries::e(n, 2)
            .scale(&Polynomial::var(VarId::a(1)).neg())
            .add(&TruncatedSeries::one(n));
        assert_eq!(moved, expect);
    }

    #[test]
    fn truncation_respects_grading() {
        // degree 4 > cutoff 3 is dropped
        let s = TruncatedSeries::new(3, e_poly(2).mul(&e_poly(2)));
        assert!(s.is_zero());
        // degree 3 survives
        let t = TruncatedSeries::e(3, 2).mul(&TruncatedSeries::e(3, 1));
        assert_eq!(t.poly(), &e_poly(2).mul(&e_poly(1)));
    }
}
