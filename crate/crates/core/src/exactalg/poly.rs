//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables come from fixed indexed alphabets. The canonical term order is
//! lexicographic with the variable significance `A < G < Q < X < EHAT < EY <
//! AUX` (family first, then index), so printed forms and leading terms are
//! deterministic across runs.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgError, Rat};

/// Variable alphabets, in canonical significance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarFamily {
    /// Equivariant parameters `a_i` (indices may be any integer before
    /// reduction into a modular context).
    A,
    /// First-row centralizer coordinates `g_p`.
    G,
    /// Quantum parameters `q_i`.
    Q,
    /// Flag-manifold variables `x_i`.
    X,
    /// Dual elementary symmetric functions `eh_j`.
    EHat,
    /// Classical elementary symmetric functions `ey_j` in the `y` alphabet.
    EY,
    /// Auxiliary indeterminates (characteristic-polynomial variable, root
    /// cone generators, scratch).
    Aux,
}

impl VarFamily {
    fn prefix(self) -> &'static str {
        match self {
            VarFamily::A => "a",
            VarFamily::G => "g",
            VarFamily::Q => "q",
            VarFamily::X => "x",
            VarFamily::EHat => "eh",
            VarFamily::EY => "ey",
            VarFamily::Aux => "z",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: VarFamily,
    pub index: i32,
}

impl VarId {
    pub fn new(family: VarFamily, index: i32) -> Self {
        VarId { family, index }
    }
    pub fn a(index: i32) -> Self {
        Self::new(VarFamily::A, index)
    }
    pub fn g(index: i32) -> Self {
        Self::new(VarFamily::G, index)
    }
    pub fn q(index: i32) -> Self {
        Self::new(VarFamily::Q, index)
    }
    pub fn x(index: i32) -> Self {
        Self::new(VarFamily::X, index)
    }
    pub fn ehat(index: i32) -> Self {
        Self::new(VarFamily::EHat, index)
    }
    pub fn ey(index: i32) -> Self {
        Self::new(VarFamily::EY, index)
    }
    pub fn aux(index: i32) -> Self {
        Self::new(VarFamily::Aux, index)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.prefix(), self.index)
    }
}

/// A monomial: sorted `(variable, exponent)` pairs, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u16)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u16)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(VarId, u16)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, u16)] {
        &self.0
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j >= other.0.len() || (i < self.0.len() && self.0[i].0 < other.0[j].0) {
                out.push(self.0[i]);
                i += 1;
            } else if i >= self.0.len() || other.0[j].0 < self.0[i].0 {
                out.push(other.0[j]);
                j += 1;
            } else {
                out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut rem = e;
            while j < other.0.len() && other.0[j].0 < v {
                return None; // divisor has a variable self lacks
            }
            if j < other.0.len() && other.0[j].0 == v {
                if other.0[j].1 > e {
                    return None;
                }
                rem = e - other.0[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((v, rem));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum (gcd of monomials).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < v {
                j += 1;
            }
            if j < other.0.len() && other.0[j].0 == v {
                out.push((v, e.min(other.0[j].1)));
            }
        }
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order: the most significant variable is the smallest
/// `VarId` present in either monomial; larger exponent there wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        // self has a positive power of the more significant var
                        return Ordering::Greater;
                    } else if vb < va {
                        return Ordering::Less;
                    } else if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over `Q`. No zero coefficients are stored; term order
/// is canonical via the `Monomial` ordering.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(super::rat(c))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term under the canonical order (largest monomial).
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u16 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for &(v, _) in m.pairs() {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree with the grading `deg a_i = deg x_i = 1, deg q_i = 2`, all
    /// other families 1.
    pub fn graded_degrees(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .map(|m| {
                m.pairs()
                    .iter()
                    .map(|&(v, e)| {
                        let w = if v.family == VarFamily::Q { 2 } else { 1 };
                        w * e as u32
                    })
                    .sum()
            })
            .collect()
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitute a single variable by a polynomial.
    pub fn substitute(&self, v: VarId, replacement: &Polynomial) -> Polynomial {
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            if e == 0 {
                out.add_term(m.clone(), c.clone());
            } else {
                let rest = Monomial::from_pairs(
                    m.pairs()
                        .iter()
                        .filter(|&&(w, _)| w != v)
                        .cloned()
                        .collect(),
                );
                let contrib = powers[e].mul_monomial(&rest, c);
                out = out.add(&contrib);
            }
        }
        out
    }

    /// Rename variables through `f`; the map need not be injective.
    pub fn rename_vars(&self, f: impl Fn(VarId) -> VarId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let pairs = m.pairs().iter().map(|&(v, e)| (f(v), e)).collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Evaluate at a rational point. Variables absent from `point` are an
    /// error (`None`).
    pub fn eval(&self, point: &BTreeMap<VarId, Rat>) -> Option<Rat> {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.pairs() {
                let x = point.get(&var)?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Some(total)
    }

    /// Gcd of all coefficient numerators over lcm of denominators, made
    /// positive. Zero polynomial has content 0.
    pub fn content(&self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.terms.is_empty() {
            return Rat::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Componentwise-minimum monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Monomial::one(),
            Some(m) => m.clone(),
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    /// Exact division; errors with both operands when a remainder is left.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, AlgError> {
        if divisor.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let (dlm, dlc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = Polynomial::zero();
        while !rem.is_zero() {
            let (rlm, rlc) = rem.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let m = rlm.try_div(&dlm).ok_or_else(|| {
                AlgError::NotDivisible(self.to_string(), divisor.to_string())
            })?;
            let c = rlc / dlc.clone();
            quo.add_term(m.clone(), c.clone());
            rem = rem.sub(&divisor.mul_monomial(&m, &c));
        }
        Ok(quo)
    }

    /// Collect the coefficient of `v^k` (with `v` divided out).
    pub fn coefficient_of_power(&self, v: VarId, k: u16) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let rest = Monomial::from_pairs(
                    m.pairs()
                        .iter()
                        .filter(|&&(w, _)| w != v)
                        .cloned()
                        .collect(),
                );
                out.add_term(rest, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading term first.
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $inherent:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inherent(rhs)
            }
        }
        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$inherent(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn a(i: i32) -> Polynomial {
        Polynomial::var(VarId::a(i))
    }

    #[test]
    fn monomial_order_is_lex_on_families() {
        let a1 = Monomial::var(VarId::a(1));
        let g1 = Monomial::var(VarId::g(1));
        let a2 = Monomial::var(VarId::a(2));
        assert!(a1 > g1); // A more significant than G
        assert!(a1 > a2);
        assert!(a1.mul(&a1) > a1);
        assert!(Monomial::one() < g1);
    }

    #[test]
    fn arithmetic_and_display() {
        let p = (a(1).clone() + a(2).clone()).mul(&(a(1).clone() - a(2).clone()));
        let expect = a(1).mul(&a(1)).sub(&a(2).mul(&a(2)));
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "a_1^2 - a_2^2");
    }

    #[test]
    fn divide_exact_examples() {
        // (a_1^2 - a_2^2) / (a_1 - a_2) = a_1 + a_2
        let num = a(1).mul(&a(1)).sub(&a(2).mul(&a(2)));
        let den = a(1).sub(&a(2));
        assert_eq!(num.divide_exact(&den).unwrap(), a(1).add(&a(2)));
        // 0 / q = 0
        assert_eq!(
            Polynomial::zero().divide_exact(&den).unwrap(),
            Polynomial::zero()
        );
        // monomial cofactor
        let g1 = Polynomial::var(VarId::g(1));
        let g2 = Polynomial::var(VarId::g(2));
        let d = a(1).sub(&a(3));
        let prod = d.mul(&g2).mul(&g1);
        assert_eq!(prod.divide_exact(&d).unwrap(), g2.mul(&g1));
        // failure carries operands
        let err = a(1).divide_exact(&a(2)).unwrap_err();
        assert!(matches!(err, AlgError::NotDivisible(_, _)));
    }

    #[test]
    fn substitution_and_eval() {
        let p = a(1).mul(&a(1)).add(&Polynomial::int(3));
        let q = p.substitute(VarId::a(1), &a(2).add(&Polynomial::one()));
        let mut pt = std::collections::BTreeMap::new();
        pt.insert(VarId::a(2), rat(4));
        assert_eq!(q.eval(&pt).unwrap(), rat(28));
    }
}
