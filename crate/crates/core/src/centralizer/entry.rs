//! Polynomials in the formal matrix entries `z_{ij}`.
//!
//! The image under `phi` depends on entries, not on their `g`-expansions,
//! and degree balance for ratios is entry-degree balance; both force a
//! separate alphabet from the `g`-coordinates.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::Polynomial;

type Entry = (u8, u8);

/// Sorted `(entry, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct EntryMonomial(Vec<(Entry, u16)>);

impl EntryMonomial {
    fn one() -> Self {
        EntryMonomial(Vec::new())
    }

    fn var(e: Entry) -> Self {
        EntryMonomial(vec![(e, 1)])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut pairs = self.0.clone();
        pairs.extend(other.0.iter().cloned());
        pairs.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(Entry, u16)> = Vec::with_capacity(pairs.len());
        for (e, x) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += x,
                _ => out.push((e, x)),
            }
        }
        EntryMonomial(out)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn factors(&self) -> impl Iterator<Item = (Entry, u16)> + '_ {
        self.0.iter().cloned()
    }
}

impl fmt::Display for EntryMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &((i, j), e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z_{i}{j}")?;
            } else {
                write!(f, "z_{i}{j}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the entries with coefficients in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryPoly {
    terms: BTreeMap<EntryMonomial, Polynomial>,
}

impl EntryPoly {
    pub fn zero() -> Self {
        EntryPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(Polynomial::one())
    }

    pub fn scalar(c: Polynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(EntryMonomial::one(), c);
        }
        EntryPoly { terms }
    }

    /// The formal entry `z_{ij}` (1-indexed, upper triangular).
    pub fn entry(i: usize, j: usize) -> Self {
        assert!(i <= j);
        let mut terms = BTreeMap::new();
        terms.insert(
            EntryMonomial::var((i as u8, j as u8)),
            Polynomial::one(),
        );
        EntryPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EntryMonomial, &Polynomial)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: EntryMonomial, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry as E;
        match self.terms.entry(m) {
            E::Vacant(e) => {
                e.insert(c);
            }
            E::Occupied(mut e) => {
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
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        EntryPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k.mul(c));
        }
        out
    }

    /// Lift a polynomial in `g`-coordinates (first-row entries) to a
    /// `z`-homogeneous entry polynomial of the given degree, padding each
    /// monomial with `z_{11}`-powers. `None` if some monomial exceeds the
    /// degree or a non-`g`/`a` variable appears.
    pub fn homogenize_from_g(p: &Polynomial, degree: u32) -> Option<EntryPoly> {
        use crate::exactalg::{Monomial, VarFamily};
        let mut out = EntryPoly::zero();
        for (m, c) in p.terms() {
            let mut entry = EntryMonomial::one();
            let mut scalar_pairs = Vec::new();
            let mut gdeg = 0u32;
            for &(v, e) in m.pairs() {
                match v.family {
                    VarFamily::G => {
                        gdeg += e as u32;
                        for _ in 0..e {
                            entry = entry.mul(&EntryMonomial::var((1, 1 + v.index as u8)));
                        }
                    }
                    VarFamily::A => scalar_pairs.push((v, e)),
                    _ => return None,
                }
            }
            if gdeg > degree {
                return None;
            }
            for _ in gdeg..degree {
                entry = entry.mul(&EntryMonomial::var((1, 1)));
            }
            out.add_term(
                entry,
                Polynomial::term(Monomial::from_pairs(scalar_pairs), c.clone()),
            );
        }
        Some(out)
    }

    /// Entry degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let d = degs.next()?;
        if degs.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Determinant of a square array of entry polynomials.
    pub fn det(m: &[Vec<EntryPoly>]) -> EntryPoly {
        fn minor(
            m: &[Vec<EntryPoly>],
            cols: u32,
            memo: &mut std::collections::HashMap<u32, EntryPoly>,
        ) -> EntryPoly {
            if cols == 0 {
                return EntryPoly::one();
            }
            if let Some(p) = memo.get(&cols) {
                return p.clone();
            }
            let k = m.len();
            let row = k - cols.count_ones() as usize;
            let mut acc = EntryPoly::zero();
            let mut negate = false;
            for j in 0..k {
                if cols & (1 << j) == 0 {
                    continue;
                }
                if !m[row][j].is_zero() {
                    let sub = minor(m, cols & !(1 << j), memo);
                    let term = m[row][j].mul(&sub);
                    acc = if negate { acc.sub(&term) } else { acc.add(&term) };
                }
                negate = !negate;
            }
            memo.insert(cols, acc.clone());
            acc
        }
        if m.is_empty() {
            return EntryPoly::one();
        }
        let mut memo = std::collections::HashMap::new();
        minor(m, (1u32 << m.len()) - 1, &mut memo)
    }
}

impl fmt::Display for EntryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}
