//! The linear-solve oracle for `j_w`.
//!
//! Directly from the defining property: `j_w = A_w + sum c_x A_x` over
//! non-Grassmannian `x` in the same rotation sector, with `[alpha_i, j_w] =
//! 0` for all finite `i`. Unknown coefficients are homogeneous of degree
//! `l(x) - l(w)`; the system is solved over `Q` monomial by monomial.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::exactalg::{Monomial, Polynomial, Rat, SRing, VarId};
use crate::nilhecke::NilHeckeElement;
use crate::weyl::{affine_elements_by_length, ExtAffineElement};

use super::{JBasis, PetersonElement, PetersonError};

/// Solve for `j_w` with support restricted to lengths `<= cutoff`.
pub fn j_solve(
    jb: &JBasis,
    w: &ExtAffineElement,
    cutoff: u32,
) -> Result<PetersonElement, PetersonError> {
    if !w.is_grassmannian() {
        return Err(PetersonError::NotGrassmannian(w.to_string()));
    }
    let n = jb.n();
    let ring = SRing::new(n);
    let lw = w.length();
    if cutoff < lw {
        return Err(PetersonError::CutoffTooSmall {
            w: w.to_string(),
            cutoff,
        });
    }

    // Candidate support: non-Grassmannian elements of the same sector.
    let by_len = affine_elements_by_length(n, cutoff as usize);
    let sector = w.tau_part() as i64;
    let mut support: Vec<ExtAffineElement> = Vec::new();
    for layer in by_len.iter().take(cutoff as usize + 1).skip(lw as usize) {
        for u in layer {
            let x = ExtAffineElement::from_parts(sector, u.clone());
            if !x.is_grassmannian() {
                support.push(x);
            }
        }
    }

    // Unknown columns: one rational per (support element, monomial of the
    // right degree).
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    let mut col_of: HashMap<(usize, Monomial), usize> = HashMap::new();
    for (si, x) in support.iter().enumerate() {
        let d = x.length() - lw;
        for m in monomials_of_degree(n - 1, d) {
            col_of.insert((si, m.clone()), columns.len());
            columns.push((si, m));
        }
    }

    // Equations keyed by (generator index, component element, monomial).
    type RowKey = (usize, ExtAffineElement, Monomial);
    let mut rows: BTreeMap<RowKey, (BTreeMap<usize, Rat>, Rat)> = BTreeMap::new();
    let add_entry = |key: RowKey, col: Option<usize>, c: Rat, rows: &mut BTreeMap<RowKey, (BTreeMap<usize, Rat>, Rat)>| {
        let row = rows.entry(key).or_insert_with(|| (BTreeMap::new(), Rat::zero()));
        match col {
            Some(col) => {
                let e = row.0.entry(col).or_insert_with(Rat::zero);
                *e += c;
                if e.is_zero() {
                    row.0.remove(&col);
                }
            }
            None => row.1 -= c,
        }
    };

    for i in 1..n {
        let alpha = ring.alpha(i as i32);
        let commutator = |x: &ExtAffineElement| -> NilHeckeElement {
            NilHeckeElement::basis(x.clone())
                .mul(&NilHeckeElement::scalar(n, alpha.clone()))
                .sub(&NilHeckeElement::term(x.clone(), alpha.clone()))
        };
        // Fixed part from A_w.
        for (y, p) in commutator(w).terms() {
            for (mp, c) in p.terms() {
                add_entry((i, y.clone(), mp.clone()), None, c.clone(), &mut rows);
            }
        }
        for (si, x) in support.iter().enumerate() {
            let k = commutator(x);
            let d = x.length() - lw;
            for m in monomials_of_degree(n - 1, d) {
                let col = col_of[&(si, m.clone())];
                for (y, p) in k.terms() {
                    for (mp, c) in p.terms() {
                        add_entry(
                            (i, y.clone(), m.mul(mp)),
                            Some(col),
                            c.clone(),
                            &mut rows,
                        );
                    }
                }
            }
        }
    }

    // Sparse Gaussian elimination.
    let mut pivots: BTreeMap<usize, (BTreeMap<usize, Rat>, Rat)> = BTreeMap::new();
    for (_, (mut row, mut rhs)) in rows {
        loop {
            let lead = match row.keys().next().cloned() {
                Some(c) => c,
                None => break,
            };
            if let Some((prow, prhs)) = pivots.get(&lead) {
                let factor = row[&lead].clone();
                let (prow, prhs) = (prow.clone(), prhs.clone());
                for (c, v) in &prow {
                    let e = row.entry(*c).or_insert_with(Rat::zero);
                    *e -= factor.clone() * v;
                    if e.is_zero() {
                        row.remove(c);
                    }
                }
                rhs -= factor * prhs;
            } else {
                // Normalize and install as pivot.
                let lv = row[&lead].clone();
                let nrow: BTreeMap<usize, Rat> = row
                    .iter()
                    .map(|(c, v)| (*c, v.clone() / lv.clone()))
                    .collect();
                pivots.insert(lead, (nrow, rhs.clone() / lv));
                row.clear();
                rhs = Rat::zero();
                break;
            }
        }
        if !rhs.is_zero() {
            return Err(PetersonError::CutoffTooSmall {
                w: w.to_string(),
                cutoff,
            });
        }
    }

    // Back substitution; every column must be pinned (the solution is
    // unique when it exists).
    let mut solution: Vec<Option<Rat>> = vec![None; columns.len()];
    for (&col, _) in pivots.iter().rev() {
        let (prow, prhs) = &pivots[&col];
        let mut v = prhs.clone();
        for (c, coeff) in prow.iter().skip(1) {
            let sc = solution[*c].clone().ok_or(PetersonError::CutoffTooSmall {
                w: w.to_string(),
                cutoff,
            })?;
            v -= coeff.clone() * sc;
        }
        solution[col] = Some(v);
    }
    if solution.iter().any(|s| s.is_none()) {
        return Err(PetersonError::CutoffTooSmall {
            w: w.to_string(),
            cutoff,
        });
    }

    let mut elem = NilHeckeElement::basis(w.clone());
    for (ci, (si, m)) in columns.iter().enumerate() {
        let v = solution[ci].clone().unwrap();
        if !v.is_zero() {
            elem.add_term(support[*si].clone(), Polynomial::term(m.clone(), v));
        }
    }
    PetersonElement::certify(elem)
}

/// All monomials of total degree `d` in `a_1..a_k`.
fn monomials_of_degree(k: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Vec<(VarId, u16)> = Vec::new();
    fn rec(
        var: usize,
        k: usize,
        left: u32,
        current: &mut Vec<(VarId, u16)>,
        out: &mut Vec<Monomial>,
    ) {
        if var > k {
            if left == 0 {
                out.push(Monomial::from_pairs(current.clone()));
            }
            return;
        }
        if var == k {
            if left > 0 {
                current.push((VarId::a(var as i32), left as u16));
                out.push(Monomial::from_pairs(current.clone()));
                current.pop();
            } else {
                out.push(Monomial::from_pairs(current.clone()));
            }
            return;
        }
        for e in 0..=left {
            if e > 0 {
                current.push((VarId::a(var as i32), e as u16));
            }
            rec(var + 1, k, left - e, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    rec(1, k, d, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one()]);
        assert_eq!(monomials_of_degree(1, 3).len(), 1);
        assert_eq!(monomials_of_degree(2, 2).len(), 3); // a1^2, a1 a2, a2^2
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }

    #[test]
    fn solve_identity() {
        let jb = JBasis::new(2);
        let id = ExtAffineElement::identity(2);
        let j = j_solve(&jb, &id, 2).unwrap();
        assert_eq!(j.elem(), &NilHeckeElement::one(2));
    }

    #[test]
    fn solve_j0_n2_matches_fixture() {
        // j_0 = A_0 + A_1 - alpha A_{01}
        let n = 2;
        let jb = JBasis::new(n);
        let ring = SRing::new(n);
        let s0 = ExtAffineElement::simple(n, 0);
        let j = j_solve(&jb, &s0, 3).unwrap();
        let s1 = ExtAffineElement::simple(n, 1);
        let s0s1 = s0.mul(&s1);
        let expect = NilHeckeElement::basis(s0.clone())
            .add(&NilHeckeElement::basis(s1))
            .add(&NilHeckeElement::term(s0s1, ring.alpha(1).neg()));
        assert_eq!(j.elem(), &expect);
    }

    #[test]
    fn cutoff_too_small_is_reported() {
        let n = 2;
        let jb = JBasis::new(n);
        let s0 = ExtAffineElement::simple(n, 0);
        // Support must reach length 2; cutoff 1 cannot work.
        assert!(matches!(
            j_solve(&jb, &s0, 1),
            Err(PetersonError::CutoffTooSmall { .. })
        ));
    }
}
