//! Dual Schur functions via the two Jacobi-Trudi determinants, and the
//! small-partition dictionary to k-double Schur functions.

use std::fmt;

use crate::exactalg::{det, Polynomial};
use crate::weyl::Partition;

use super::duale::DualBasis;
use super::series::e_poly;
use super::{SymfuncError, TruncatedSeries};

/// A symbolic label `s-hat[lambda]^tau^m`, resolved to a series on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSchurName {
    pub partition: Partition,
    pub twist: i64,
}

impl DualSchurName {
    pub fn resolve(&self, basis: &DualBasis) -> Result<TruncatedSeries, SymfuncError> {
        Ok(dual_schur(&self.partition, basis)?.tau_shift(self.twist))
    }
}

impl fmt::Display for DualSchurName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .partition
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if self.twist == 0 {
            write!(f, "s-hat[{parts}]")
        } else {
            write!(f, "s-hat[{parts}]^tau^{}", self.twist)
        }
    }
}

/// Determinant of a square matrix of truncated series.
fn det_series(m: &[Vec<TruncatedSeries>], cutoff: u32) -> TruncatedSeries {
    fn minor(
        m: &[Vec<TruncatedSeries>],
        cutoff: u32,
        cols: u32,
        memo: &mut std::collections::HashMap<u32, TruncatedSeries>,
    ) -> TruncatedSeries {
        if cols == 0 {
            return TruncatedSeries::one(cutoff);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let k = m.len();
        let row = k - cols.count_ones() as usize;
        let mut acc = TruncatedSeries::zero(cutoff);
        let mut negate = false;
        for j in 0..k {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let sub = minor(m, cutoff, cols & !(1 << j), memo);
                let term = m[row][j].mul(&sub);
                acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            }
            negate = !negate;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    if m.is_empty() {
        return TruncatedSeries::one(cutoff);
    }
    let mut memo = std::collections::HashMap::new();
    minor(m, cutoff, (1u32 << m.len()) - 1, &mut memo)
}

/// `s-hat_lambda(y||a)`: both Jacobi-Trudi determinants are computed and
/// must agree —
/// `det(hh^{tau^{j-1}}_{lambda_i - i + j})` over `l(lambda)` rows and
/// `det(eh^{tau^{1-j}}_{lambda^t_i - i + j})` over `lambda_1` rows.
pub fn dual_schur(
    lambda: &Partition,
    basis: &DualBasis,
) -> Result<TruncatedSeries, SymfuncError> {
    let cutoff = basis.cutoff();
    let rows = lambda.len();
    let h_matrix: Vec<Vec<TruncatedSeries>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    basis
                        .h(lambda.part(i) as i64 - i as i64 + j as i64)
                        .tau_shift(j as i64)
                })
                .collect()
        })
        .collect();
    let by_h = det_series(&h_matrix, cutoff);

    let transpose = lambda.transpose();
    let cols = transpose.len();
    let e_matrix: Vec<Vec<TruncatedSeries>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    basis
                        .e(transpose.part(i) as i64 - i as i64 + j as i64)
                        .tau_shift(-(j as i64))
                })
                .collect()
        })
        .collect();
    let by_e = det_series(&e_matrix, cutoff);

    if by_h != by_e {
        return Err(SymfuncError::DeterminantMismatch(lambda.to_string()));
    }
    Ok(by_h)
}

/// The small-partition dictionary: for `lambda_1 <= n-k` and
/// `l(lambda) <= k` (some `1 <= k <= n-1`, i.e. main hook `< n`), the
/// k-double Schur function is the dual Schur function with the same label.
pub fn kdouble_small(lambda: &Partition, n: usize) -> Result<DualSchurName, SymfuncError> {
    if !lambda.is_empty() && lambda.main_hook() > n as u32 - 1 {
        return Err(SymfuncError::HookTooLarge(
            lambda.to_string(),
            lambda.main_hook(),
            n as u32 - 1,
        ));
    }
    Ok(DualSchurName {
        partition: lambda.clone(),
        twist: 0,
    })
}

/// Classical Schur polynomial on the `e`-basis via the dual Jacobi-Trudi
/// determinant; the independent oracle for the `a -> 0` limit.
pub fn classical_schur_in_e(lambda: &Partition) -> Polynomial {
    let t = lambda.transpose();
    let k = t.len();
    let m: Vec<Vec<Polynomial>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let sub = t.part(i) as i64 - i as i64 + j as i64;
                    if sub < 0 {
                        Polynomial::zero()
                    } else {
                        e_poly(sub as u32)
                    }
                })
                .collect()
        })
        .collect();
    det(&m).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::dual_e_family;

    #[test]
    fn single_box_and_columns() {
        let b = dual_e_family(5);
        // s-hat_{(1)} = eh_1 = hh_1
        let s1 = dual_schur(&Partition::new(vec![1]), &b).unwrap();
        assert_eq!(s1, b.e(1));
        assert_eq!(s1, b.h(1));
        // s-hat_{(1^r)} = eh_r
        for r in 2..=4u32 {
            let col = Partition::new(vec![1; r as usize]);
            assert_eq!(dual_schur(&col, &b).unwrap(), b.e(r as i64), "r={r}");
        }
    }

    #[test]
    fn omega_eta_transposes_small() {
        let b = dual_e_family(6);
        for lam in Partition::bounded_up_to_size(4, 4) {
            if lam.is_empty() {
                continue;
            }
            let s = dual_schur(&lam, &b).unwrap();
            let st = dual_schur(&lam.transpose(), &b).unwrap();
            assert_eq!(s.omega().eta(), st, "lambda = {lam}");
        }
    }

    #[test]
    fn classical_limit_is_schur() {
        let b = dual_e_family(6);
        for lam in Partition::bounded_up_to_size(4, 4) {
            let s = dual_schur(&lam, &b).unwrap().classical_limit();
            let expect = TruncatedSeries::new(6, classical_schur_in_e(&lam));
            assert_eq!(s, expect, "lambda = {lam}");
        }
        // spot-check the textbook identity s_{21} = e_2 e_1 - e_3
        assert_eq!(
            classical_schur_in_e(&Partition::new(vec![2, 1])),
            e_poly(2).mul(&e_poly(1)).sub(&e_poly(3))
        );
    }

    #[test]
    fn dictionary_domain() {
        assert!(kdouble_small(&Partition::new(vec![1]), 3).is_ok());
        assert_eq!(
            kdouble_small(&Partition::new(vec![2, 1]), 4).unwrap().to_string(),
            "s-hat[2,1]"
        );
        // (2,1) at n=3 has hook 3 > 2
        assert!(kdouble_small(&Partition::new(vec![2, 1]), 3).is_err());
        // rectangles R_i^t are always admissible denominators
        for n in 2..=4usize {
            for i in 1..n {
                let r = Partition::r_k(n, i).transpose();
                assert!(kdouble_small(&r, n).is_ok(), "R_{i}^t at n={n}");
            }
        }
    }
}
