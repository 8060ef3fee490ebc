//! Exact determinants of polynomial matrices.
//!
//! Cofactor expansion with minors memoized per column subset keeps the
//! computation fraction-free; entries are polynomials, so Gaussian
//! elimination would force divisions.

use std::collections::HashMap;

use num_traits::One;

use super::{AlgError, Polynomial, Rat};

/// Determinant of a square matrix of polynomials. The empty matrix has
/// determinant 1.
pub fn det(m: &[Vec<Polynomial>]) -> Result<Polynomial, AlgError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(AlgError::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    if n > 32 {
        return Err(AlgError::NonSquare { rows: n, cols: n });
    }
    let mut memo: HashMap<u32, Polynomial> = HashMap::new();
    Ok(minor(m, (1u32 << n) - 1, &mut memo))
}

fn minor(m: &[Vec<Polynomial>], cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
    if cols == 0 {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let n = m.len();
    let row = n - cols.count_ones() as usize;
    let mut acc = Polynomial::zero();
    let mut sign = Rat::one();
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = minor(m, cols & !(1 << j), memo);
            acc = acc.add(&entry.mul(&sub).scale(&sign));
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Permutation-expansion determinant; the independent oracle for tests.
pub fn det_brute_force(m: &[Vec<Polynomial>]) -> Result<Polynomial, AlgError> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(AlgError::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    let mut acc = Polynomial::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p, sign| {
        let mut term = Polynomial::one();
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&m[i][j]);
        }
        if sign {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    });
    Ok(acc)
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
    let n = p.len();
    if k == n {
        // Parity by counting inversions.
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        f(p, inv % 2 == 0);
        return;
    }
    for i in k..n {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}
