//! The centralizer matrix and its minors, in both `g`-coordinates and
//! formal entries.

use crate::exactalg::{Polynomial, SRing, VarId};
use crate::weyl::Partition;

use super::{CentralizerError, EntryPoly};

/// Sign corruption hooks for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CentralizerMutation {
    #[default]
    None,
    /// `z_{ij} = z_{i-1,j-1} - (a_{i-1} - a_j) z_{i-1,j}` instead of `+`.
    FlipRecursionSign,
}

/// The `n x n` upper-triangular matrix in `y`-coordinates
/// (`z_{11} := 1`, first row `g_1..g_{n-1}`), rows filled by the
/// commutation recursion.
#[derive(Debug, Clone)]
pub struct CentralizerMatrix {
    n: usize,
    ring: SRing,
    entries: Vec<Vec<Polynomial>>,
}

impl CentralizerMatrix {
    pub fn build(n: usize) -> Self {
        Self::build_with_mutation(n, CentralizerMutation::None)
    }

    pub fn build_with_mutation(n: usize, mutation: CentralizerMutation) -> Self {
        assert!(n >= 2);
        let ring = SRing::new(n);
        let mut entries = vec![vec![Polynomial::zero(); n + 1]; n + 1];
        entries[1][1] = Polynomial::one();
        for p in 1..n {
            entries[1][1 + p] = Polynomial::var(VarId::g(p as i32));
        }
        for i in 2..=n {
            for j in i..=n {
                let prev_diag = entries[i - 1][j - 1].clone();
                let prev_up = entries[i - 1][j].clone();
                let factor = ring.a((i - 1) as i32).sub(&ring.a(j as i32));
                let step = prev_up.mul(&factor);
                entries[i][j] = match mutation {
                    CentralizerMutation::None => prev_diag.add(&step),
                    CentralizerMutation::FlipRecursionSign => prev_diag.sub(&step),
                };
            }
        }
        CentralizerMatrix { n, ring, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &SRing {
        &self.ring
    }

    /// `y`-coordinate entry, 1-indexed; zero below the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    /// The minor `z_{lambda,k}` over rows `1..=k` and columns
    /// `(lambda_k + 1, ..., lambda_1 + k)`, evaluated in `g`-coordinates.
    pub fn minor(&self, lambda: &Partition, k: usize) -> Result<Polynomial, CentralizerError> {
        self.check_box(lambda, k)?;
        let m = self.minor_matrix_with(lambda, k, |i, j| self.entries[i][j].clone());
        Ok(crate::exactalg::det(&m)?)
    }

    /// The same minor as a polynomial in formal entries.
    pub fn minor_entry(&self, lambda: &Partition, k: usize) -> Result<EntryPoly, CentralizerError> {
        self.check_box(lambda, k)?;
        let m = self.minor_matrix_with(lambda, k, |i, j| {
            if i <= j {
                EntryPoly::entry(i, j)
            } else {
                EntryPoly::zero()
            }
        });
        Ok(EntryPoly::det(&m))
    }

    fn check_box(&self, lambda: &Partition, k: usize) -> Result<(), CentralizerError> {
        if k > self.n || !lambda.fits_box(k, (self.n - k) as u32) {
            return Err(CentralizerError::BoxViolation(
                lambda.to_string(),
                k,
                self.n.saturating_sub(k),
            ));
        }
        Ok(())
    }

    fn minor_matrix_with<T: Clone>(
        &self,
        lambda: &Partition,
        k: usize,
        entry: impl Fn(usize, usize) -> T,
    ) -> Vec<Vec<T>> {
        // column q (1-indexed) is lambda_{k+1-q} + q
        let cols: Vec<usize> = (1..=k)
            .map(|q| lambda.part(k - q) as usize + q)
            .collect();
        (1..=k)
            .map(|p| cols.iter().map(|&c| entry(p, c)).collect())
            .collect()
    }

    /// `D_i = z_{R_i, n-i}` in `g`-coordinates; `D_n = 1`.
    pub fn d(&self, i: usize) -> Polynomial {
        assert!(i <= self.n);
        self.minor(&Partition::r_k(self.n, i), self.n - i)
            .expect("rectangles fit their boxes")
    }

    /// `D_i' = z_{R_i - 1, n-i}` for `1 <= i <= n-1`; `D_n' = 0`.
    pub fn d_prime(&self, i: usize) -> Polynomial {
        if i == self.n {
            return Polynomial::zero();
        }
        assert!(i >= 1 && i < self.n);
        self.minor(&Partition::r_k_minus(self.n, i, 1), self.n - i)
            .expect("R_i - 1 fits the box")
    }

    /// Entry-level `D_i`.
    pub fn d_entry(&self, i: usize) -> EntryPoly {
        self.minor_entry(&Partition::r_k(self.n, i), self.n - i)
            .expect("rectangles fit their boxes")
    }

    pub fn d_prime_entry(&self, i: usize) -> EntryPoly {
        assert!(i >= 1 && i < self.n);
        self.minor_entry(&Partition::r_k_minus(self.n, i, 1), self.n - i)
            .expect("R_i - 1 fits the box")
    }

    /// Entry `(i, j)` of the unipotent factor `u^{-1}`:
    /// `z_{R_{i-1} - (i-j), n-i+1} / D_{i-1}` for `j <= i`.
    pub fn u_inverse_entry(
        &self,
        i: usize,
        j: usize,
    ) -> Result<(Polynomial, Polynomial), CentralizerError> {
        assert!(1 <= j && j <= i && i <= self.n);
        if i == j {
            return Ok((Polynomial::one(), Polynomial::one()));
        }
        let lam = Partition::r_k_minus(self.n, i - 1, i - j);
        let num = self.minor(&lam, self.n - i + 1)?;
        Ok((num, self.d(i - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: i32) -> Polynomial {
        Polynomial::var(VarId::g(i))
    }

    #[test]
    fn matrix_entries_n2_and_n3() {
        let m2 = CentralizerMatrix::build(2);
        let r2 = m2.ring();
        // (2,2) = 1 + (a_1 - a_2) g_1
        let expect = Polynomial::one().add(&r2.alpha(1).mul(&g(1)));
        assert_eq!(m2.entry(2, 2), &expect);

        let m3 = CentralizerMatrix::build(3);
        let r3 = m3.ring();
        let a13 = r3.a(1).sub(&r3.a(3));
        let a23 = r3.a(2).sub(&r3.a(3));
        // (2,3) = g_1 + (a_1 - a_3) g_2
        assert_eq!(m3.entry(2, 3), &g(1).add(&a13.mul(&g(2))));
        // (3,3) = 1 + (a_1 - a_3) g_1 + (a_1 - a_3)(a_2 - a_3) g_2
        let expect33 = Polynomial::one()
            .add(&a13.mul(&g(1)))
            .add(&a13.mul(&a23).mul(&g(2)));
        assert_eq!(m3.entry(3, 3), &expect33);
    }

    #[test]
    fn minors_n3() {
        let m = CentralizerMatrix::build(3);
        let r = m.ring();
        // empty minor
        assert_eq!(
            m.minor(&Partition::empty(), 0).unwrap(),
            Polynomial::one()
        );
        // D_2 = g_2
        assert_eq!(m.d(2), g(2));
        // D_1 = g_1^2 - g_2 + (a_2 - a_3) g_2 g_1
        let a23 = r.a(2).sub(&r.a(3));
        let expect = g(1)
            .mul(&g(1))
            .sub(&g(2))
            .add(&a23.mul(&g(2)).mul(&g(1)));
        assert_eq!(m.d(1), expect);
        // D_0 = (2,2)(3,3) (product of the diagonal above the corner)
        assert_eq!(m.d(0), m.entry(2, 2).mul(m.entry(3, 3)));
        // box violations rejected
        assert!(m.minor(&Partition::new(vec![2, 1]), 1).is_err());
    }

    #[test]
    fn mutation_changes_the_matrix() {
        let good = CentralizerMatrix::build(3);
        let bad = CentralizerMatrix::build_with_mutation(3, CentralizerMutation::FlipRecursionSign);
        assert_ne!(good.entry(2, 2), bad.entry(2, 2));
    }
}
