//! Dual elementary symmetric functions.
//!
//! `sum_j eh_j(y||a) (t+a_0)...(t+a_{j-1}) = prod_i (1+t y_i)/(1-a_0 y_i)`:
//! expanding the right side as `[sum_k t^k e_k][sum_m a_0^m h_m]` and
//! matching powers of `t` gives a triangular system solved from the top
//! degree down.

use crate::exactalg::{Polynomial, VarId};

use super::series::{e_poly, h_in_e};
use super::TruncatedSeries;

/// The family `eh_0, ..., eh_N` at cutoff `N`.
#[derive(Debug, Clone)]
pub struct DualBasis {
    cutoff: u32,
    ehat: Vec<TruncatedSeries>,
}

impl DualBasis {
    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// `eh_j(y||a)`; `j` may exceed the cutoff, in which case the truncated
    /// series is zero.
    pub fn e(&self, j: i64) -> TruncatedSeries {
        if j < 0 {
            return TruncatedSeries::zero(self.cutoff);
        }
        self.ehat
            .get(j as usize)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(self.cutoff))
    }

    /// `hh_i(y||a) = eh_i(y||a)^{omega eta}`.
    pub fn h(&self, i: i64) -> TruncatedSeries {
        self.e(i).omega().eta()
    }
}

/// Compute the dual elementary family to `y`-degree `cutoff`.
pub fn dual_e_family(cutoff: u32) -> DualBasis {
    let n = cutoff;
    // H = sum_m a_0^m h_m[y]
    let a0 = Polynomial::var(VarId::a(0));
    let mut h_series = Polynomial::zero();
    for m in 0..=n {
        h_series = h_series.add(&h_in_e(m).mul(&a0.pow(m)));
    }
    let h_series = TruncatedSeries::new(cutoff, h_series);

    let mut ehat: Vec<TruncatedSeries> = vec![TruncatedSeries::zero(cutoff); n as usize + 1];
    for k in (0..=n).rev() {
        // eh_k = e_k H - sum_{j>k} eh_j e_{j-k}(a_0..a_{j-1})
        let mut rhs = TruncatedSeries::new(cutoff, e_poly(k)).mul(&h_series);
        for j in k + 1..=n {
            let sym = elementary_in_a(j - k, j);
            rhs = rhs.sub(&ehat[j as usize].scale(&sym));
        }
        ehat[k as usize] = rhs;
    }
    DualBasis { cutoff, ehat }
}

/// `e_r(a_0, a_1, ..., a_{count-1})`.
fn elementary_in_a(r: u32, count: u32) -> Polynomial {
    let r = r as usize;
    let mut layers: Vec<Polynomial> = vec![Polynomial::zero(); r + 1];
    layers[0] = Polynomial::one();
    for i in 0..count {
        let ai = Polynomial::var(VarId::a(i as i32));
        for k in (1..=r.min(i as usize + 1)).rev() {
            let add = layers[k - 1].mul(&ai);
            layers[k] = layers[k].add(&add);
        }
    }
    layers[r].clone()
}

/// `prod_i (1 - a_r y_i)/(1 - a_s y_i)` as a truncated series.
pub fn omega_ratio(r: i32, s: i32, cutoff: u32) -> TruncatedSeries {
    let ar = Polynomial::var(VarId::a(r));
    let as_ = Polynomial::var(VarId::a(s));
    let mut num = Polynomial::zero();
    let mut den = Polynomial::zero();
    for k in 0..=cutoff {
        let sign = if k % 2 == 0 {
            ar.pow(k)
        } else {
            ar.pow(k).neg()
        };
        num = num.add(&e_poly(k).mul(&sign));
        den = den.add(&h_in_e(k).mul(&as_.pow(k)));
    }
    TruncatedSeries::new(cutoff, num).mul(&TruncatedSeries::new(cutoff, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eh0_is_one_and_eh1_low_terms() {
        let b = dual_e_family(2);
        assert_eq!(b.e(0), TruncatedSeries::one(2));
        // eh_1 = e_1 + (a_0 h_2 - a_1 e_2) + O(deg 3)
        let a0 = Polynomial::var(VarId::a(0));
        let a1 = Polynomial::var(VarId::a(1));
        let expect = TruncatedSeries::new(
            2,
            e_poly(1)
                .add(&h_in_e(2).mul(&a0))
                .sub(&e_poly(2).mul(&a1)),
        );
        assert_eq!(b.e(1), expect);
    }

    #[test]
    fn defining_recursion_at_r1() {
        // 1 + (a_0 - a_1) eh_1 = prod (1 - a_1 y)/(1 - a_0 y)
        let cutoff = 6;
        let b = dual_e_family(cutoff);
        let a0 = Polynomial::var(VarId::a(0));
        let a1 = Polynomial::var(VarId::a(1));
        let lhs = TruncatedSeries::one(cutoff).add(&b.e(1).scale(&a0.sub(&a1)));
        assert_eq!(lhs, omega_ratio(1, 0, cutoff));
    }

    #[test]
    fn defining_recursion_general() {
        // sum_{j<=r} eh_j (a_0-a_r)...(a_{j-1}-a_r) = prod (1-a_r y)/(1-a_0 y)
        let cutoff = 5;
        let b = dual_e_family(cutoff);
        for r in 2..=3i32 {
            let mut lhs = TruncatedSeries::zero(cutoff);
            for j in 0..=r {
                let mut factor = Polynomial::one();
                for i in 0..j {
                    factor = factor.mul(
                        &Polynomial::var(VarId::a(i)).sub(&Polynomial::var(VarId::a(r))),
                    );
                }
                lhs = lhs.add(&b.e(j as i64).scale(&factor));
            }
            assert_eq!(lhs, omega_ratio(r, 0, cutoff), "r = {r}");
        }
    }

    #[test]
    fn classical_limit_and_index_support() {
        let b = dual_e_family(5);
        for j in 0..=5i64 {
            // a -> 0 sends eh_j to e_j
            assert_eq!(
                b.e(j).classical_limit(),
                TruncatedSeries::new(5, e_poly(j as u32))
            );
            // eh_j depends only on a_0..a_j
            let support = b.e(j).a_indices();
            assert!(
                support.iter().all(|&i| 0 <= i && i <= j as i32),
                "eh_{j} touches {support:?}"
            );
        }
    }
}
