//! The small-torus extended affine nilHecke algebra `A_e`.
//!
//! Elements are finite sums `sum c_w A_w` with `c_w` in `S` and `w` in
//! `W_e`. The conventions are pinned by the data fixtures:
//!
//! * `alpha_i = a_i - a_{i+1}` (indices mod `n`, so `alpha_0 = a_n - a_1`
//!   under the level-zero action),
//! * `A_i = alpha_i^{-1}(s_i - 1)`, so `A_i . a_i = -1`,
//! * `tau` rotates residues upward: `tau . a_i = a_{i+1}`,
//! * group elements embed via `s_i -> 1 + alpha_i A_i` and
//!   `A_{sigma v} = sigma A_v`.

mod coproduct;
mod element;

pub use coproduct::TensorElement;
pub use element::NilHeckeElement;

use crate::exactalg::{Polynomial, SRing};
use crate::weyl::ExtAffineElement;

/// Level-zero action of a group element on `S` through its residue
/// permutation.
pub fn group_action(ring: &SRing, w: &ExtAffineElement, f: &Polynomial) -> Polynomial {
    ring.act_residue_perm(&w.residue_perm(), f)
}

/// The action `A_i . f = (s_i . f - f) / alpha_i`; always exact.
pub fn demazure_action(ring: &SRing, i: usize, f: &Polynomial) -> Polynomial {
    let moved = ring.act_simple(i as i32, f);
    let num = moved.sub(f);
    let alpha = ring.alpha(i as i32);
    num.divide_exact(&alpha)
        .expect("s_i f - f is divisible by alpha_i")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarId;

    #[test]
    fn alpha_partial_sums() {
        // alpha_0 + ... + alpha_p = a_0 - a_{p+1}
        for n in 2..=4 {
            let s = SRing::new(n);
            for p in 0..n {
                let mut sum = Polynomial::zero();
                for i in 0..=p {
                    sum = sum.add(&s.alpha(i as i32));
                }
                let expect = s.a(0).sub(&s.a(p as i32 + 1));
                assert_eq!(sum, expect, "n={n}, p={p}");
            }
        }
    }

    #[test]
    fn demazure_basic_values() {
        let s = SRing::new(3);
        let a1 = Polynomial::var(VarId::a(1));
        assert_eq!(demazure_action(&s, 1, &a1), Polynomial::int(-1));
        assert_eq!(demazure_action(&s, 2, &a1), Polynomial::zero());
        assert_eq!(demazure_action(&s, 0, &a1), Polynomial::one());
        // Leibniz kills symmetric products: A_1 . (a_1 a_2) = 0
        let prod = a1.mul(&Polynomial::var(VarId::a(2)));
        assert_eq!(demazure_action(&s, 1, &prod), Polynomial::zero());
    }
}
