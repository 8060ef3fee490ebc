//! Derivation of the antidominant coweight `lambda(w)` and the affine data
//! attached to a finite permutation.
//!
//! `lambda(w) = -sum of fundamental coweights over the right descents of
//! w`; it is the minimal antidominant coweight with `w t_lambda`
//! extended-Grassmannian, and `w t_lambda` factors as `tau^k w_mu^af`.

use crate::schubert::right_descents;
use crate::weyl::{grassmannian_to_partition, AffinePerm, Coweight, ExtAffineElement, Partition};

#[derive(Debug, Clone)]
pub struct LambdaData {
    pub n: usize,
    /// Right descent set of `w`.
    pub descents: Vec<usize>,
    /// `lambda(w)`.
    pub lambda: Coweight,
    /// `w t_lambda`, always extended-Grassmannian.
    pub wt_lambda: ExtAffineElement,
    /// Bounded partition of the affine body.
    pub mu: Partition,
    /// Representatives `k` in `0..=n` of the rotation sector for which the
    /// minor `z_{mu,k}` exists (`mu` fits the `(n-k) x k` box).
    pub minor_k: Option<usize>,
}

pub fn derive_lambda_w(w: &[usize]) -> LambdaData {
    let n = w.len();
    let descents = right_descents(w);
    let mut lambda = Coweight::zero(n);
    for &i in &descents {
        lambda = lambda.add(&Coweight::fundamental(n, i).neg());
    }
    let wt_lambda = ExtAffineElement::from_affine(AffinePerm::from_finite(w))
        .mul(&ExtAffineElement::translation(&lambda));
    assert!(
        wt_lambda.is_grassmannian(),
        "w t_lambda(w) must be Grassmannian for w = {w:?}"
    );
    let (tau, body) = wt_lambda.factor_sigma();
    let mu = grassmannian_to_partition(&body).expect("grassmannian body");
    let minor_k = (0..=n)
        .filter(|k| k % n == tau as usize % n)
        .find(|&k| mu.fits_box(k, (n - k) as u32));
    LambdaData {
        n,
        descents,
        lambda,
        wt_lambda,
        mu,
        minor_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_trivial_data() {
        let d = derive_lambda_w(&[1, 2, 3]);
        assert!(d.descents.is_empty());
        assert_eq!(d.lambda, Coweight::zero(3));
        assert!(d.wt_lambda.is_identity());
        assert!(d.mu.is_empty());
        assert_eq!(d.minor_k, Some(0));
    }

    #[test]
    fn simple_reflections_give_single_denominators() {
        // w = s_i: descent {i}; w t_{-omega_i} is Grassmannian
        for n in 2..=4usize {
            for i in 1..n {
                let mut w: Vec<usize> = (1..=n).collect();
                w.swap(i - 1, i);
                let d = derive_lambda_w(&w);
                assert_eq!(d.descents, vec![i]);
                assert_eq!(d.lambda, Coweight::fundamental(n, i).neg());
                assert!(d.wt_lambda.is_grassmannian());
            }
        }
    }

    #[test]
    fn s2s1_at_n3_lands_on_the_empty_minor() {
        // w = s_2 s_1 = [3,1,2]: Des = {1}, wt_lambda = tau^{-1},
        // mu = empty, k = 2.
        let d = derive_lambda_w(&[3, 1, 2]);
        assert_eq!(d.descents, vec![1]);
        assert!(d.mu.is_empty());
        assert_eq!(d.wt_lambda.tau_part(), 2);
        assert!(d.wt_lambda.body().is_identity());
        assert_eq!(d.minor_k, Some(2));
    }

    #[test]
    fn w0_at_n3_needs_the_fallback() {
        // w_0 = [3,2,1]: wt_lambda = s_0, mu = (1), no representative k
        // fits the box.
        let d = derive_lambda_w(&[3, 2, 1]);
        assert_eq!(d.descents, vec![1, 2]);
        assert_eq!(d.wt_lambda.tau_part(), 0);
        assert_eq!(d.mu, Partition::new(vec![1]));
        assert_eq!(d.minor_k, None);
    }
}
