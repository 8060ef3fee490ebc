//! Constructive computation of the `j`-basis.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::exactalg::{Polynomial, SRing};
use crate::nilhecke::NilHeckeElement;
use crate::weyl::{
    grassmannian_to_partition, partition_to_grassmannian, Coweight, ExtAffineElement, Partition,
};

use super::{det_commutative, PetersonElement, PetersonError};

/// Shared cache of `j`-classes for a fixed rank; construction routes are
/// methods. Lookups are keyed by the indexing Grassmannian element and
/// inserts are idempotent, so the cache may be shared across threads.
pub struct JBasis {
    n: usize,
    cache: Mutex<HashMap<ExtAffineElement, PetersonElement>>,
}

impl JBasis {
    pub fn new(n: usize) -> Self {
        JBasis {
            n,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> SRing {
        SRing::new(self.n)
    }

    fn cached(&self, w: &ExtAffineElement) -> Option<PetersonElement> {
        self.cache.lock().unwrap().get(w).cloned()
    }

    fn insert(&self, w: ExtAffineElement, j: PetersonElement) -> PetersonElement {
        self.cache.lock().unwrap().entry(w).or_insert(j).clone()
    }

    /// `j_{t_lambda} = sum over the W-orbit of lambda of A_{t_mu}`, for
    /// antidominant `lambda`.
    pub fn j_translation(&self, lambda: &Coweight) -> Result<PetersonElement, PetersonError> {
        if !lambda.is_antidominant() {
            return Err(PetersonError::NotAntidominant(lambda.to_string()));
        }
        let w = ExtAffineElement::translation(lambda);
        if let Some(j) = self.cached(&w) {
            return Ok(j);
        }
        let mut elem = NilHeckeElement::zero(self.n);
        for mu in lambda.w_orbit() {
            elem = elem.add(&NilHeckeElement::basis(ExtAffineElement::translation(&mu)));
        }
        let j = PetersonElement::certify(elem)?;
        Ok(self.insert(w, j))
    }

    /// `j_{tau^k} = t_{omega_k^vee}` as a group element.
    pub fn j_tau(&self, k: usize) -> Result<PetersonElement, PetersonError> {
        let w = ExtAffineElement::tau_power(self.n, k as i64);
        if let Some(j) = self.cached(&w) {
            return Ok(j);
        }
        let t = ExtAffineElement::translation(&Coweight::fundamental(self.n, k));
        let j = PetersonElement::certify(NilHeckeElement::expand_group(&t))?;
        Ok(self.insert(w, j))
    }

    /// `j_{tau^k c_p}` for `1 <= k <= k + p <= n`, by upward recursion in
    /// `p` from `j_{tau^k}`: the relation
    /// `t_{-e_k} j_{tau^{k+1} c_{p-1}} = j_{tau^k c_{p-1}} + (a_k - a_{k+p})
    /// j_{tau^k c_p}` is solved for the new class, dividing out
    /// `(a_k - a_{k+p})` exactly.
    pub fn j_tau_c(&self, k: usize, p: usize) -> Result<PetersonElement, PetersonError> {
        assert!(k + p <= self.n, "need k + p <= n");
        assert!(p == 0 || k >= 1, "the recursion needs k >= 1");
        if p == 0 {
            return self.j_tau(k);
        }
        let w = ExtAffineElement::tau_power(self.n, k as i64)
            .mul(&ExtAffineElement::c_element(self.n, p));
        if let Some(j) = self.cached(&w) {
            return Ok(j);
        }
        let ring = self.ring();
        let upper = self.j_tau_c(k + 1, p - 1)?;
        let same = self.j_tau_c(k, p - 1)?;
        let mut coords = vec![0i64; self.n];
        coords[k - 1] = -1;
        let mover = NilHeckeElement::expand_group(&ExtAffineElement::translation(
            &Coweight::new(coords),
        ));
        let lhs = mover.mul(upper.elem());
        let divisor = ring.a(k as i32).sub(&ring.a((k + p) as i32));
        let num = lhs.sub(same.elem());
        let elem = num.divide_coeffs_exact(&divisor)?;
        let j = PetersonElement::certify(elem)?;
        debug_assert_eq!(
            j.grassmannian_part(),
            vec![(w.clone(), Polynomial::one())],
            "leading term of j_tau_c({k},{p})"
        );
        Ok(self.insert(w, j))
    }

    /// `j_{c_p}` (no rotation), for `p <= n-1`: untwist `j_{tau c_p}`
    /// through `j_{tau c_p} = j_tau (j_{c_p})^tau`.
    pub fn j_c(&self, p: usize) -> Result<PetersonElement, PetersonError> {
        if p == 0 {
            return Ok(PetersonElement::one(self.n));
        }
        assert!(p < self.n, "c_p is only needed for p <= n-1");
        let w = ExtAffineElement::c_element(self.n, p);
        if let Some(j) = self.cached(&w) {
            return Ok(j);
        }
        let rotated = self.j_tau_c(1, p)?;
        let inv_tau = NilHeckeElement::expand_group(&ExtAffineElement::translation(
            &Coweight::fundamental(self.n, 1).neg(),
        ));
        let elem = inv_tau.mul(rotated.elem()).twist(-1);
        let j = PetersonElement::certify(elem)?;
        debug_assert_eq!(
            j.grassmannian_part(),
            vec![(w.clone(), Polynomial::one())],
            "leading term of j_c({p})"
        );
        Ok(self.insert(w, j))
    }

    /// `j_{w_lambda^af}` via the k x k determinant of twisted special
    /// classes: `det(j_{c_{lambda_i - i + j}}^{tau^{1-j}})`.
    pub fn j_partition(&self, lambda: &Partition, k: usize) -> Result<PetersonElement, PetersonError> {
        if !lambda.fits_box(k, (self.n - k) as u32) {
            return Err(PetersonError::BoxViolation(
                lambda.to_string(),
                k,
                self.n - k,
            ));
        }
        if k == 0 {
            return Ok(PetersonElement::one(self.n));
        }
        let mut matrix = vec![vec![NilHeckeElement::zero(self.n); k]; k];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                // paper indices are 1-based: entry (i, j) holds
                // j_{c_{lambda_i - i + j}} twisted by tau^{1-j}
                let sub = lambda.part(i) as i64 - i as i64 + j as i64;
                *slot = if sub < 0 {
                    NilHeckeElement::zero(self.n)
                } else if sub == 0 {
                    NilHeckeElement::one(self.n)
                } else {
                    self.j_c(sub as usize)?.twist(-(j as i64)).into_elem()
                };
            }
        }
        let elem = det_commutative(&matrix, self.n);
        PetersonElement::certify(elem)
    }

    /// General dispatcher: `j_w` for any extended Grassmannian `w`, via the
    /// twist lemma, the small-box determinant, rectangle stripping, and the
    /// linear solve as a last resort.
    pub fn j_grassmannian(&self, w: &ExtAffineElement) -> Result<PetersonElement, PetersonError> {
        if !w.is_grassmannian() {
            return Err(PetersonError::NotGrassmannian(w.to_string()));
        }
        if let Some(j) = self.cached(w) {
            return Ok(j);
        }
        let (tau, body) = w.factor_sigma();
        let j = if tau != 0 {
            // j_{tau^k u} = j_{tau^k} (j_u)^{tau^k}
            let ju = self.j_grassmannian(&ExtAffineElement::from_affine(body))?;
            self.j_tau(tau as usize)?.mul(&ju.twist(tau as i64))
        } else {
            let lambda = grassmannian_to_partition(&body).expect("grassmannian body");
            self.j_affine_by_partition(&lambda, w)?
        };
        debug_assert_eq!(j.grassmannian_part(), vec![(w.clone(), Polynomial::one())]);
        Ok(self.insert(w.clone(), j))
    }

    fn j_affine_by_partition(
        &self,
        lambda: &Partition,
        w: &ExtAffineElement,
    ) -> Result<PetersonElement, PetersonError> {
        if lambda.is_empty() {
            return Ok(PetersonElement::one(self.n));
        }
        if (lambda.main_hook() as usize) < self.n {
            return self.j_partition(lambda, lambda.len());
        }
        if let Some(j) = self.try_rectangle_strip(lambda, w)? {
            return Ok(j);
        }
        super::j_solve(self, w, w.length() + self.n as u32)
    }

    /// Rectangle factorization: if the row multiset of `lambda` contains the
    /// rows of `R_i`, then `w_mu t_{-omega_i^vee} = tau^{-i} w_lambda` for
    /// the stripped partition `mu`, and the translation factor splits off.
    fn try_rectangle_strip(
        &self,
        lambda: &Partition,
        w: &ExtAffineElement,
    ) -> Result<Option<PetersonElement>, PetersonError> {
        for i in 1..self.n {
            let rows_of_i = lambda.parts().iter().filter(|&&p| p == i as u32).count();
            if rows_of_i < self.n - i {
                continue;
            }
            let mut parts = lambda.parts().to_vec();
            for _ in 0..self.n - i {
                let pos = parts.iter().position(|&p| p == i as u32).unwrap();
                parts.remove(pos);
            }
            let mu = Partition::new(parts);
            let w_mu = partition_to_grassmannian(&mu, self.n).expect("stripped stays bounded");
            let w_mu = ExtAffineElement::from_affine(w_mu);
            let omega = Coweight::fundamental(self.n, i);
            let candidate = w_mu.mul(&ExtAffineElement::translation(&omega.neg()));
            let target = ExtAffineElement::from_parts(-(i as i64), w.body().clone());
            if candidate != target {
                continue;
            }
            // j_{w_mu t_{-omega_i}} = j_{t_{-omega_i}} j_{w_mu}, and the
            // left side equals j_{tau^{-i}} (j_w)^{tau^{-i}}; solve for j_w.
            let j_mu = self.j_grassmannian(&w_mu)?;
            let jt = self.j_translation(&omega.neg())?;
            let inv_tau = NilHeckeElement::expand_group(&ExtAffineElement::translation(
                &Coweight::fundamental(self.n, self.n - i).neg(),
            ));
            let product = PetersonElement::trusted(inv_tau)
                .mul(&jt)
                .mul(&j_mu)
                .twist(i as i64);
            return Ok(Some(product));
        }
        Ok(None)
    }

    /// Projection `gr` to the Peterson subalgebra: keep Grassmannian
    /// coefficients and rebuild on the `j`-basis.
    pub fn gr(&self, x: &NilHeckeElement) -> Result<PetersonElement, PetersonError> {
        let mut acc = NilHeckeElement::zero(self.n);
        for (w, c) in x.grassmannian_part() {
            let j = self.j_grassmannian(&w)?;
            acc = acc.add(&j.elem().scale(&c));
        }
        PetersonElement::certify(acc)
    }

    /// Structure constants of `j_u j_v` on the `j`-basis; the expansion is
    /// verified by full reconstruction.
    pub fn structure_constants(
        &self,
        u: &ExtAffineElement,
        v: &ExtAffineElement,
    ) -> Result<Vec<(ExtAffineElement, Polynomial)>, PetersonError> {
        let product = self.j_grassmannian(u)?.mul(&self.j_grassmannian(v)?);
        let constants = product.grassmannian_part();
        let mut rebuilt = NilHeckeElement::zero(self.n);
        for (w, c) in &constants {
            rebuilt = rebuilt.add(&self.j_grassmannian(w)?.elem().scale(c));
        }
        if &rebuilt != product.elem() {
            return Err(PetersonError::NotCentral(format!(
                "structure constant expansion of {u} * {v} does not close"
            )));
        }
        Ok(constants)
    }

    /// Deterministic JSON dump of a `j`-class.
    pub fn dump_json(&self, w: &ExtAffineElement) -> Result<serde_json::Value, PetersonError> {
        let j = self.j_grassmannian(w)?;
        let mut support: Vec<_> = j
            .elem()
            .terms()
            .map(|(x, c)| (x.length(), x.to_string(), c.to_string()))
            .collect();
        support.sort();
        Ok(serde_json::json!({
            "word": w.to_string(),
            "support": support
                .into_iter()
                .map(|(_, element, coefficient)| serde_json::json!({
                    "element": element,
                    "coefficient": coefficient,
                }))
                .collect::<Vec<_>>(),
        }))
    }
}

