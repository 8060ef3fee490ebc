//! The generator assignment `phi(z_{k,k+p}) = j_{tau^k c_p} / j_{tau^{k-1}}`
//! into the (localized) Peterson algebra.
//!
//! The divisor `j_{tau^{k-1}}` is a translation group element, so entry
//! images land in `B_e` itself; only `D`-denominators of full ratios need
//! the localization.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::peterson::{JBasis, LocalizedPetersonElement, PetersonElement};
use crate::nilhecke::NilHeckeElement;
use crate::weyl::{Coweight, ExtAffineElement};

use super::{CentralizerError, EntryPoly};

pub struct PhiTilde<'a> {
    jb: &'a JBasis,
    entry_cache: Mutex<HashMap<(u8, u8), PetersonElement>>,
}

impl<'a> PhiTilde<'a> {
    pub fn new(jb: &'a JBasis) -> Self {
        PhiTilde {
            jb,
            entry_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.jb.n()
    }

    /// `phi(z_{ij}) = t_{-omega_{i-1}^vee} j_{tau^i c_{j-i}}`.
    pub fn entry_image(&self, i: usize, j: usize) -> Result<PetersonElement, CentralizerError> {
        assert!(1 <= i && i <= j && j <= self.n());
        if let Some(v) = self.entry_cache.lock().unwrap().get(&(i as u8, j as u8)) {
            return Ok(v.clone());
        }
        let inv = NilHeckeElement::expand_group(&ExtAffineElement::translation(
            &Coweight::fundamental(self.n(), i - 1).neg(),
        ));
        let jc = self.jb.j_tau_c(i, j - i)?;
        let v = PetersonElement::trusted(inv).mul(&jc);
        self.entry_cache
            .lock()
            .unwrap()
            .entry((i as u8, j as u8))
            .or_insert_with(|| v.clone());
        Ok(v)
    }

    /// Image of a polynomial in the entries.
    pub fn apply(&self, p: &EntryPoly) -> Result<PetersonElement, CentralizerError> {
        let n = self.n();
        let mut acc = NilHeckeElement::zero(n);
        for (m, c) in p.terms() {
            let mut prod = PetersonElement::one(n);
            for ((i, j), e) in m.factors() {
                let img = self.entry_image(i as usize, j as usize)?;
                for _ in 0..e {
                    prod = prod.mul(&img);
                }
            }
            acc = acc.add(&prod.elem().scale(c));
        }
        Ok(PetersonElement::trusted(acc))
    }

    /// Image of a degree-balanced ratio `num / prod_i D_i^{dpow_i}` in the
    /// localized Peterson algebra.
    pub fn apply_ratio(
        &self,
        num: &EntryPoly,
        dpow: &[u32],
    ) -> Result<LocalizedPetersonElement, CentralizerError> {
        let n = self.n();
        let num_degree = num
            .homogeneous_degree()
            .ok_or(CentralizerError::IllBalanced { num: 0, den: 0 })?;
        let den_degree: u32 = dpow
            .iter()
            .enumerate()
            .map(|(i, &e)| e * (n - i) as u32)
            .sum();
        if num_degree != den_degree {
            return Err(CentralizerError::IllBalanced {
                num: num_degree,
                den: den_degree,
            });
        }
        let image = self.apply(num)?;
        let mut den = Vec::new();
        for (i, &e) in dpow.iter().enumerate() {
            for _ in 0..e {
                den.push(Coweight::fundamental(n, i).neg());
            }
        }
        Ok(LocalizedPetersonElement::new(image, den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::CentralizerMatrix;
    use crate::peterson::j_solve;

    #[test]
    fn diagonal_entries_are_translations() {
        // phi(z_{kk}) = t_{omega_k - omega_{k-1}}
        let n = 3;
        let jb = JBasis::new(n);
        let phi = PhiTilde::new(&jb);
        for k in 1..=n {
            let img = phi.entry_image(k, k).unwrap();
            let t = ExtAffineElement::translation(
                &Coweight::fundamental(n, k).add(&Coweight::fundamental(n, k - 1).neg()),
            );
            assert_eq!(img.elem(), &NilHeckeElement::expand_group(&t), "k={k}");
        }
        // phi(z_11 z_22 ... z_kk) = t_{omega_k}
        let prod = EntryPoly::entry(1, 1).mul(&EntryPoly::entry(2, 2));
        let img = phi.apply(&prod).unwrap();
        let t = ExtAffineElement::translation(&Coweight::fundamental(n, 2));
        assert_eq!(img.elem(), &NilHeckeElement::expand_group(&t));
    }

    #[test]
    fn d_minor_maps_to_translation_class() {
        // phi(D_i) = j_{t_{-omega_i}}
        let n = 3;
        let jb = JBasis::new(n);
        let phi = PhiTilde::new(&jb);
        let m = CentralizerMatrix::build(n);
        for i in 0..n {
            let img = phi.apply(&m.d_entry(i)).unwrap();
            let expect = jb
                .j_translation(&Coweight::fundamental(n, i).neg())
                .unwrap();
            assert_eq!(img, expect, "D_{i}");
        }
    }

    #[test]
    fn d_prime_ratio_fixture() {
        // phi(D_i'/D_i) = j_{s_i t_{-omega_i}} / j_{t_{-omega_i}}
        let n = 2;
        let jb = JBasis::new(n);
        let phi = PhiTilde::new(&jb);
        let m = CentralizerMatrix::build(n);
        let i = 1;
        let mut dpow = vec![0; n];
        dpow[i] = 1;
        let lhs = phi.apply_ratio(&m.d_prime_entry(i), &dpow).unwrap();
        let omega = Coweight::fundamental(n, i).neg();
        let w = ExtAffineElement::simple(n, i)
            .mul(&ExtAffineElement::translation(&omega));
        assert!(w.is_grassmannian());
        let num = j_solve(&jb, &w, w.length() + n as u32).unwrap();
        let rhs = LocalizedPetersonElement::new(num, vec![omega]).unwrap();
        assert!(lhs.equals(&rhs, &jb).unwrap());
    }

    #[test]
    fn ill_balanced_ratio_rejected() {
        let n = 3;
        let jb = JBasis::new(n);
        let phi = PhiTilde::new(&jb);
        let m = CentralizerMatrix::build(n);
        // D_2 has entry-degree 1, but D_1's slot demands degree 2.
        let mut dpow = vec![0; n];
        dpow[1] = 1;
        assert!(matches!(
            phi.apply_ratio(&m.d_entry(2), &dpow),
            Err(CentralizerError::IllBalanced { .. })
        ));
    }
}
