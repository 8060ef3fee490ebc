//! The Peterson algebra localized at translation classes.

use crate::weyl::Coweight;

use super::{JBasis, PetersonElement, PetersonError};

/// A fraction `numerator / prod_i j_{t_{lambda_i}}` with antidominant
/// denominators. `B_e` is commutative, so equality by cross-multiplication
/// is well-defined.
#[derive(Debug, Clone)]
pub struct LocalizedPetersonElement {
    num: PetersonElement,
    den: Vec<Coweight>,
}

impl LocalizedPetersonElement {
    pub fn new(num: PetersonElement, den: Vec<Coweight>) -> Result<Self, PetersonError> {
        for lam in &den {
            if !lam.is_antidominant() {
                return Err(PetersonError::NotAntidominant(lam.to_string()));
            }
        }
        Ok(LocalizedPetersonElement { num, den })
    }

    pub fn from_element(num: PetersonElement) -> Self {
        LocalizedPetersonElement {
            num,
            den: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &PetersonElement {
        &self.num
    }

    pub fn denominators(&self) -> &[Coweight] {
        &self.den
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        LocalizedPetersonElement {
            num: self.num.mul(&other.num),
            den,
        }
    }

    fn denominator_product(&self, jb: &JBasis) -> Result<PetersonElement, PetersonError> {
        let mut acc = PetersonElement::one(jb.n());
        for lam in &self.den {
            acc = acc.mul(&jb.j_translation(lam)?);
        }
        Ok(acc)
    }

    /// Equality by cross-multiplication in `B_e`.
    pub fn equals(&self, other: &Self, jb: &JBasis) -> Result<bool, PetersonError> {
        let lhs = self.num.mul(&other.denominator_product(jb)?);
        let rhs = other.num.mul(&self.denominator_product(jb)?);
        Ok(lhs == rhs)
    }
}

impl std::fmt::Display for LocalizedPetersonElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (i, lam) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "j_t{lam}")?;
        }
        write!(f, ")")
    }
}
