//! Reduced fractions of polynomials.

use std::fmt;

use num_traits::{One, Signed};

use super::{poly_gcd, AlgError, Polynomial, Rat};

/// A fraction of polynomials kept in canonical form: `gcd(num, den) = 1`,
/// the denominator is primitive with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        Ok(rf)
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        // Monomial content first: cheap and frequent.
        let mg = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !mg.is_one() {
            self.num = strip(&self.num, &mg);
            self.den = strip(&self.den, &mg);
        }
        if !self.den.is_constant() {
            // Exact cancellation happens constantly in the pipeline; try it
            // before a general gcd.
            if let Ok(q) = self.num.divide_exact(&self.den) {
                self.num = q;
                self.den = Polynomial::one();
            } else if let Ok(q) = self.den.divide_exact(&self.num) {
                self.num = Polynomial::one();
                self.den = q;
            } else {
                let g = poly_gcd(&self.num, &self.den);
                if !g.is_constant() {
                    self.num = self.num.divide_exact(&g).expect("gcd divides");
                    self.den = self.den.divide_exact(&g).expect("gcd divides");
                }
            }
        }
        // Scale the denominator primitive with positive leading coefficient.
        let c = self.den.content();
        let scale = Rat::one() / c;
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
        if self
            .den
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgError> {
        if other.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Evaluate at a rational point; `None` when a variable is missing or
    /// the denominator vanishes there.
    pub fn eval(&self, point: &std::collections::BTreeMap<super::VarId, Rat>) -> Option<Rat> {
        let d = self.den.eval(point)?;
        if d == Rat::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }
}

fn strip(p: &Polynomial, m: &super::Monomial) -> Polynomial {
    Polynomial::from_terms(
        p.terms()
            .map(|(mm, c)| (mm.try_div(m).expect("content divides"), c.clone())),
    )
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VarId;

    fn v(i: i32) -> Polynomial {
        Polynomial::var(VarId::a(i))
    }

    #[test]
    fn reduction_cancels_common_factor() {
        let f = RationalFunction::new(
            v(1).mul(&v(1)).sub(&v(2).mul(&v(2))),
            v(1).sub(&v(2)),
        )
        .unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.numerator(), &v(1).add(&v(2)));
    }

    #[test]
    fn arithmetic_matches_cross_multiplication() {
        let f = RationalFunction::new(Polynomial::one(), v(1).clone()).unwrap();
        let g = RationalFunction::new(Polynomial::one(), v(2).clone()).unwrap();
        let s = f.add(&g);
        // 1/a1 + 1/a2 = (a1+a2)/(a1 a2)
        assert_eq!(s.numerator(), &v(1).add(&v(2)));
        assert_eq!(s.denominator(), &v(1).mul(&v(2)));
    }

    #[test]
    fn denominator_sign_normalized() {
        let f = RationalFunction::new(v(1).clone(), v(2).neg()).unwrap();
        assert!(f
            .denominator()
            .leading()
            .map(|(_, c)| !c.is_negative())
            .unwrap());
        assert_eq!(f.numerator(), &v(1).neg());
    }
}
