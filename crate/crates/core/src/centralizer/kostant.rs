//! Kostant's substitution: `x`-partial-sums and `q`-parameters as ratios
//! of the distinguished minors.

use std::collections::HashMap;

use crate::exactalg::{Polynomial, RationalFunction, VarFamily, VarId};

use super::CentralizerMatrix;

/// A fraction whose denominator is a monomial in the `D_i`; the shape every
/// value in the substitution pipeline has. Cancellation only ever divides
/// out whole `D`-factors, which keeps the `n = 4` sweep away from general
/// gcds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DFraction {
    num: Polynomial,
    /// `dpow[i]` = power of `D_i` in the denominator, `0 <= i <= n-1`.
    dpow: Vec<u32>,
}

impl DFraction {
    pub fn from_poly(num: Polynomial, n: usize) -> Self {
        DFraction {
            num,
            dpow: vec![0; n],
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_poly(Polynomial::zero(), n)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn d_powers(&self) -> &[u32] {
        &self.dpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(mut self, ds: &[Polynomial]) -> Self {
        if self.num.is_zero() {
            self.dpow.iter_mut().for_each(|p| *p = 0);
            return self;
        }
        for (i, p) in self.dpow.iter_mut().enumerate() {
            while *p > 0 {
                match self.num.divide_exact(&ds[i]) {
                    Ok(q) => {
                        self.num = q;
                        *p -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        self
    }

    pub fn add(&self, other: &Self, ds: &[Polynomial]) -> Self {
        let common: Vec<u32> = self
            .dpow
            .iter()
            .zip(&other.dpow)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let mut lhs = self.num.clone();
        let mut rhs = other.num.clone();
        for i in 0..common.len() {
            for _ in self.dpow[i]..common[i] {
                lhs = lhs.mul(&ds[i]);
            }
            for _ in other.dpow[i]..common[i] {
                rhs = rhs.mul(&ds[i]);
            }
        }
        DFraction {
            num: lhs.add(&rhs),
            dpow: common,
        }
        .reduce(ds)
    }

    pub fn sub(&self, other: &Self, ds: &[Polynomial]) -> Self {
        self.add(
            &DFraction {
                num: other.num.neg(),
                dpow: other.dpow.clone(),
            },
            ds,
        )
    }

    pub fn mul(&self, other: &Self, ds: &[Polynomial]) -> Self {
        DFraction {
            num: self.num.mul(&other.num),
            dpow: self
                .dpow
                .iter()
                .zip(&other.dpow)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
        .reduce(ds)
    }

    pub fn mul_poly(&self, p: &Polynomial, ds: &[Polynomial]) -> Self {
        DFraction {
            num: self.num.mul(p),
            dpow: self.dpow.clone(),
        }
        .reduce(ds)
    }

    /// `self == p` as rational functions.
    pub fn equals_poly(&self, p: &Polynomial, ds: &[Polynomial]) -> bool {
        let mut rhs = p.clone();
        for (i, &e) in self.dpow.iter().enumerate() {
            for _ in 0..e {
                rhs = rhs.mul(&ds[i]);
            }
        }
        self.num == rhs
    }

    /// Cross-multiplied equality.
    pub fn equals(&self, other: &Self, ds: &[Polynomial]) -> bool {
        let mut lhs = self.num.clone();
        let mut rhs = other.num.clone();
        for i in 0..self.dpow.len() {
            let m = self.dpow[i].max(other.dpow[i]);
            for _ in self.dpow[i]..m {
                lhs = lhs.mul(&ds[i]);
            }
            for _ in other.dpow[i]..m {
                rhs = rhs.mul(&ds[i]);
            }
        }
        lhs == rhs
    }

    pub fn to_rational(&self, ds: &[Polynomial]) -> RationalFunction {
        let mut den = Polynomial::one();
        for (i, &e) in self.dpow.iter().enumerate() {
            for _ in 0..e {
                den = den.mul(&ds[i]);
            }
        }
        RationalFunction::new(self.num.clone(), den).expect("D_i are nonzero")
    }
}

/// The images of the generators under Kostant's substitution, plus the
/// evaluation map on `S[x;q]`.
pub struct KostantImage {
    matrix: CentralizerMatrix,
    ds: Vec<Polynomial>,
    x_images: Vec<DFraction>,
    q_images: Vec<DFraction>,
}

impl KostantImage {
    pub fn new(n: usize) -> Self {
        Self::from_matrix(CentralizerMatrix::build(n))
    }

    pub fn from_matrix(matrix: CentralizerMatrix) -> Self {
        let n = matrix.n();
        let ds: Vec<Polynomial> = (0..n).map(|i| matrix.d(i)).collect();
        // xsum_i = a_1 + ... + a_i + D_i'/D_i
        let xsum = |i: usize| -> DFraction {
            if i == 0 || i == n {
                return DFraction::zero(n);
            }
            let ring = matrix.ring();
            let mut head = Polynomial::zero();
            for k in 1..=i {
                head = head.add(&ring.a(k as i32));
            }
            let mut dpow = vec![0; n];
            dpow[i] = 1;
            DFraction {
                num: head.mul(&ds[i]).add(&matrix.d_prime(i)),
                dpow,
            }
        };
        let x_images: Vec<DFraction> = (1..=n)
            .map(|i| xsum(i).sub(&xsum(i - 1), &ds))
            .collect();
        let q_images: Vec<DFraction> = (1..n)
            .map(|i| {
                let mut dpow = vec![0; n];
                dpow[i] = 2;
                let upper = if i + 1 == n {
                    Polynomial::one()
                } else {
                    ds[i + 1].clone()
                };
                DFraction {
                    num: ds[i - 1].mul(&upper),
                    dpow,
                }
                .reduce(&ds)
            })
            .collect();
        KostantImage {
            matrix,
            ds,
            x_images,
            q_images,
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &CentralizerMatrix {
        &self.matrix
    }

    pub fn d_polys(&self) -> &[Polynomial] {
        &self.ds
    }

    /// `Psi(x_i)` as a reduced rational function.
    pub fn x_image(&self, i: usize) -> RationalFunction {
        self.x_images[i - 1].to_rational(&self.ds)
    }

    /// `Psi(q_i)` as a reduced rational function.
    pub fn q_image(&self, i: usize) -> RationalFunction {
        self.q_images[i - 1].to_rational(&self.ds)
    }

    /// `Psi(x_1 + ... + x_i)`.
    pub fn xsum_image(&self, i: usize) -> RationalFunction {
        let mut acc = DFraction::zero(self.n());
        for k in 1..=i {
            acc = acc.add(&self.x_images[k - 1], &self.ds);
        }
        acc.to_rational(&self.ds)
    }

    /// Apply the substitution to a polynomial in `S[x;q]`.
    pub fn apply_psi(&self, p: &Polynomial) -> RationalFunction {
        self.apply_psi_fraction(p).to_rational(&self.ds)
    }

    /// Substitution with the structured denominator kept.
    pub fn apply_psi_fraction(&self, p: &Polynomial) -> DFraction {
        let n = self.n();
        let mut power_cache: HashMap<(VarId, u16), DFraction> = HashMap::new();
        let mut acc = DFraction::zero(n);
        for (m, c) in p.terms() {
            let mut base = Polynomial::term(crate::exactalg::Monomial::one(), c.clone());
            let mut frac = DFraction::from_poly(Polynomial::one(), n);
            for (v, e) in m.pairs().iter().cloned() {
                match v.family {
                    VarFamily::A => {
                        base = base.mul(&Polynomial::var(v).pow(e as u32));
                    }
                    VarFamily::X | VarFamily::Q => {
                        let pow = power_cache
                            .entry((v, e))
                            .or_insert_with(|| {
                                let img = if v.family == VarFamily::X {
                                    &self.x_images[(v.index - 1) as usize]
                                } else {
                                    &self.q_images[(v.index - 1) as usize]
                                };
                                let mut acc = DFraction::from_poly(Polynomial::one(), n);
                                for _ in 0..e {
                                    acc = acc.mul(img, &self.ds);
                                }
                                acc
                            })
                            .clone();
                        frac = frac.mul(&pow, &self.ds);
                    }
                    other => panic!("unexpected variable family {other:?} in S[x;q]"),
                }
            }
            let term = frac.mul_poly(&self.matrix.ring().reduce(&base), &self.ds);
            acc = acc.add(&term, &self.ds);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SRing;

    fn g(i: i32) -> Polynomial {
        Polynomial::var(VarId::g(i))
    }
    fn x(i: i32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }

    #[test]
    fn psi_x1_n2() {
        // x_1 -> a_1 + 1/D_1 with D_1 = g_1
        let k = KostantImage::new(2);
        let ring = SRing::new(2);
        let img = k.x_image(1);
        let expect = RationalFunction::new(
            ring.a(1).mul(&g(1)).add(&Polynomial::one()),
            g(1),
        )
        .unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn psi_q1_n3() {
        // q_1 -> D_2 D_0 / D_1^2
        let k = KostantImage::new(3);
        let m = k.matrix();
        let img = k.q_image(1);
        let expect =
            RationalFunction::new(m.d(2).mul(&m.d(0)), m.d(1).mul(&m.d(1))).unwrap();
        assert_eq!(img, expect);
    }

    #[test]
    fn psi_kills_the_first_power_sum() {
        // x_1 + x_2 + x_3 -> a_1 + a_2 + a_3 = 0
        let k = KostantImage::new(3);
        let s = x(1).add(&x(2)).add(&x(3));
        assert!(k.apply_psi(&s).is_zero());
        // and x_1 + x_2 -> a_1 + a_2 + g_1/D_2
        let ring = SRing::new(3);
        let img = k.xsum_image(2);
        let expect = RationalFunction::new(
            ring.a(1).add(&ring.a(2)).mul(&g(2)).add(&g(1)),
            g(2),
        )
        .unwrap();
        assert_eq!(img, expect);
    }
}
