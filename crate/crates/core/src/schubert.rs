//! Quantum double Schubert polynomials and Kim's presentation.
//!
//! The tridiagonal matrix has diagonal `x_1..x_m`, superdiagonal `-1`, and
//! subdiagonal `q_1..q_{m-1}`. Its characteristic coefficients are the
//! basic invariants `g_{j,n}(x;q)`; the quantum double Schubert family
//! descends from
//! `S_{w_0}(x;a) = prod_i det(C_i - a_{n-i} id_i)` by `a`-divided
//! differences `S_w = -d_i S_{s_i w}` for `s_i w > w`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::exactalg::{det, Polynomial, SRing, VarId};

/// Entries of the tridiagonal matrix `C_m - shift * id`.
pub fn tridiagonal_matrix(m: usize, shift: &Polynomial) -> Vec<Vec<Polynomial>> {
    let mut out = vec![vec![Polynomial::zero(); m]; m];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Polynomial::var(VarId::x(i as i32 + 1)).sub(shift);
        if i + 1 < m {
            row[i + 1] = Polynomial::int(-1);
        }
        if i >= 1 {
            row[i - 1] = Polynomial::var(VarId::q(i as i32));
        }
    }
    out
}

/// The basic invariants `g_{1,n}, ..., g_{n,n}` from
/// `det(C_n - z id) = sum_j (-z)^{n-j} g_{j,n}(x;q)`.
pub fn basic_invariants(n: usize) -> Vec<Polynomial> {
    let z = VarId::aux(0);
    let char_poly = det(&tridiagonal_matrix(n, &Polynomial::var(z))).expect("square");
    (1..=n)
        .map(|j| {
            let c = char_poly.coefficient_of_power(z, (n - j) as u16);
            if (n - j) % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect()
}

/// Generators `g_{j,n}(x;q) - e_j(a)` of Kim's ideal, reduced in `S`.
pub fn kim_ideal_generators(ring: &SRing) -> Vec<Polynomial> {
    let n = ring.n();
    basic_invariants(n)
        .into_iter()
        .enumerate()
        .map(|(j0, g)| g.sub(&ring.elementary(j0 + 1)))
        .collect()
}

/// `d_i^a = (a_i - a_{i+1})^{-1} (1 - s_i^a)`, acting on the `a`-alphabet
/// only; exact on polynomials.
pub fn divided_difference_a(ring: &SRing, i: usize, p: &Polynomial) -> Polynomial {
    assert!(i >= 1 && i < ring.n());
    let moved = ring.act_simple(i as i32, p);
    ring.reduce(p)
        .sub(&moved)
        .divide_exact(&ring.alpha(i as i32))
        .expect("1 - s_i is divisible by alpha_i")
}

fn perm_length(w: &[usize]) -> u32 {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn left_mul_simple(w: &[usize], i: usize) -> Vec<usize> {
    // s_i ∘ w: exchange the values i, i+1.
    w.iter()
        .map(|&v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect()
}

/// Right descents `{i : w s_i < w}` of a finite permutation.
pub fn right_descents(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// A quantum double Schubert polynomial together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSchubert {
    pub w: Vec<usize>,
    pub poly: Polynomial,
}

/// Sign conventions that can be deliberately corrupted for negative
/// controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchubertMutation {
    #[default]
    None,
    /// Drop the minus sign in the descent recursion.
    FlipRecursionSign,
}

/// Memoized table of quantum double Schubert polynomials for a fixed rank.
pub struct SchubertTable {
    ring: SRing,
    mutation: SchubertMutation,
    cache: Mutex<HashMap<Vec<usize>, Polynomial>>,
}

impl SchubertTable {
    pub fn new(n: usize) -> Self {
        Self::with_mutation(n, SchubertMutation::None)
    }

    pub fn with_mutation(n: usize, mutation: SchubertMutation) -> Self {
        SchubertTable {
            ring: SRing::new(n),
            mutation,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn ring(&self) -> &SRing {
        &self.ring
    }

    /// `S_{w_0}(x;a) = prod_{i=1}^{n-1} det(C_i - a_{n-i} id_i)`.
    fn top_polynomial(&self) -> Polynomial {
        let n = self.n();
        let mut acc = Polynomial::one();
        for i in 1..n {
            let shift = self.ring.a((n - i) as i32);
            let d = det(&tridiagonal_matrix(i, &shift)).expect("square");
            acc = acc.mul(&d);
        }
        self.ring.reduce(&acc)
    }

    pub fn quantum_schubert(&self, w: &[usize]) -> QuantumSchubert {
        QuantumSchubert {
            w: w.to_vec(),
            poly: self.compute(w, false),
        }
    }

    /// Recompute along the opposite (largest-ascent) descent path; equality
    /// with the default path is the path-independence check.
    pub fn quantum_schubert_alt_path(&self, w: &[usize]) -> QuantumSchubert {
        QuantumSchubert {
            w: w.to_vec(),
            poly: self.compute(w, true),
        }
    }

    fn compute(&self, w: &[usize], largest_ascent: bool) -> Polynomial {
        let n = self.n();
        assert_eq!(w.len(), n);
        if !largest_ascent {
            if let Some(p) = self.cache.lock().unwrap().get(w) {
                return p.clone();
            }
        }
        let len = perm_length(w);
        let poly = if len == (n * (n - 1) / 2) as u32 {
            self.top_polynomial()
        } else {
            let ascents: Vec<usize> = (1..n)
                .filter(|&i| perm_length(&left_mul_simple(w, i)) == len + 1)
                .collect();
            let i = if largest_ascent {
                *ascents.last().expect("not w_0")
            } else {
                ascents[0]
            };
            let higher = self.compute(&left_mul_simple(w, i), largest_ascent);
            let d = divided_difference_a(&self.ring, i, &higher);
            match self.mutation {
                SchubertMutation::None => d.neg(),
                SchubertMutation::FlipRecursionSign => d,
            }
        };
        if !largest_ascent {
            self.cache
                .lock()
                .unwrap()
                .entry(w.to_vec())
                .or_insert_with(|| poly.clone());
        }
        poly
    }
}

/// Classical double Schubert polynomials built by the same recursion from
/// `prod_{i+j<=n} (x_i - a_j)`; the `q -> 0` cross-check target.
pub fn classical_double_schubert(ring: &SRing, w: &[usize]) -> Polynomial {
    let n = ring.n();
    let len = perm_length(w);
    if len == (n * (n - 1) / 2) as u32 {
        let mut acc = Polynomial::one();
        for i in 1..n {
            for j in 1..=(n - i) {
                let f = Polynomial::var(VarId::x(i as i32)).sub(&ring.a(j as i32));
                acc = acc.mul(&f);
            }
        }
        return ring.reduce(&acc);
    }
    let i = (1..n)
        .find(|&i| perm_length(&left_mul_simple(w, i)) == len + 1)
        .expect("not w_0");
    let higher = classical_double_schubert(ring, &left_mul_simple(w, i));
    divided_difference_a(ring, i, &higher).neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::finite_permutations;

    fn x(i: i32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }
    fn q(i: i32) -> Polynomial {
        Polynomial::var(VarId::q(i))
    }

    #[test]
    fn basic_invariants_small() {
        assert_eq!(basic_invariants(1), vec![x(1)]);
        let g2 = basic_invariants(2);
        assert_eq!(g2[0], x(1).add(&x(2)));
        assert_eq!(g2[1], x(1).mul(&x(2)).add(&q(1)));
        let g3 = basic_invariants(3);
        assert_eq!(
            g3[2],
            x(1).mul(&x(2)).mul(&x(3))
                .add(&q(1).mul(&x(3)))
                .add(&q(2).mul(&x(1)))
        );
    }

    #[test]
    fn kim_generators() {
        let ring = SRing::new(2);
        let gens = kim_ideal_generators(&ring);
        // e_1(a) = 0 in S
        assert_eq!(gens[0], x(1).add(&x(2)));
        assert_eq!(gens[1], x(1).mul(&x(2)).add(&q(1)).sub(&ring.elementary(2)));
        // j = n at q = 0, x_i = a_i vanishes
        let ring3 = SRing::new(3);
        let g = kim_ideal_generators(&ring3).pop().unwrap();
        let g = g.substitute(VarId::q(1), &Polynomial::zero());
        let g = g.substitute(VarId::q(2), &Polynomial::zero());
        let g = g.substitute(VarId::x(1), &ring3.a(1));
        let g = g.substitute(VarId::x(2), &ring3.a(2));
        let g = g.substitute(VarId::x(3), &ring3.a(3));
        assert!(ring3.reduce(&g).is_zero());
    }

    #[test]
    fn divided_difference_values() {
        let ring = SRing::new(3);
        assert_eq!(
            divided_difference_a(&ring, 1, &ring.a(1)),
            Polynomial::one()
        );
        assert_eq!(
            divided_difference_a(&ring, 1, &ring.a(2)),
            Polynomial::int(-1)
        );
        assert_eq!(divided_difference_a(&ring, 1, &x(1)), Polynomial::zero());
        // d_i d_i = 0
        let p = ring.a(1).mul(&ring.a(1)).mul(&x(2)).add(&ring.a(2).mul(&q(1)));
        let once = divided_difference_a(&ring, 1, &p);
        assert!(divided_difference_a(&ring, 1, &once).is_zero());
        // braid relation d_1 d_2 d_1 = d_2 d_1 d_2
        let d1 = |f: &Polynomial| divided_difference_a(&ring, 1, f);
        let d2 = |f: &Polynomial| divided_difference_a(&ring, 2, f);
        let cube = ring.a(1).pow(3).mul(&ring.a(2));
        assert_eq!(d1(&d2(&d1(&cube))), d2(&d1(&d2(&cube))));
    }

    #[test]
    fn schubert_fixtures_n3() {
        let t = SchubertTable::new(3);
        let ring = t.ring();
        let a = |i: i32| ring.a(i);
        // identity normalizes to 1
        assert_eq!(t.quantum_schubert(&[1, 2, 3]).poly, Polynomial::one());
        // S_{s_1} = x_1 - a_1
        assert_eq!(t.quantum_schubert(&[2, 1, 3]).poly, ring.reduce(&x(1).sub(&a(1))));
        // S_{s_2} = x_1 + x_2 - a_1 - a_2
        assert_eq!(
            t.quantum_schubert(&[1, 3, 2]).poly,
            ring.reduce(&x(1).add(&x(2)).sub(&a(1)).sub(&a(2)))
        );
        // S_{s_1 s_2} = (x_1-a_1)(x_2-a_1) + q_1
        assert_eq!(
            t.quantum_schubert(&[2, 3, 1]).poly,
            ring.reduce(&x(1).sub(&a(1)).mul(&x(2).sub(&a(1))).add(&q(1)))
        );
        // S_{s_2 s_1} = (x_1-a_1)(x_1-a_2) - q_1
        assert_eq!(
            t.quantum_schubert(&[3, 1, 2]).poly,
            ring.reduce(&x(1).sub(&a(1)).mul(&x(1).sub(&a(2))).sub(&q(1)))
        );
        // S_{w_0} = (x_1-a_1)(x_1-a_2)(x_2-a_1) + q_1(x_1-a_2)
        assert_eq!(
            t.quantum_schubert(&[3, 2, 1]).poly,
            ring.reduce(
                &x(1)
                    .sub(&a(1))
                    .mul(&x(1).sub(&a(2)))
                    .mul(&x(2).sub(&a(1)))
                    .add(&q(1).mul(&x(1).sub(&a(2))))
            )
        );
    }

    #[test]
    fn path_independence_and_homogeneity() {
        for n in 2..=4usize {
            let t = SchubertTable::new(n);
            for w in finite_permutations(n) {
                let a = t.quantum_schubert(&w).poly;
                let b = t.quantum_schubert_alt_path(&w).poly;
                assert_eq!(a, b, "paths differ at w={w:?}, n={n}");
                let degs = a.graded_degrees();
                assert!(
                    degs.len() <= 1 && degs.iter().all(|&d| d == perm_length(&w)),
                    "inhomogeneous S_w at w={w:?}"
                );
            }
        }
    }

    #[test]
    fn classical_limit_matches() {
        for n in 2..=4usize {
            let t = SchubertTable::new(n);
            let ring = SRing::new(n);
            for w in finite_permutations(n) {
                let mut quantum = t.quantum_schubert(&w).poly;
                for i in 1..n {
                    quantum = quantum.substitute(VarId::q(i as i32), &Polynomial::zero());
                }
                assert_eq!(
                    quantum,
                    classical_double_schubert(&ring, &w),
                    "q=0 limit at w={w:?}, n={n}"
                );
            }
        }
    }

    #[test]
    fn mutated_recursion_changes_output() {
        // One descent step away from w_0, where a per-step sign flip shows.
        let t = SchubertTable::with_mutation(3, SchubertMutation::FlipRecursionSign);
        let good = SchubertTable::new(3);
        assert_ne!(
            t.quantum_schubert(&[3, 1, 2]).poly,
            good.quantum_schubert(&[3, 1, 2]).poly
        );
    }
}
