//! Affine permutations and the extended affine Weyl group.

use std::fmt;

use super::{Coweight, WeylError};

/// An element of `W_af = ~S_n`: a bijection `w` of `Z` with
/// `w(i+n) = w(i)+n` and window sum `sum(w(i)-i) = 0`, stored as the window
/// `[w(1),...,w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    n: usize,
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn identity(n: usize) -> Self {
        AffinePerm {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// The simple reflection `s_i`, `i` taken mod `n`: swaps `j <-> j+1`
    /// for all `j ≡ i (mod n)`.
    pub fn simple(n: usize, i: usize) -> Self {
        let i = i % n;
        let mut window: Vec<i64> = (1..=n as i64).collect();
        if i == 0 {
            window[0] = 0;
            window[n - 1] = n as i64 + 1;
        } else {
            window.swap(i - 1, i);
        }
        AffinePerm { n, window }
    }

    /// Embed a finite permutation (one-line notation on `1..=n`).
    pub fn from_finite(one_line: &[usize]) -> Self {
        AffinePerm {
            n: one_line.len(),
            window: one_line.iter().map(|&v| v as i64).collect(),
        }
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self, WeylError> {
        let n = window.len();
        if n == 0 {
            return Err(WeylError::BadWindow(window, n));
        }
        let sum: i64 = window.iter().enumerate().map(|(i, &w)| w - (i as i64 + 1)).sum();
        let mut residues: Vec<i64> = window.iter().map(|&w| w.rem_euclid(n as i64)).collect();
        residues.sort_unstable();
        residues.dedup();
        if sum != 0 || residues.len() != n {
            return Err(WeylError::BadWindow(window, n));
        }
        Ok(AffinePerm { n, window })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    /// Evaluate the underlying bijection at any integer.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n); // position in window
        let q = (i - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AffinePerm) -> AffinePerm {
        assert_eq!(self.n, other.n);
        AffinePerm {
            n: self.n,
            window: (1..=self.n as i64).map(|i| self.eval(other.eval(i))).collect(),
        }
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.n as i64;
        let mut window = vec![0i64; self.n];
        for i in 1..=n {
            let v = self.eval(i);
            // position j with eval(j) = i for j in the window of the inverse:
            // inverse(v) = i, shift v into 1..=n.
            let r = (v - 1).rem_euclid(n);
            let q = (v - 1).div_euclid(n);
            window[r as usize] = i - q * n;
        }
        AffinePerm { n: self.n, window }
    }

    /// Coxeter length: inversions of the window.
    pub fn length(&self) -> u32 {
        let n = self.n as i64;
        let mut len = 0i64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let d = self.window[j] - self.window[i];
                len += d.div_euclid(n).abs();
            }
        }
        len as u32
    }

    /// Right descents among residues `0..n-1`.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = i % self.n;
        if i == 0 {
            self.window[self.n - 1] - self.n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// Minimal length coset representative test: increasing window.
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    pub fn mul_simple_right(&self, i: usize) -> AffinePerm {
        self.compose(&AffinePerm::simple(self.n, i))
    }

    pub fn mul_simple_left(&self, i: usize) -> AffinePerm {
        AffinePerm::simple(self.n, i).compose(self)
    }

    /// Conjugation `u^{tau^k} = tau^k u tau^{-k}`: `i -> u(i-k)+k`.
    pub fn conjugate_by_tau(&self, k: i64) -> AffinePerm {
        AffinePerm {
            n: self.n,
            window: (1..=self.n as i64).map(|i| self.eval(i - k) + k).collect(),
        }
    }

    /// A reduced word `[i_1,...,i_l]` with `self = s_{i_1} ... s_{i_l}`,
    /// choosing the smallest right descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_by(|w| (0..w.n).find(|&i| w.has_right_descent(i)))
    }

    /// The reduced word obtained by always taking the largest right
    /// descent; generally different from `reduced_word`.
    pub fn reduced_word_last(&self) -> Vec<usize> {
        self.reduced_word_by(|w| (0..w.n).rev().find(|&i| w.has_right_descent(i)))
    }

    fn reduced_word_by(&self, pick: impl Fn(&AffinePerm) -> Option<usize>) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = pick(&w) {
            rev.push(i);
            w = w.mul_simple_right(i);
        }
        debug_assert!(w.is_identity());
        rev.reverse();
        rev
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.window
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// An element `tau^k · w` of the extended affine Weyl group
/// `W_e = Sigma ⋉ W_af`, with `k` normalized to `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    n: usize,
    tau: u32,
    body: AffinePerm,
}

impl ExtAffineElement {
    pub fn identity(n: usize) -> Self {
        Self::from_parts(0, AffinePerm::identity(n))
    }

    pub fn simple(n: usize, i: usize) -> Self {
        Self::from_parts(0, AffinePerm::simple(n, i))
    }

    pub fn tau_power(n: usize, k: i64) -> Self {
        Self::from_parts(k, AffinePerm::identity(n))
    }

    pub fn from_parts(tau: i64, body: AffinePerm) -> Self {
        let n = body.n();
        ExtAffineElement {
            n,
            tau: tau.rem_euclid(n as i64) as u32,
            body,
        }
    }

    pub fn from_affine(body: AffinePerm) -> Self {
        Self::from_parts(0, body)
    }

    /// `c_p = s_{p-1} ... s_1 s_0`.
    pub fn c_element(n: usize, p: usize) -> Self {
        let mut w = AffinePerm::identity(n);
        for i in 0..p {
            w = w.mul_simple_left(i);
        }
        Self::from_affine(w)
    }

    /// The translation `t_lambda`: `i -> i + n*lambda_i` on the window.
    pub fn translation(lambda: &Coweight) -> Self {
        let n = lambda.rank();
        let coords = lambda.coords();
        let m: i64 = coords.iter().sum();
        let window: Vec<i64> = (0..n)
            .map(|i| (i as i64 + 1) + n as i64 * coords[i] - m)
            .collect();
        let body = AffinePerm::from_window(window).expect("translations are affine perms");
        Self::from_parts(m, body)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau_part(&self) -> u32 {
        self.tau
    }

    pub fn body(&self) -> &AffinePerm {
        &self.body
    }

    /// Unique factorization `w = tau^k · u` with `u` in `W_af`.
    pub fn factor_sigma(&self) -> (u32, AffinePerm) {
        (self.tau, self.body.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.tau == 0 && self.body.is_identity()
    }

    pub fn length(&self) -> u32 {
        self.body.length()
    }

    pub fn mul(&self, other: &ExtAffineElement) -> ExtAffineElement {
        assert_eq!(self.n, other.n, "mismatched rank");
        let l = other.tau as i64;
        let body = self.body.conjugate_by_tau(-l).compose(&other.body);
        ExtAffineElement {
            n: self.n,
            tau: ((self.tau + other.tau) % self.n as u32),
            body,
        }
    }

    pub fn inverse(&self) -> ExtAffineElement {
        let k = self.tau as i64;
        ExtAffineElement {
            n: self.n,
            tau: (-k).rem_euclid(self.n as i64) as u32,
            body: self.body.inverse().conjugate_by_tau(k),
        }
    }

    /// `tau^k * self * tau^{-k}`.
    pub fn conjugate_by_tau(&self, k: i64) -> ExtAffineElement {
        ExtAffineElement {
            n: self.n,
            tau: self.tau,
            body: self.body.conjugate_by_tau(k),
        }
    }

    pub fn mul_simple_right(&self, i: usize) -> ExtAffineElement {
        ExtAffineElement {
            n: self.n,
            tau: self.tau,
            body: self.body.mul_simple_right(i),
        }
    }

    pub fn mul_simple_left(&self, i: usize) -> ExtAffineElement {
        // s_i tau^k u = tau^k s_{i-k} u
        let shifted = (i as i64 - self.tau as i64).rem_euclid(self.n as i64) as usize;
        ExtAffineElement {
            n: self.n,
            tau: self.tau,
            body: self.body.mul_simple_left(shifted),
        }
    }

    pub fn right_descents(&self) -> Vec<usize> {
        self.body.right_descents()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.body.inverse();
        (0..self.n)
            .filter(|&i| {
                let shifted = (i as i64 - self.tau as i64).rem_euclid(self.n as i64) as usize;
                inv.has_right_descent(shifted)
            })
            .collect()
    }

    /// Member of `W_e^0` (extended affine Grassmannian elements).
    pub fn is_grassmannian(&self) -> bool {
        self.body.is_grassmannian()
    }

    /// Reduced word: tau-power prefix followed by a reduced word of the
    /// body.
    pub fn reduced_word(&self) -> (u32, Vec<usize>) {
        (self.tau, self.body.reduced_word())
    }

    /// Residue image of `i in 1..=n` under the full bijection
    /// `pi^tau ∘ body`, reduced into `1..=n`; this drives the level-zero
    /// action on `S`.
    pub fn residue_image(&self, i: usize) -> usize {
        let v = self.body.eval(i as i64) + self.tau as i64;
        ((v - 1).rem_euclid(self.n as i64) + 1) as usize
    }

    /// The residue permutation `perm[i-1] = residue_image(i)`.
    pub fn residue_perm(&self) -> Vec<usize> {
        (1..=self.n).map(|i| self.residue_image(i)).collect()
    }
}

impl fmt::Display for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tau, word) = self.reduced_word();
        if tau == 0 && word.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if tau != 0 {
            if tau == 1 {
                parts.push("tau".to_string());
            } else {
                parts.push(format!("tau^{tau}"));
            }
        }
        for i in &word {
            parts.push(format!("s{i}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_reflections_and_length() {
        let s0 = AffinePerm::simple(2, 0);
        assert_eq!(s0.window(), &[0, 3]);
        assert_eq!(s0.length(), 1);
        let s1 = AffinePerm::simple(2, 1);
        // s_1 s_0 = t_{-alpha_1^vee}
        let w = s1.compose(&s0);
        assert_eq!(w.window(), &[-1, 4]);
        assert_eq!(w.length(), 2);
        let t = ExtAffineElement::translation(&Coweight::new(vec![-1, 1]));
        assert_eq!(t.tau_part(), 0);
        assert_eq!(t.body().window(), &[-1, 4]);
    }

    #[test]
    fn c_elements_have_length_p() {
        for n in 2..=4usize {
            for p in 0..n {
                let c = ExtAffineElement::c_element(n, p);
                assert_eq!(c.length(), p as u32, "c_{p} at n={n}");
                assert!(c.is_grassmannian());
            }
        }
        assert!(!ExtAffineElement::simple(3, 1).is_grassmannian());
    }

    #[test]
    fn tau_has_length_zero_and_group_law() {
        let tau = ExtAffineElement::tau_power(3, 1);
        assert_eq!(tau.length(), 0);
        let tau3 = tau.mul(&tau).mul(&tau);
        assert!(tau3.is_identity());
        // tau s_i tau^{-1} = s_{i+1}
        let s1 = ExtAffineElement::simple(3, 1);
        let conj = tau.mul(&s1).mul(&tau.inverse());
        assert_eq!(conj, ExtAffineElement::simple(3, 2));
    }

    #[test]
    fn translation_is_homomorphism() {
        let l1 = Coweight::new(vec![-2, 0, 1]);
        let l2 = Coweight::new(vec![3, -1, 0]);
        let t1 = ExtAffineElement::translation(&l1);
        let t2 = ExtAffineElement::translation(&l2);
        assert_eq!(t1.mul(&t2), ExtAffineElement::translation(&l1.add(&l2)));
        assert!(t1.mul(&t1.inverse()).is_identity());
    }

    #[test]
    fn t_minus_omega1_for_n3() {
        // t_{-omega_1^vee} = tau^{-1} s_2 s_0
        let t = ExtAffineElement::translation(&Coweight::new(vec![-1, 0, 0]));
        assert_eq!(t.tau_part(), 2); // tau^{-1} = tau^2
        let s2s0 = AffinePerm::simple(3, 2).compose(&AffinePerm::simple(3, 0));
        assert_eq!(t.body(), &s2s0);
    }

    #[test]
    fn inverse_and_descents() {
        let w = ExtAffineElement::from_parts(
            1,
            AffinePerm::simple(3, 2).compose(&AffinePerm::simple(3, 0)),
        );
        assert!(w.mul(&w.inverse()).is_identity());
        assert!(w.inverse().mul(&w).is_identity());
        // length additivity against reduced words
        let (tau, word) = w.reduced_word();
        let mut rebuilt = ExtAffineElement::tau_power(3, tau as i64);
        for i in word {
            rebuilt = rebuilt.mul(&ExtAffineElement::simple(3, i));
        }
        assert_eq!(rebuilt, w);
    }

    #[test]
    fn residue_action() {
        let n = 3;
        let tau = ExtAffineElement::tau_power(n, 1);
        assert_eq!(tau.residue_perm(), vec![2, 3, 1]);
        let s0 = ExtAffineElement::simple(n, 0);
        assert_eq!(s0.residue_perm(), vec![3, 2, 1]);
    }
}
