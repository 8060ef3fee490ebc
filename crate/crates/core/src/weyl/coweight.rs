//! Coweights for `P^vee = Z^n / Z(1,...,1)`.

use std::fmt;

/// An integer vector modulo the all-ones vector, kept with minimum
/// coordinate 0 as the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(mut coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty());
        let min = *coords.iter().min().unwrap();
        for c in coords.iter_mut() {
            *c -= min;
        }
        Coweight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Coweight {
            coords: vec![0; n],
        }
    }

    /// Fundamental coweight `omega_i^vee = (1^i, 0^{n-i})`; `i = 0` and
    /// `i = n` give zero.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let i = i % n;
        let mut coords = vec![0; n];
        for c in coords.iter_mut().take(i) {
            *c = 1;
        }
        Coweight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        assert_eq!(self.rank(), other.rank());
        Coweight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Coweight {
        Coweight::new(self.coords.iter().map(|&c| -c).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight::new(self.coords.iter().map(|&c| k * c).collect())
    }

    /// Class in `P^vee/Q^vee = Z/n`.
    pub fn class_mod_n(&self) -> i64 {
        let n = self.rank() as i64;
        self.coords.iter().sum::<i64>().rem_euclid(n)
    }

    /// `<lambda, alpha_i>` for a finite simple root, `1 <= i <= n-1`.
    pub fn pair_alpha(&self, i: usize) -> i64 {
        self.coords[i - 1] - self.coords[i]
    }

    pub fn is_antidominant(&self) -> bool {
        self.coords.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|p| p[0] >= p[1])
    }

    /// Apply a permutation of positions: `result_i = coords[perm(i)]` where
    /// `perm` is given in one-line notation on `1..=n` and acts by
    /// `w · lambda = (lambda_{w^{-1}(1)}, ...)`.
    pub fn permute(&self, one_line: &[usize]) -> Coweight {
        let n = self.rank();
        assert_eq!(one_line.len(), n);
        let mut out = vec![0; n];
        for (i, &wi) in one_line.iter().enumerate() {
            // position w(i) receives coordinate i
            out[wi - 1] = self.coords[i];
        }
        Coweight::new(out)
    }

    /// The finite Weyl orbit: all distinct rearrangements, sorted.
    pub fn w_orbit(&self) -> Vec<Coweight> {
        let mut coords = self.coords.clone();
        coords.sort_unstable();
        let mut all = Vec::new();
        permutations(&mut coords, 0, &mut all);
        let set: std::collections::BTreeSet<Coweight> =
            all.into_iter().map(Coweight::new).collect();
        set.into_iter().collect()
    }
}

fn permutations(v: &mut Vec<i64>, k: usize, out: &mut Vec<Vec<i64>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    let mut used = std::collections::HashSet::new();
    for i in k..v.len() {
        if used.insert(v[i]) {
            v.swap(k, i);
            permutations(v, k + 1, out);
            v.swap(k, i);
        }
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_mod_ones() {
        assert_eq!(Coweight::new(vec![2, 1, 1]), Coweight::new(vec![1, 0, 0]));
        assert_eq!(Coweight::fundamental(3, 1), Coweight::new(vec![1, 0, 0]));
        assert_eq!(Coweight::fundamental(3, 3), Coweight::zero(3));
    }

    #[test]
    fn orbit_of_regular_coweight_has_full_size() {
        let lam = Coweight::new(vec![-2, -1, 0]);
        assert_eq!(lam.w_orbit().len(), 6);
        let sing = Coweight::new(vec![-1, -1, 0]);
        assert_eq!(sing.w_orbit().len(), 3);
    }

    #[test]
    fn antidominance_and_pairing() {
        let lam = Coweight::new(vec![-2, -1, 0]);
        assert!(lam.is_antidominant());
        assert_eq!(lam.pair_alpha(1), -1);
        assert_eq!(lam.class_mod_n(), 0);
        assert_eq!(Coweight::fundamental(3, 2).class_mod_n(), 2);
    }
}
