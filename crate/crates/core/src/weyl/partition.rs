//! Integer partitions with the box predicates the pipeline needs.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Rectangle with `rows` rows of `cols` columns.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// `R_k`: the `(n-k) x k` rectangle.
    pub fn r_k(n: usize, k: usize) -> Self {
        Self::rectangle(n - k, k as u32)
    }

    /// `R_k - i`: `R_k` with `i` cells removed from the last column.
    pub fn r_k_minus(n: usize, k: usize, i: usize) -> Self {
        let rows = n - k;
        assert!(i <= rows && k >= 1);
        let mut parts = vec![k as u32; rows - i];
        parts.extend(std::iter::repeat(k as u32 - 1).take(i));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c as u32).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// `lambda_1 < n`.
    pub fn is_bounded(&self, n: usize) -> bool {
        self.first() < n as u32
    }

    /// Fits in a `rows x cols` box.
    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// Main hook length `lambda_1 + l(lambda) - 1` (0 for the empty
    /// partition).
    pub fn main_hook(&self) -> u32 {
        if self.parts.is_empty() {
            0
        } else {
            self.first() + self.len() as u32 - 1
        }
    }

    /// Hook length of the cell `(r, c)`, 1-indexed.
    pub fn hook(&self, r: usize, c: usize) -> u32 {
        let arm = self.part(r - 1).saturating_sub(c as u32);
        let leg = self
            .parts
            .iter()
            .skip(r)
            .filter(|&&p| p >= c as u32)
            .count() as u32;
        arm + leg + 1
    }

    /// Remove one box at row `r` (1-indexed), if the result is a partition.
    pub fn remove_box(&self, r: usize) -> Option<Partition> {
        if r == 0 || r > self.len() {
            return None;
        }
        let mut parts = self.parts.clone();
        if r < self.len() && parts[r - 1] == parts[r] {
            return None;
        }
        parts[r - 1] -= 1;
        Some(Partition::new(parts))
    }

    /// All partitions fitting in a `rows x cols` box.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<u32>::new(), cols)];
        while let Some((parts, max)) = stack.pop() {
            out.push(Partition::new(parts.clone()));
            if parts.len() == rows {
                continue;
            }
            for p in 1..=max {
                let mut next = parts.clone();
                next.push(p);
                stack.push((next, p));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// All partitions of size at most `max_size` with parts at most
    /// `max_part`.
    pub fn bounded_up_to_size(max_part: u32, max_size: u32) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        fn rec(parts: &mut Vec<u32>, remaining: u32, max: u32, out: &mut Vec<Partition>) {
            for p in (1..=max.min(remaining)).rev() {
                parts.push(p);
                out.push(Partition::new(parts.clone()));
                rec(parts, remaining - p, p, out);
                parts.pop();
            }
        }
        let mut parts = Vec::new();
        rec(&mut parts, max_size, max_part, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_is_involutive() {
        let lam = Partition::new(vec![3, 1, 1]);
        assert_eq!(lam.transpose(), Partition::new(vec![3, 1, 1]).transpose());
        assert_eq!(lam.transpose().transpose(), lam);
        assert_eq!(lam.transpose(), Partition::new(vec![3, 1, 1, 0]).transpose());
        assert_eq!(
            Partition::new(vec![2, 1]).transpose(),
            Partition::new(vec![2, 1])
        );
    }

    #[test]
    fn rectangles() {
        assert_eq!(Partition::r_k(3, 1), Partition::new(vec![1, 1]));
        assert_eq!(Partition::r_k(3, 2), Partition::new(vec![2]));
        assert_eq!(Partition::r_k_minus(4, 2, 1), Partition::new(vec![2, 1]));
        assert_eq!(Partition::r_k(4, 0), Partition::empty());
    }

    #[test]
    fn hooks() {
        let lam = Partition::new(vec![2, 1]);
        assert_eq!(lam.hook(1, 1), 3);
        assert_eq!(lam.hook(1, 2), 1);
        assert_eq!(lam.hook(2, 1), 1);
        assert_eq!(lam.main_hook(), 3);
    }

    #[test]
    fn box_enumeration() {
        let all = Partition::in_box(2, 2);
        assert_eq!(all.len(), 6); // empty, 1, 2, 11, 21, 22
    }
}
