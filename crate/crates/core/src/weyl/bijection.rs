//! The bijection between `(n-1)`-bounded partitions and affine
//! Grassmannian elements, realized through `n`-cores.
//!
//! `s_i` acts on an `n`-core by adding (or removing) every addable
//! (removable) box of residue `i`, where the residue of the box `(r, c)` is
//! `c - r mod n`. A reduced word of `w` in `W_af^0` applied to the empty
//! core builds the core of `w`; deleting all cells of hook length `>= n`
//! row-wise gives the bounded partition.

use super::{AffinePerm, Partition, WeylError};

fn residue(n: usize, r: usize, c: usize) -> usize {
    (c as i64 - r as i64).rem_euclid(n as i64) as usize
}

fn addable_cells(shape: &Partition, n: usize, i: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 1..=shape.len() + 1 {
        let c = shape.part(r - 1) as usize + 1;
        let ok_shape = r == 1 || shape.part(r - 2) as usize >= c;
        if ok_shape && residue(n, r, c) == i {
            out.push((r, c));
        }
    }
    out
}

fn removable_cells(shape: &Partition, n: usize, i: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 1..=shape.len() {
        let c = shape.part(r - 1) as usize;
        if c == 0 {
            continue;
        }
        let ok_shape = r == shape.len() || (shape.part(r) as usize) < c;
        if ok_shape && residue(n, r, c) == i {
            out.push((r, c));
        }
    }
    out
}

fn add_cells(shape: &Partition, cells: &[(usize, usize)]) -> Partition {
    let mut parts: Vec<u32> = shape.parts().to_vec();
    for &(r, _) in cells {
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
    }
    Partition::new(parts)
}

fn remove_cells(shape: &Partition, cells: &[(usize, usize)]) -> Partition {
    let mut parts: Vec<u32> = shape.parts().to_vec();
    for &(r, _) in cells {
        parts[r - 1] -= 1;
    }
    Partition::new(parts)
}

/// Strip the core to its bounded partition: keep, in each row, the cells of
/// hook length `< n`.
fn core_to_bounded(core: &Partition, n: usize) -> Partition {
    let parts = (1..=core.len())
        .map(|r| {
            (1..=core.part(r - 1) as usize)
                .filter(|&c| core.hook(r, c) < n as u32)
                .count() as u32
        })
        .collect();
    Partition::new(parts)
}

/// Rebuild the `n`-core of a bounded partition by sliding rows from the
/// bottom up: row `r` is indented until its leftmost kept cell has hook
/// length `< n`.
fn bounded_to_core(lambda: &Partition, n: usize) -> Partition {
    let rows = lambda.len();
    let mut core: Vec<u32> = vec![0; rows];
    for r in (1..=rows).rev() {
        let lr = lambda.part(r - 1) as i64;
        let below = if r < rows { core[r] as i64 } else { 0 };
        let mut s = (below - lr).max(0);
        loop {
            // hook of cell (r, s+1) in the candidate core row of length lr+s
            let c = s + 1;
            let leg = core[r..]
                .iter()
                .filter(|&&p| p as i64 >= c)
                .count() as i64;
            let hook = lr + leg;
            if hook <= n as i64 - 1 {
                break;
            }
            s += 1;
        }
        core[r - 1] = (lr + s) as u32;
    }
    let core = Partition::new(core);
    debug_assert_eq!(core_to_bounded(&core, n), *lambda);
    core
}

/// Peel the core down to the empty shape, recording one generator per
/// step; the resulting word (left to right) is a reduced word of the
/// Grassmannian element.
fn peel_core(core: &Partition, n: usize) -> Vec<usize> {
    let mut shape = core.clone();
    let mut word = Vec::new();
    while !shape.is_empty() {
        let mut progressed = false;
        for i in 0..n {
            let cells = removable_cells(&shape, n, i);
            if !cells.is_empty() && addable_cells(&shape, n, i).is_empty() {
                word.push(i);
                shape = remove_cells(&shape, &cells);
                progressed = true;
                break;
            }
        }
        assert!(progressed, "core {shape} has no removable residue");
    }
    word
}

/// The bijection `lambda -> w_lambda^af` for `(n-1)`-bounded partitions.
pub fn partition_to_grassmannian(lambda: &Partition, n: usize) -> Result<AffinePerm, WeylError> {
    if !lambda.is_bounded(n) {
        return Err(WeylError::Unbounded(lambda.to_string(), n));
    }
    let core = bounded_to_core(lambda, n);
    let word = peel_core(&core, n);
    let mut w = AffinePerm::identity(n);
    for &i in &word {
        w = w.mul_simple_right(i);
    }
    debug_assert_eq!(w.length() as u64, lambda.size() as u64);
    debug_assert!(w.is_grassmannian());
    Ok(w)
}

/// The inverse bijection `w -> lambda(w)` for `w` in `W_af^0`.
pub fn grassmannian_to_partition(w: &AffinePerm) -> Result<Partition, WeylError> {
    if !w.is_grassmannian() {
        return Err(WeylError::BadWindow(w.window().to_vec(), w.n()));
    }
    let n = w.n();
    let word = w.reduced_word();
    let mut shape = Partition::empty();
    for &i in word.iter().rev() {
        let cells = addable_cells(&shape, n, i);
        assert!(
            !cells.is_empty(),
            "reduced word of a Grassmannian element must add boxes"
        );
        shape = add_cells(&shape, &cells);
    }
    Ok(core_to_bounded(&shape, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{Coweight, ExtAffineElement};

    #[test]
    fn anchors_empty_and_rows() {
        for n in 2..=4usize {
            assert!(partition_to_grassmannian(&Partition::empty(), n)
                .unwrap()
                .is_identity());
            for r in 1..n {
                let w = partition_to_grassmannian(&Partition::new(vec![r as u32]), n).unwrap();
                let c_r = ExtAffineElement::c_element(n, r);
                assert_eq!(&w, c_r.body(), "row ({r}) at n={n} should be c_{r}");
            }
        }
    }

    #[test]
    fn anchor_rectangles_give_translations() {
        // tau^{n-i} w_{R_i}^af = t_{-omega_i^vee}
        for n in 2..=5usize {
            for i in 1..n {
                let w = partition_to_grassmannian(&Partition::r_k(n, i), n).unwrap();
                let lhs = ExtAffineElement::tau_power(n, (n - i) as i64)
                    .mul(&ExtAffineElement::from_affine(w));
                let rhs =
                    ExtAffineElement::translation(&Coweight::fundamental(n, i).neg());
                assert_eq!(lhs, rhs, "R_{i} at n={n}");
            }
        }
    }

    #[test]
    fn rprime_rectangle_relation() {
        // w_{R_i'}^af = s_{2i mod n} w_{R_i}^af
        for n in 2..=6usize {
            for i in 1..n {
                let w_r = partition_to_grassmannian(&Partition::r_k(n, i), n).unwrap();
                let w_rp =
                    partition_to_grassmannian(&Partition::r_k_minus(n, i, 1), n).unwrap();
                assert_eq!(w_rp, w_r.mul_simple_left(2 * i % n), "i={i}, n={n}");
            }
        }
    }

    #[test]
    fn roundtrip_bounded_partitions() {
        for n in 2..=4usize {
            for lam in Partition::bounded_up_to_size(n as u32 - 1, 8) {
                let w = partition_to_grassmannian(&lam, n).unwrap();
                assert_eq!(w.length(), lam.size(), "{lam} at n={n}");
                let back = grassmannian_to_partition(&w).unwrap();
                assert_eq!(back, lam, "roundtrip {lam} at n={n}");
            }
        }
    }

    #[test]
    fn unbounded_rejected() {
        assert!(partition_to_grassmannian(&Partition::new(vec![3]), 3).is_err());
    }
}
