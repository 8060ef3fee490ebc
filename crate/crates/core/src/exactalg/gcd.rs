//! Multivariate polynomial gcd via primitive pseudo-remainder sequences.
//!
//! Good enough for the fraction sizes this pipeline produces; the hot paths
//! avoid general gcds by tracking structured denominators, so this is the
//! fallback that keeps `RationalFunction` canonical.

use num_traits::{One, Signed};

use super::{Monomial, Polynomial, Rat, VarId};

/// Primitive gcd with positive leading coefficient. `gcd(0, p)` is `p`
/// normalized; the gcd of two nonzero constants is `1`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return make_primitive(b.clone());
    }
    if b.is_zero() {
        return make_primitive(a.clone());
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = strip(a, &ma);
    let b1 = strip(b, &mb);
    let core = gcd_primitive(&make_primitive(a1), &make_primitive(b1));
    make_primitive(core.mul_monomial(&mg, &Rat::one()))
}

fn strip(p: &Polynomial, m: &Monomial) -> Polynomial {
    Polynomial::from_terms(
        p.terms()
            .map(|(mm, c)| (mm.try_div(m).expect("content divides"), c.clone())),
    )
}

fn make_primitive(p: Polynomial) -> Polynomial {
    if p.is_zero() {
        return p;
    }
    let c = p.content();
    let mut q = p.scale(&(Rat::one() / c));
    if q.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        q = q.neg();
    }
    q
}

fn gcd_primitive(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let vars_a = a.vars();
    let vars_b = b.vars();
    let x = match vars_a
        .intersection(&vars_b)
        .cloned()
        .min_by_key(|&v| a.degree_in(v).min(b.degree_in(v)))
    {
        Some(v) => v,
        None => return Polynomial::one(),
    };

    let ua = to_univariate(a, x);
    let ub = to_univariate(b, x);
    let cont_a = coeff_gcd(&ua);
    let cont_b = coeff_gcd(&ub);
    let cont = gcd_primitive(&cont_a, &cont_b);
    let mut p = divide_coeffs(&ua, &cont_a);
    let mut q = divide_coeffs(&ub, &cont_b);
    if deg(&p) < deg(&q) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if is_zero_vec(&q) {
            break;
        }
        if deg(&q) == 0 {
            // Primitive and free of x: the primitive parts are coprime.
            p = vec![Polynomial::one()];
            break;
        }
        let r = pseudo_rem(&p, &q);
        p = q;
        q = primitive_in_x(r);
    }
    let g = make_primitive(from_univariate(&p, x));
    make_primitive(cont.mul(&g))
}

fn to_univariate(p: &Polynomial, x: VarId) -> Vec<Polynomial> {
    let d = p.degree_in(x) as usize;
    (0..=d).map(|k| p.coefficient_of_power(x, k as u16)).collect()
}

fn from_univariate(coeffs: &[Polynomial], x: VarId) -> Polynomial {
    let xv = Polynomial::var(x);
    let mut out = Polynomial::zero();
    for (k, c) in coeffs.iter().enumerate() {
        out = out.add(&c.mul(&xv.pow(k as u32)));
    }
    out
}

fn deg(p: &[Polynomial]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn is_zero_vec(p: &[Polynomial]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn trim(p: &mut Vec<Polynomial>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn coeff_gcd(p: &[Polynomial]) -> Polynomial {
    let mut g = Polynomial::zero();
    for c in p {
        if !c.is_zero() {
            g = if g.is_zero() {
                make_primitive(c.clone())
            } else {
                poly_gcd(&g, c)
            };
            if g.is_constant() {
                return Polynomial::one();
            }
        }
    }
    if g.is_zero() {
        Polynomial::one()
    } else {
        g
    }
}

fn divide_coeffs(p: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = p
        .iter()
        .map(|c| {
            if c.is_zero() {
                Polynomial::zero()
            } else {
                c.divide_exact(d).expect("content divides coefficients")
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn primitive_in_x(p: Vec<Polynomial>) -> Vec<Polynomial> {
    if is_zero_vec(&p) {
        return vec![Polynomial::zero()];
    }
    let c = coeff_gcd(&p);
    divide_coeffs(&p, &c)
}

/// Pseudo-remainder of `a` by `b` in the main variable, both given as
/// coefficient vectors with `deg a >= deg b >= 1`.
fn pseudo_rem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = deg(b);
    let lb = &b[db];
    let mut r: Vec<Polynomial> = a.to_vec();
    trim(&mut r);
    while !is_zero_vec(&r) && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        // r <- lb*r - lr*x^shift*b ; the top coefficient cancels exactly.
        let mut next = vec![Polynomial::zero(); dr.max(1)];
        for (k, slot) in next.iter_mut().enumerate().take(dr) {
            let mut t = lb.mul(&r[k]);
            if k >= shift {
                t = t.sub(&lr.mul(&b[k - shift]));
            }
            *slot = t;
        }
        r = next;
        trim(&mut r);
    }
    r
}
