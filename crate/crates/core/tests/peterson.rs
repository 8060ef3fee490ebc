//! Cross-validation of the constructive `j`-basis routes against the
//! linear-solve oracle, plus the centralizer certificates and the
//! factorization lemmas.

use toda_schubert::exactalg::{Polynomial, SRing};
use toda_schubert::nilhecke::NilHeckeElement;
use toda_schubert::peterson::{j_solve, JBasis, PetersonElement};
use toda_schubert::weyl::{
    partition_to_grassmannian, Coweight, ExtAffineElement, Partition,
};

fn ext(n: usize, tau: i64, word: &[usize]) -> ExtAffineElement {
    let mut w = ExtAffineElement::tau_power(n, tau);
    for &i in word {
        w = w.mul(&ExtAffineElement::simple(n, i));
    }
    w
}

fn basis(n: usize, tau: i64, word: &[usize]) -> NilHeckeElement {
    NilHeckeElement::basis(ext(n, tau, word))
}

fn term(n: usize, tau: i64, word: &[usize], c: Polynomial) -> NilHeckeElement {
    NilHeckeElement::term(ext(n, tau, word), c)
}

#[test]
fn j_translation_examples() {
    // lambda = 0
    let jb = JBasis::new(3);
    let j = jb.j_translation(&Coweight::zero(3)).unwrap();
    assert_eq!(j.elem(), &NilHeckeElement::one(3));

    // lambda = -alpha_1^vee at n=2: j_{10} = A_{10} + A_{01}
    let jb2 = JBasis::new(2);
    let j10 = jb2.j_translation(&Coweight::new(vec![-1, 1])).unwrap();
    let expect = basis(2, 0, &[1, 0]).add(&basis(2, 0, &[0, 1]));
    assert_eq!(j10.elem(), &expect);

    // regular antidominant coweight at n=3: six-element orbit
    let j6 = jb.j_translation(&Coweight::new(vec![-2, -1, 0])).unwrap();
    assert_eq!(j6.elem().num_terms(), 6);
}

#[test]
fn j_tau_fixtures() {
    // n=2: j_tau = A_tau - alpha A_{tau 1}
    let jb = JBasis::new(2);
    let ring = SRing::new(2);
    let j = jb.j_tau(1).unwrap();
    let expect = basis(2, 1, &[]).add(&term(2, 1, &[1], ring.alpha(1).neg()));
    assert_eq!(j.elem(), &expect);

    // n=3: j_tau = A_tau - a1 A_{tau 1} - (a1+a2) A_{tau 2}
    //              + a1(a1+a2) A_{tau 21}
    let jb3 = JBasis::new(3);
    let r3 = SRing::new(3);
    let a1 = r3.alpha(1);
    let a12 = r3.alpha(1).add(&r3.alpha(2));
    let j3 = jb3.j_tau(1).unwrap();
    let expect3 = basis(3, 1, &[])
        .add(&term(3, 1, &[1], a1.neg()))
        .add(&term(3, 1, &[2], a12.neg()))
        .add(&term(3, 1, &[2, 1], a1.mul(&a12)));
    assert_eq!(j3.elem(), &expect3);

    // k = 0 is the identity class
    assert_eq!(jb3.j_tau(0).unwrap().elem(), &NilHeckeElement::one(3));
    assert_eq!(jb3.j_tau(3).unwrap().elem(), &NilHeckeElement::one(3));
}

#[test]
fn j_tau_c_data_block_n3() {
    let n = 3;
    let jb = JBasis::new(n);
    let r = SRing::new(n);
    let a1 = r.alpha(1);
    let a2 = r.alpha(2);
    let a12 = a1.add(&a2);

    // j_{tau s_0} = A_{tau0} + A_{tau1} + A_{tau2} - a2 A_{tau 02}
    //               - (a1+a2) A_{tau 21}
    let j = jb.j_tau_c(1, 1).unwrap();
    let expect = basis(n, 1, &[0])
        .add(&basis(n, 1, &[1]))
        .add(&basis(n, 1, &[2]))
        .add(&term(n, 1, &[0, 2], a2.neg()))
        .add(&term(n, 1, &[2, 1], a12.neg()));
    assert_eq!(j.elem(), &expect);

    // j_{tau s_1 s_0} = A_{tau 10} + A_{tau 21} + A_{tau 02}
    let j2 = jb.j_tau_c(1, 2).unwrap();
    let expect2 = basis(n, 1, &[1, 0])
        .add(&basis(n, 1, &[2, 1]))
        .add(&basis(n, 1, &[0, 2]));
    assert_eq!(j2.elem(), &expect2);

    // base case p = 0
    assert_eq!(jb.j_tau_c(2, 0).unwrap(), jb.j_tau(2).unwrap());
}

#[test]
fn j_solve_agrees_with_constructions_n2() {
    let n = 2;
    let jb = JBasis::new(n);
    // All Grassmannian elements of length <= 4 in both sectors.
    for lam in Partition::bounded_up_to_size(1, 4) {
        let body = partition_to_grassmannian(&lam, n).unwrap();
        for k in 0..n as i64 {
            let w = ExtAffineElement::from_parts(k, body.clone());
            let constructed = jb.j_grassmannian(&w).unwrap();
            let solved = j_solve(&jb, &w, w.length() + n as u32).unwrap();
            assert_eq!(constructed, solved, "w = {w}");
        }
    }
}

#[test]
fn j_solve_agrees_with_tau_c_family_n3() {
    let n = 3;
    let jb = JBasis::new(n);
    for k in 1..=n {
        for p in 0..=(n - k) {
            let w = ext(n, k as i64, &[]).mul(&ExtAffineElement::c_element(n, p));
            let constructed = jb.j_tau_c(k, p).unwrap();
            let solved = j_solve(&jb, &w, w.length() + n as u32).unwrap();
            assert_eq!(constructed, solved, "k={k}, p={p}");
        }
    }
    // The unrotated special classes come from the twist route.
    for p in 0..n {
        let w = ExtAffineElement::c_element(n, p);
        let constructed = jb.j_c(p).unwrap();
        let solved = j_solve(&jb, &w, w.length() + n as u32).unwrap();
        assert_eq!(constructed, solved, "c_{p}");
    }
}

#[test]
fn j_partition_matches_solve() {
    let n = 3;
    let jb = JBasis::new(n);
    let lam = Partition::new(vec![1, 1]);
    let by_det = jb.j_partition(&lam, 2).unwrap();
    let w = ExtAffineElement::from_affine(partition_to_grassmannian(&lam, n).unwrap());
    let by_solve = j_solve(&jb, &w, w.length() + n as u32).unwrap();
    assert_eq!(by_det, by_solve);
    // Box violations are rejected.
    assert!(jb.j_partition(&Partition::new(vec![2, 1]), 1).is_err());
}

#[test]
fn twist_preserves_centrality_and_matches_relabeling() {
    let n = 2;
    let jb = JBasis::new(n);
    let j0 = jb.j_grassmannian(&ext(n, 0, &[0])).unwrap();
    let twisted = j0.twist(1);
    // tau j_0 tau^{-1} has leading term A_{s_1}; still central.
    assert!(twisted.elem().commutes_with_scalars());
    let s1 = ext(n, 0, &[1]);
    assert_eq!(twisted.elem().coefficient(&s1), Polynomial::one());
    // Twisting the group-like j_tau shifts its coefficient indices.
    let jt = jb.j_tau(1).unwrap();
    let ring = SRing::new(n);
    let jt_twisted = jt.twist(1);
    for (w, c) in jt.elem().terms() {
        assert_eq!(
            jt_twisted.elem().coefficient(&w.conjugate_by_tau(1)),
            ring.act_tau_pow(1, c)
        );
    }
}

#[test]
fn product_fixtures_n2() {
    // j_tau j_tau = 1 - alpha j_0 ; j_{tau 0} j_{tau 0} = j_{10}
    let n = 2;
    let jb = JBasis::new(n);
    let ring = SRing::new(n);
    let jtau = jb.j_tau(1).unwrap();
    let j0 = jb.j_grassmannian(&ext(n, 0, &[0])).unwrap();
    let lhs = jtau.mul(&jtau);
    let rhs = PetersonElement::one(n).sub(&j0.scale(&ring.alpha(1)));
    assert_eq!(lhs, rhs);

    let jt0 = jb.j_grassmannian(&ext(n, 1, &[0])).unwrap();
    let j10 = jb.j_translation(&Coweight::new(vec![-1, 1])).unwrap();
    assert_eq!(jt0.mul(&jt0), j10);

    // structure constants of j_tau * j_tau: {id: 1, s_0: -alpha}
    let tau = ext(n, 1, &[]);
    let mut sc = jb.structure_constants(&tau, &tau).unwrap();
    sc.sort_by_key(|(w, _)| w.length());
    assert_eq!(
        sc,
        vec![
            (ext(n, 0, &[]), Polynomial::one()),
            (ext(n, 0, &[0]), ring.alpha(1).neg()),
        ]
    );
}

#[test]
fn translation_factorization_lemma() {
    // j_{w t_mu} = j_{t_mu} j_w for antidominant mu and Grassmannian w.
    let n = 3;
    let jb = JBasis::new(n);
    for (lam, mu) in [
        (Partition::new(vec![1]), Coweight::new(vec![-1, 0, 0])),
        (Partition::new(vec![2]), Coweight::new(vec![-1, -1, 0])),
        (Partition::new(vec![1, 1]), Coweight::new(vec![-1, 0, 0])),
    ] {
        let w = ExtAffineElement::from_affine(partition_to_grassmannian(&lam, n).unwrap());
        let wt = w.mul(&ExtAffineElement::translation(&mu));
        assert!(wt.is_grassmannian());
        let lhs = jb.j_grassmannian(&wt).unwrap();
        let rhs = jb.j_translation(&mu).unwrap().mul(&jb.j_grassmannian(&w).unwrap());
        assert_eq!(lhs, rhs, "lambda={lam}, mu={mu}");
    }
    // Rectangle specialization: j_{t_lam} j_{t_mu} = j_{t_{lam+mu}}.
    let l1 = Coweight::new(vec![-1, 0, 0]);
    let l2 = Coweight::new(vec![-1, -1, 0]);
    let lhs = jb.j_translation(&l1).unwrap().mul(&jb.j_translation(&l2).unwrap());
    let rhs = jb.j_translation(&l1.add(&l2)).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn gr_projects_and_reconstructs() {
    let n = 2;
    let jb = JBasis::new(n);
    // gr(j_w) = j_w
    let j0 = jb.j_grassmannian(&ext(n, 0, &[0])).unwrap();
    assert_eq!(&jb.gr(j0.elem()).unwrap(), &j0);
    // gr(b a) = b gr(a) on a sample
    let a = NilHeckeElement::basis(ext(n, 0, &[1]));
    let b = j0.clone();
    let lhs = jb.gr(&b.elem().mul(&a)).unwrap();
    let rhs = b.mul(&jb.gr(&a).unwrap());
    assert_eq!(lhs, rhs);
}
