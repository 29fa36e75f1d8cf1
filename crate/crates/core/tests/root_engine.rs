mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewroot_core::rational::{int, rat, Rational};
use skewroot_core::roots::{
    build_quadratic_counterexample, find_nonroot_witness, linear_factor_roots, quaternion_roots,
    quaternion_swap, swap_factors, vanishes_on_class, verify_exact_root_count,
};
use skewroot_core::{are_conjugate, minimal_polynomial, parse_element, Algebra, Element, SkewPolynomial};

fn distinct_classes(ds: &[Element]) -> bool {
    let polys: Vec<_> = ds.iter().map(minimal_polynomial).collect();
    (0..polys.len()).all(|a| (a + 1..polys.len()).all(|b| polys[a] != polys[b]))
}

fn random_factors(alg: &Algebra, rng: &mut ChaCha8Rng, n: usize, noncentral: bool) -> Vec<Element> {
    loop {
        let ds: Vec<Element> = (0..n).map(|_| alg.random_element(rng, 3)).collect();
        if noncentral && ds.iter().any(Element::is_central) {
            continue;
        }
        if distinct_classes(&ds) {
            return ds;
        }
    }
}

#[test]
fn worked_example_against_oracle() {
    let h = Algebra::hamilton();
    let i = parse_element("i", &h).unwrap();
    let one_j = parse_element("1 + j", &h).unwrap();
    let sol = linear_factor_roots(&[i.clone(), one_j.clone()]).unwrap();

    // (1+i+j)(1+j)(1+i+j)^-1 by the hand-written product
    let h_ = q(1, 1, 1, 0);
    let oracle = oracle_mul(&oracle_mul(&h_, &q(1, 0, 1, 0)), &oracle_inv(&h_));
    assert_eq!(sol.roots[1].zeta.coords(), &oracle[..]);
    assert_eq!(
        oracle,
        [int(1), rat(2, 3), rat(1, 3), rat(2, 3)]
    );
    assert_eq!(
        minimal_polynomial(&sol.roots[1].zeta).coeffs(),
        &[int(2), int(-2), int(1)]
    );
    let p = SkewPolynomial::from_linear_factors(&[i, one_j]).unwrap();
    for r in &sol.roots {
        assert!(p.right_eval(&r.zeta).unwrap().is_zero());
    }
}

#[test]
fn random_triples_both_formulas_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let h = Algebra::hamilton();
    for _ in 0..100 {
        let ds = random_factors(&h, &mut rng, 3, true);
        let a = linear_factor_roots(&ds).unwrap();
        let b = quaternion_roots(&ds).unwrap();
        assert_eq!(a.zetas(), b.zetas());
        for (r, d) in a.roots.iter().zip(&ds) {
            assert!(a.polynomial.right_eval(&r.zeta).unwrap().is_zero());
            assert!(are_conjugate(&r.zeta, d).unwrap());
        }
    }
}

#[test]
fn cyclic_products_have_verified_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alg = Algebra::cyclic_default();
    for n in 1..=3 {
        for _ in 0..5 {
            let ds = random_factors(&alg, &mut rng, n, false);
            let sol = linear_factor_roots(&ds).unwrap();
            assert_eq!(sol.roots.len(), n);
            for (r, d) in sol.roots.iter().zip(&ds) {
                assert!(sol.polynomial.right_eval(&r.zeta).unwrap().is_zero());
                assert_eq!(minimal_polynomial(&r.zeta), minimal_polynomial(d));
            }
        }
    }
}

#[test]
fn random_swaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let h = Algebra::hamilton();
    for _ in 0..100 {
        let ds = random_factors(&h, &mut rng, 2, false);
        let (d1, d2) = (&ds[0], &ds[1]);
        let (left, right) = swap_factors(d1, d2).unwrap();
        let before = &SkewPolynomial::linear(d2) * &SkewPolynomial::linear(d1);
        let after = &SkewPolynomial::linear(&left) * &SkewPolynomial::linear(&right);
        assert_eq!(before, after);
        if !d1.is_central() {
            assert_eq!(quaternion_swap(d1, d2).unwrap(), (left, right));
        }
    }
    let alg = Algebra::cyclic_default();
    for _ in 0..10 {
        let ds = random_factors(&alg, &mut rng, 2, false);
        swap_factors(&ds[0], &ds[1]).unwrap();
    }
}

#[test]
fn swap_with_hand_computed_h() {
    let h = Algebra::hamilton();
    let i = parse_element("i", &h).unwrap();
    let two_i = parse_element("2i", &h).unwrap();
    // h = 2i - conj(i) = 3i commutes with both factors
    let (l, r) = quaternion_swap(&i, &two_i).unwrap();
    assert_eq!((l, r), (i.clone(), two_i.clone()));
}

#[test]
fn theorem_example_in_cyclic_algebra() {
    let alg = Algebra::cyclic_default();
    let th = parse_element("th", &alg).unwrap();
    let u = parse_element("u", &alg).unwrap();
    let sigma_th = parse_element("th^2 - 2", &alg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let report = build_quadratic_counterexample(&th, &u, 10, 10, &mut rng).unwrap();
    assert_eq!(report.q, sigma_th);
    assert_eq!(report.b, sigma_th);
    let expected = &SkewPolynomial::linear(&sigma_th) * &SkewPolynomial::linear(&th);
    assert_eq!(report.polynomial, expected);
    assert!(report.polynomial.right_eval(&th).unwrap().is_zero());
    assert!(report.polynomial.right_eval(&sigma_th).unwrap().is_zero());
    assert_eq!(report.roots.len(), 10);
    assert_eq!(report.nonroots.len(), 10);
    assert_eq!(report.roots[0], sigma_th);
    assert_eq!(report.remainder, report.polynomial);
    assert!(!vanishes_on_class(&report.polynomial, &th).unwrap());
    assert_eq!(report.sampled_common_roots().unwrap(), vec![th.clone()]);

    // u^2 conjugates th to sigma^2(th), which is not a root
    let u2 = &u * &u;
    let s2 = th.conjugated_by(&u2).unwrap();
    let sigma2 = parse_element("(th^2 - 2)^2 - 2", &alg).unwrap();
    assert_eq!(s2, sigma2);
    let value = report.polynomial.right_eval(&s2).unwrap();
    assert_eq!(value, &(&s2 - &sigma_th) * &(&s2 - &th));
    assert!(!value.is_zero());
}

#[test]
fn random_counterexamples() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let alg = Algebra::cyclic_default();
    let mut built = 0;
    while built < 5 {
        let a = alg.random_element(&mut rng, 2);
        let d = alg.random_element(&mut rng, 2);
        if minimal_polynomial(&a).degree() != 3 || d.commutes_with(&a) {
            continue;
        }
        let report = build_quadratic_counterexample(&a, &d, 4, 4, &mut rng).unwrap();
        report.verify().unwrap();
        assert_eq!(report.sampled_common_roots().unwrap(), vec![a.clone()]);
        built += 1;
    }
}

#[test]
fn witness_search_finds_valid_witness() {
    let alg = Algebra::cyclic_default();
    let th = parse_element("th", &alg).unwrap();
    let sigma_th = parse_element("th^2 - 2", &alg).unwrap();
    let p = &SkewPolynomial::linear(&sigma_th) * &SkewPolynomial::linear(&th);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let t = find_nonroot_witness(&p, &th, &mut rng, 200).unwrap();
    assert!(!t.commutes_with(&th));
    assert!(!p.right_eval(&th.conjugated_by(&t).unwrap()).unwrap().is_zero());
}

#[test]
fn exact_root_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let h = Algebra::hamilton();
    let ds = vec![parse_element("i", &h).unwrap(), parse_element("1+j", &h).unwrap()];
    assert!(verify_exact_root_count(&ds, 50, &mut rng).unwrap());
    let c = Algebra::cyclic_default();
    let ds = vec![parse_element("th", &c).unwrap(), parse_element("th + 1", &c).unwrap()];
    assert!(verify_exact_root_count(&ds, 20, &mut rng).unwrap());
}

#[test]
fn vanishing_witnessed_by_sample() {
    let h = Algebra::hamilton();
    let i = parse_element("i", &h).unwrap();
    let p = SkewPolynomial::from_linear_factors(&[i.clone(), parse_element("j", &h).unwrap()]).unwrap();
    assert!(!vanishes_on_class(&p, &i).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let witness = (0..50).find_map(|_| {
        let t = h.random_nonzero(&mut rng, 3);
        let s = i.conjugated_by(&t).unwrap();
        (!p.right_eval(&s).unwrap().is_zero()).then_some(s)
    });
    assert!(witness.is_some());
    let _: Rational = int(0);
}
