mod common;

use common::*;
use proptest::prelude::*;
use skewroot_core::{parse_element, parse_poly, Algebra, Element, SkewPolynomial};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(
        (a, b, c) in any_algebra().prop_flat_map(|alg| {
            (poly_in(alg.clone(), 2), poly_in(alg.clone(), 2), poly_in(alg, 2))
        })
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn degrees_add(
        (a, b) in any_algebra().prop_flat_map(|alg| (poly_in(alg.clone(), 3), poly_in(alg, 3)))
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }

    #[test]
    fn remainder_is_evaluation(
        (p, d) in any_algebra().prop_flat_map(|alg| (poly_in(alg.clone(), 4), element_in(alg)))
    ) {
        let (q, r) = p.right_divide(&SkewPolynomial::linear(&d)).unwrap();
        let value = p.right_eval(&d).unwrap();
        if value.is_zero() {
            prop_assert!(r.is_zero());
        } else {
            prop_assert_eq!(r, SkewPolynomial::constant(value));
        }
        prop_assert_eq!(&(&q * &SkewPolynomial::linear(&d)) + &SkewPolynomial::constant(p.right_eval(&d).unwrap()), p);
    }

    #[test]
    fn general_division(
        (p, b) in any_algebra().prop_flat_map(|alg| (poly_in(alg.clone(), 5), poly_in(alg, 3)))
    ) {
        prop_assume!(!b.is_zero());
        let (q, r) = p.right_divide(&b).unwrap();
        prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        prop_assert_eq!(&(&q * &b) + &r, p);
    }

    #[test]
    fn product_evaluation_rule(
        (l, r, d) in any_algebra().prop_flat_map(|alg| {
            (poly_in(alg.clone(), 3), poly_in(alg.clone(), 3), element_in(alg))
        })
    ) {
        prop_assume!(!r.right_eval(&d).unwrap().is_zero());
        let (lhs, rhs) = SkewPolynomial::product_eval_check(&l, &r, &d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugate_polynomial_reverses_products(
        (a, b) in quaternion_algebra().prop_flat_map(|alg| (poly_in(alg.clone(), 2), poly_in(alg, 2)))
    ) {
        let lhs = (&a * &b).conjugate().unwrap();
        let rhs = &b.conjugate().unwrap() * &a.conjugate().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugated_linear_pair(
        (p, q) in (element_in(Algebra::hamilton()), element_in(Algebra::hamilton()))
    ) {
        // conj((x - conj q)(x - conj p)) = (x - p)(x - q)
        let qc = q.conjugate().unwrap();
        let pc = p.conjugate().unwrap();
        let lhs = (&SkewPolynomial::linear(&qc) * &SkewPolynomial::linear(&pc)).conjugate().unwrap();
        prop_assert_eq!(lhs, &SkewPolynomial::linear(&p) * &SkewPolynomial::linear(&q));
    }

    #[test]
    fn element_print_parse_roundtrip(e in any_algebra().prop_flat_map(element_in)) {
        let text = e.to_string();
        prop_assert_eq!(parse_element(&text, e.algebra()).unwrap(), e);
    }

    #[test]
    fn poly_print_parse_roundtrip(p in any_algebra().prop_flat_map(|alg| poly_in(alg, 3))) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, p.algebra()).unwrap(), p);
    }
}

/// Right evaluation is not multiplicative: some sampled triple must show
/// `(LR)(d) != L(d) R(d)`.
#[test]
fn evaluation_is_not_multiplicative() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    let alg = Algebra::hamilton();
    let random_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
        let coeffs: Vec<Element> = (0..3).map(|_| alg.random_element(rng, 3)).collect();
        SkewPolynomial::new(&alg, coeffs).unwrap()
    };
    let found = (0..50).any(|_| {
        let l = random_poly(&mut rng);
        let r = random_poly(&mut rng);
        let d = alg.random_element(&mut rng, 3);
        (&l * &r).right_eval(&d).unwrap()
            != &l.right_eval(&d).unwrap() * &r.right_eval(&d).unwrap()
    });
    assert!(found);
}
