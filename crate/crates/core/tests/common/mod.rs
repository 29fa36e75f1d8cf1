#![allow(dead_code)]

use proptest::prelude::*;
use skewroot_core::rational::{int, Rational};
use skewroot_core::{Algebra, Element, SkewPolynomial};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn element_in(alg: Algebra) -> impl Strategy<Value = Element> {
    proptest::collection::vec(small_rational(), alg.dim())
        .prop_map(move |c| alg.element(c).unwrap())
}

pub fn nonzero_element_in(alg: Algebra) -> impl Strategy<Value = Element> {
    element_in(alg).prop_filter("nonzero", |e| !e.is_zero())
}

pub fn quaternion_algebra() -> impl Strategy<Value = Algebra> {
    // all of these are division algebras: -1 and -3 etc. keep the norm form anisotropic
    prop_oneof![
        Just(Algebra::hamilton()),
        Just(Algebra::quaternion(int(-1), int(-3)).unwrap()),
        Just(Algebra::quaternion(int(-2), int(-5)).unwrap()),
    ]
}

pub fn any_algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![quaternion_algebra(), Just(Algebra::cyclic_default())]
}

pub fn poly_in(alg: Algebra, max_deg: usize) -> impl Strategy<Value = SkewPolynomial> {
    proptest::collection::vec(element_in(alg.clone()), 0..=max_deg + 1)
        .prop_map(move |c| SkewPolynomial::new(&alg, c).unwrap())
}

/// Hamilton quaternion product written out by hand, independent of the
/// library's multiplication table.
pub type Quat = [Rational; 4];

pub fn oracle_mul(p: &Quat, q: &Quat) -> Quat {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

pub fn oracle_inv(p: &Quat) -> Quat {
    let n: Rational = p.iter().map(|c| c * c).sum();
    [&p[0] / &n, -&p[1] / &n, -&p[2] / &n, -&p[3] / &n]
}

pub fn q(w: i64, x: i64, y: i64, z: i64) -> Quat {
    [w, x, y, z].map(|v| Rational::from_integer(v.into()))
}
