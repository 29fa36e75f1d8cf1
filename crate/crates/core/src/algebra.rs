//! The two concrete division rings: quaternion algebras `(a,b / Q)` and
//! degree-3 cyclic algebras `(L/Q, sigma, gamma)`.
//!
//! Elements are coordinate vectors in a fixed basis. For a quaternion
//! algebra the basis is `1, i, j, k` with `k = ij`. For the cyclic algebra
//! coordinate `3*r + s` holds the coefficient of `th^r * u^s`, i.e. the
//! row-major layout of `c[r][s]`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{format_rational, int, Rational};

type FieldElem = [Rational; 3];

fn field_zero() -> FieldElem {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

fn field_one() -> FieldElem {
    [Rational::one(), Rational::zero(), Rational::zero()]
}

/// Parameters of a cyclic algebra of degree 3 over Q.
///
/// `L = Q[t]/(g)` with `g` monic cubic, `sigma` the automorphism of `L`
/// determined by the image of `th = t mod g`, and `u^3 = gamma`,
/// `u * l = sigma(l) * u` for `l` in `L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCubic {
    /// `g = t^3 + modulus[2] t^2 + modulus[1] t + modulus[0]`.
    modulus: FieldElem,
    sigma: FieldElem,
    gamma: Rational,
    // sigma(th^r) for r = 0, 1, 2
    sigma_images: [FieldElem; 3],
}

impl CyclicCubic {
    /// `g` and `sigma` are low-to-high coefficient lists; `g` must be monic of
    /// degree 3, `sigma` may have any degree (it is reduced mod `g`).
    pub fn new(g: &[Rational], sigma: &[Rational], gamma: Rational) -> Result<Self> {
        let mut g = g.to_vec();
        while g.last().is_some_and(Zero::is_zero) {
            g.pop();
        }
        if g.len() != 4 || !g[3].is_one() {
            return Err(Error::InvalidDescriptor(
                "g must be a monic polynomial of degree 3".into(),
            ));
        }
        if gamma.is_zero() {
            return Err(Error::InvalidDescriptor("gamma must be nonzero".into()));
        }
        let modulus = [g[0].clone(), g[1].clone(), g[2].clone()];
        let mut alg = CyclicCubic {
            modulus,
            sigma: field_zero(),
            gamma,
            sigma_images: [field_one(), field_zero(), field_zero()],
        };
        let sigma = alg.reduce(sigma);
        let theta = [Rational::zero(), Rational::one(), Rational::zero()];
        if sigma == theta {
            return Err(Error::InvalidDescriptor("sigma must not be the identity".into()));
        }
        let sigma_sq = alg.field_mul(&sigma, &sigma);
        alg.sigma_images = [field_one(), sigma.clone(), sigma_sq.clone()];
        alg.sigma = sigma.clone();

        // g(sigma(th)) = 0 in L, so sigma extends to a field endomorphism.
        let sigma_cu = alg.field_mul(&sigma_sq, &sigma);
        let mut g_at_sigma = sigma_cu;
        for (r, img) in alg.sigma_images.clone().iter().enumerate() {
            for (acc, c) in g_at_sigma.iter_mut().zip(img) {
                *acc += &alg.modulus[r] * c;
            }
        }
        if g_at_sigma.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidDescriptor(
                "sigma(th) is not a root of g".into(),
            ));
        }
        let back = alg.apply_sigma_n(&theta, 3);
        if back != theta {
            return Err(Error::InvalidDescriptor("sigma does not have order 3".into()));
        }
        Ok(alg)
    }

    /// `L = Q[t]/(t^3 - 3t + 1)`, `sigma(th) = th^2 - 2`, `gamma = 2`.
    pub fn default_params() -> Self {
        CyclicCubic::new(
            &[int(1), int(-3), int(0), int(1)],
            &[int(-2), int(0), int(1)],
            int(2),
        )
        .expect("default cyclic parameters are valid")
    }

    /// Full low-to-high coefficients of `g`, including the leading 1.
    pub fn modulus(&self) -> Vec<Rational> {
        let mut v = self.modulus.to_vec();
        v.push(Rational::one());
        v
    }

    pub fn sigma(&self) -> &[Rational] {
        &self.sigma
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    fn reduce(&self, p: &[Rational]) -> FieldElem {
        let mut v: Vec<Rational> = p.to_vec();
        while v.len() > 3 {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = v.len() - 3;
            for r in 0..3 {
                let sub = &top * &self.modulus[r];
                v[shift + r] -= sub;
            }
        }
        v.resize(3, Rational::zero());
        [v[0].clone(), v[1].clone(), v[2].clone()]
    }

    fn field_mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        let mut prod = vec![Rational::zero(); 5];
        for (r, xr) in x.iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            for (s, ys) in y.iter().enumerate() {
                prod[r + s] += xr * ys;
            }
        }
        self.reduce(&prod)
    }

    fn apply_sigma(&self, x: &FieldElem) -> FieldElem {
        let mut out = field_zero();
        for (xr, img) in x.iter().zip(&self.sigma_images) {
            if xr.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(img) {
                *o += xr * c;
            }
        }
        out
    }

    fn apply_sigma_n(&self, x: &FieldElem, n: usize) -> FieldElem {
        (0..n).fold(x.clone(), |acc, _| self.apply_sigma(&acc))
    }

    fn column(c: &[Rational], s: usize) -> FieldElem {
        [c[s].clone(), c[3 + s].clone(), c[6 + s].clone()]
    }

    fn mul(&self, p: &[Rational], q: &[Rational]) -> Vec<Rational> {
        // (l_s u^s)(m_t u^t) = l_s sigma^s(m_t) u^(s+t), u^3 = gamma
        let mut acc = [field_zero(), field_zero(), field_zero()];
        for s in 0..3 {
            let ls = Self::column(p, s);
            if ls.iter().all(Zero::is_zero) {
                continue;
            }
            for t in 0..3 {
                let mt = Self::column(q, t);
                if mt.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut term = self.field_mul(&ls, &self.apply_sigma_n(&mt, s));
                if s + t >= 3 {
                    for c in term.iter_mut() {
                        *c *= &self.gamma;
                    }
                }
                for (a, c) in acc[(s + t) % 3].iter_mut().zip(term) {
                    *a += c;
                }
            }
        }
        let mut out = vec![Rational::zero(); 9];
        for (s, col) in acc.into_iter().enumerate() {
            for (r, c) in col.into_iter().enumerate() {
                out[3 * r + s] = c;
            }
        }
        out
    }
}

/// Which algebra an element lives in.
#[allow(clippy::large_enum_variant)] // always behind an Arc
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraDescriptor {
    /// `i^2 = a`, `j^2 = b`, `ij = -ji`.
    Quaternion { a: Rational, b: Rational },
    CyclicCubic(CyclicCubic),
}

/// Shared handle to an [`AlgebraDescriptor`]. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Algebra(Arc<AlgebraDescriptor>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Algebra {}

const QUATERNION_BASIS: [&str; 4] = ["1", "i", "j", "k"];
const CYCLIC_BASIS: [&str; 9] = [
    "1", "u", "u^2", "th", "th*u", "th*u^2", "th^2", "th^2*u", "th^2*u^2",
];

impl Algebra {
    pub fn quaternion(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidDescriptor(
                "quaternion parameters must be nonzero".into(),
            ));
        }
        Ok(Algebra(Arc::new(AlgebraDescriptor::Quaternion { a, b })))
    }

    /// Hamilton's quaternions over Q, `(-1,-1 / Q)`.
    pub fn hamilton() -> Self {
        Self::quaternion(int(-1), int(-1)).unwrap()
    }

    pub fn cyclic(params: CyclicCubic) -> Self {
        Algebra(Arc::new(AlgebraDescriptor::CyclicCubic(params)))
    }

    pub fn cyclic_default() -> Self {
        Self::cyclic(CyclicCubic::default_params())
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.0
    }

    pub fn is_quaternion(&self) -> bool {
        matches!(*self.0, AlgebraDescriptor::Quaternion { .. })
    }

    /// Dimension over Q.
    pub fn dim(&self) -> usize {
        match *self.0 {
            AlgebraDescriptor::Quaternion { .. } => 4,
            AlgebraDescriptor::CyclicCubic(_) => 9,
        }
    }

    /// Degree of the algebra, i.e. the square root of its dimension.
    pub fn degree(&self) -> usize {
        match *self.0 {
            AlgebraDescriptor::Quaternion { .. } => 2,
            AlgebraDescriptor::CyclicCubic(_) => 3,
        }
    }

    pub fn basis_names(&self) -> &'static [&'static str] {
        match *self.0 {
            AlgebraDescriptor::Quaternion { .. } => &QUATERNION_BASIS,
            AlgebraDescriptor::CyclicCubic(_) => &CYCLIC_BASIS,
        }
    }

    /// Generator names accepted by the expression parser.
    pub fn generator_names(&self) -> &'static [&'static str] {
        match *self.0 {
            AlgebraDescriptor::Quaternion { .. } => &["i", "j", "k"],
            AlgebraDescriptor::CyclicCubic(_) => &["th", "u"],
        }
    }

    pub fn generator(&self, name: &str) -> Option<Element> {
        let idx = match (&*self.0, name) {
            (AlgebraDescriptor::Quaternion { .. }, "i") => 1,
            (AlgebraDescriptor::Quaternion { .. }, "j") => 2,
            (AlgebraDescriptor::Quaternion { .. }, "k") => 3,
            (AlgebraDescriptor::CyclicCubic(_), "th") => 3,
            (AlgebraDescriptor::CyclicCubic(_), "u") => 1,
            _ => return None,
        };
        Some(self.basis_element(idx))
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::InvalidDescriptor(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                coords.len()
            )));
        }
        Ok(Element {
            alg: self.clone(),
            coords,
        })
    }

    pub fn zero(&self) -> Element {
        self.scalar(Rational::zero())
    }

    pub fn one(&self) -> Element {
        self.scalar(Rational::one())
    }

    pub fn scalar(&self, r: Rational) -> Element {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[0] = r;
        Element {
            alg: self.clone(),
            coords,
        }
    }

    pub fn basis_element(&self, idx: usize) -> Element {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[idx] = Rational::one();
        Element {
            alg: self.clone(),
            coords,
        }
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// An element whose coordinates have numerators drawn uniformly from
    /// `[-bound, bound]` and denominators from `[1, bound]`. May be zero.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, bound: u32) -> Element {
        let bound = i64::from(bound.max(1));
        let coords = (0..self.dim())
            .map(|_| {
                let n = rng.random_range(-bound..=bound);
                let d = rng.random_range(1..=bound);
                Rational::new(n.into(), d.into())
            })
            .collect();
        Element {
            alg: self.clone(),
            coords,
        }
    }

    /// Like [`random_element`](Self::random_element) but never zero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: u32) -> Element {
        loop {
            let e = self.random_element(rng, bound);
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn mul_coords(&self, p: &[Rational], q: &[Rational]) -> Vec<Rational> {
        match &*self.0 {
            AlgebraDescriptor::Quaternion { a, b } => {
                let (w1, x1, y1, z1) = (&p[0], &p[1], &p[2], &p[3]);
                let (w2, x2, y2, z2) = (&q[0], &q[1], &q[2], &q[3]);
                let ab = a * b;
                vec![
                    w1 * w2 + a * x1 * x2 + b * y1 * y2 - &ab * z1 * z2,
                    w1 * x2 + x1 * w2 - b * y1 * z2 + b * z1 * y2,
                    w1 * y2 + y1 * w2 + a * x1 * z2 - a * z1 * x2,
                    w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
                ]
            }
            AlgebraDescriptor::CyclicCubic(c) => c.mul(p, q),
        }
    }
}

/// Canonical spec string: `quat:A,B`, `cyclic:default`, or
/// `cyclic:g=...;sigma=...;gamma=...`.
impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            AlgebraDescriptor::Quaternion { a, b } => {
                write!(f, "quat:{},{}", format_rational(a), format_rational(b))
            }
            AlgebraDescriptor::CyclicCubic(c) => {
                if *c == CyclicCubic::default_params() {
                    write!(f, "cyclic:default")
                } else {
                    write!(
                        f,
                        "cyclic:g={};sigma={};gamma={}",
                        format_univariate(&c.modulus(), "t"),
                        format_univariate(c.sigma(), "t"),
                        format_rational(c.gamma())
                    )
                }
            }
        }
    }
}

/// Formats a rational polynomial, low-to-high coefficients, in `var`.
pub(crate) fn format_univariate(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let monomial = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        push_term(&mut out, c, &monomial);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Appends `c*monomial` to a sum being built, with the sign folded into the
/// joining operator. An empty monomial means the constant term.
pub(crate) fn push_term(out: &mut String, c: &Rational, monomial: &str) {
    let neg = crate::rational::is_negative(c);
    let abs = if neg { -c } else { c.clone() };
    let body = if monomial.is_empty() {
        format_rational(&abs)
    } else if abs.is_one() {
        monomial.to_string()
    } else {
        format!("{}*{}", format_rational(&abs), monomial)
    };
    match (out.is_empty(), neg) {
        (true, false) => out.push_str(&body),
        (true, true) => {
            out.push('-');
            out.push_str(&body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(&body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(&body);
        }
    }
}

/// An element of an [`Algebra`], stored as exact coordinates.
#[derive(Clone, Debug)]
pub struct Element {
    alg: Algebra,
    coords: Vec<Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.alg == other.alg
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// True iff the element lies in the center Q (a rational multiple of 1).
    pub fn is_central(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value of a central element.
    pub fn as_scalar(&self) -> Option<&Rational> {
        self.is_central().then(|| &self.coords[0])
    }

    pub(crate) fn same_algebra(&self, other: &Element) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.same_algebra(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, r: &Rational) -> Element {
        Element {
            alg: self.alg.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut result = self.alg.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Two-sided inverse. Quaternions use conjugate over reduced norm; the
    /// cyclic algebra solves the left regular representation.
    pub fn inverse(&self) -> Result<Element> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        match self.alg.descriptor() {
            AlgebraDescriptor::Quaternion { .. } => {
                let n = self.reduced_norm()?;
                if n.is_zero() {
                    return Err(Error::ZeroDivisorDetected);
                }
                Ok(self.quaternion_conjugate().scale(&n.recip()))
            }
            AlgebraDescriptor::CyclicCubic(_) => {
                let m = self.left_regular_matrix();
                let mut e0 = vec![Rational::zero(); self.alg.dim()];
                e0[0] = Rational::one();
                // a one-sided inverse in a finite-dimensional algebra is two-sided
                let x = linalg::solve(&m, &e0).ok_or(Error::ZeroDivisorDetected)?;
                self.alg.element(x)
            }
        }
    }

    /// Matrix of `t -> self * t` in the coordinate basis.
    pub fn left_regular_matrix(&self) -> linalg::Matrix {
        let cols: Vec<_> = self
            .alg
            .basis()
            .iter()
            .map(|e| self.alg.mul_coords(&self.coords, &e.coords))
            .collect();
        linalg::from_columns(&cols, self.alg.dim())
    }

    /// `w - xi - yj - zk`. Quaternion algebras only.
    pub fn conjugate(&self) -> Result<Element> {
        if !self.alg.is_quaternion() {
            return Err(Error::UnsupportedAlgebra(
                "conjugation needs a quaternion algebra",
            ));
        }
        Ok(self.quaternion_conjugate())
    }

    fn quaternion_conjugate(&self) -> Element {
        let mut coords = self.coords.clone();
        for c in coords[1..].iter_mut() {
            *c = -&*c;
        }
        Element {
            alg: self.alg.clone(),
            coords,
        }
    }

    /// `p * conj(p)` for quaternions: `w^2 - a x^2 - b y^2 + ab z^2`.
    pub fn reduced_norm(&self) -> Result<Rational> {
        match self.alg.descriptor() {
            AlgebraDescriptor::Quaternion { a, b } => {
                let [w, x, y, z] = [&self.coords[0], &self.coords[1], &self.coords[2], &self.coords[3]];
                Ok(w * w - a * x * x - b * y * y + a * b * z * z)
            }
            AlgebraDescriptor::CyclicCubic(_) => Err(Error::UnsupportedAlgebra(
                "reduced norm is only exposed for quaternions",
            )),
        }
    }

    pub fn commutes_with(&self, other: &Element) -> bool {
        self * other == other * self
    }

    /// `t * self * t^-1`.
    pub fn conjugated_by(&self, t: &Element) -> Result<Element> {
        self.same_algebra(t)?;
        Ok(&(t * self) * &t.inverse()?)
    }
}

fn assert_same(a: &Element, b: &Element) {
    assert!(a.alg == b.alg, "arithmetic on elements of different algebras");
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element {
            alg: self.alg.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element {
            alg: self.alg.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element {
            alg: self.alg.clone(),
            coords: self.alg.mul_coords(&self.coords, &rhs.coords),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            alg: self.alg.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Prints in the expression grammar, e.g. `1 + 2/3*i + 1/3*j + 2/3*k`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, name) in self.coords.iter().zip(self.alg.basis_names()) {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, if *name == "1" { "" } else { name });
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
