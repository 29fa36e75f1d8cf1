//! Polynomials over a division algebra with a central variable `x`.
//!
//! Coefficients sit to the left of powers of `x`; evaluation at `d` means
//! `sum a_k d^k` (right evaluation), so `d` is a root iff `x - d` divides
//! on the right.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{push_term, Algebra, Element};
use crate::conjugacy::CentralPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPolynomial {
    alg: Algebra,
    /// `coeffs[k]` multiplies `x^k`; no trailing zeros.
    coeffs: Vec<Element>,
}

impl SkewPolynomial {
    pub fn new(alg: &Algebra, coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.iter().any(|c| c.algebra() != alg) {
            return Err(Error::MixedAlgebras);
        }
        Ok(Self::from_raw(alg.clone(), coeffs))
    }

    fn from_raw(alg: Algebra, mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        SkewPolynomial { alg, coeffs }
    }

    pub fn zero(alg: &Algebra) -> Self {
        Self::from_raw(alg.clone(), Vec::new())
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg.one())
    }

    pub fn constant(c: Element) -> Self {
        Self::from_raw(c.algebra().clone(), vec![c])
    }

    pub fn x(alg: &Algebra) -> Self {
        Self::monomial(alg.one(), 1)
    }

    /// `c x^n`.
    pub fn monomial(c: Element, n: usize) -> Self {
        let alg = c.algebra().clone();
        let mut coeffs = vec![alg.zero(); n];
        coeffs.push(c);
        Self::from_raw(alg, coeffs)
    }

    /// `x - d`.
    pub fn linear(d: &Element) -> Self {
        let alg = d.algebra().clone();
        Self::from_raw(alg.clone(), vec![-d, alg.one()])
    }

    /// Lifts a polynomial over the center into `D[x]`.
    pub fn from_central(f: &CentralPolynomial, alg: &Algebra) -> Self {
        Self::from_raw(
            alg.clone(),
            f.coeffs().iter().map(|c| alg.scalar(c.clone())).collect(),
        )
    }

    /// `(x - ds[n-1]) ... (x - ds[1]) (x - ds[0])`: the first element of the
    /// list is the rightmost factor.
    pub fn from_linear_factors(ds: &[Element]) -> Result<Self> {
        let first = ds.first().ok_or(Error::EmptyFactorList)?;
        let alg = first.algebra();
        if ds.iter().any(|d| d.algebra() != alg) {
            return Err(Error::MixedAlgebras);
        }
        Ok(ds
            .iter()
            .fold(Self::one(alg), |acc, d| &Self::linear(d) * &acc))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Element> {
        self.coeffs.last()
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self - other)
    }

    /// Convolution product, left operand's coefficients on the left.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self * other)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(&self.alg), |acc, _| &acc * self)
    }

    /// `sum coeffs[k] * d^k`.
    pub fn right_eval(&self, d: &Element) -> Result<Element> {
        if d.algebra() != &self.alg {
            return Err(Error::MixedAlgebras);
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(self.alg.zero(), |acc, c| &(&acc * d) + c))
    }

    pub fn is_right_root(&self, d: &Element) -> Result<bool> {
        Ok(self.right_eval(d)?.is_zero())
    }

    /// `(Q, R)` with `self = Q * divisor + R` and `deg R < deg divisor`.
    pub fn right_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_algebra(divisor)?;
        let lead = divisor.leading().ok_or(Error::DivisionByZeroPolynomial)?;
        let lead_inv = lead.inverse()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.alg.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let shift = top - dd;
            let c = &rem[top] * &lead_inv;
            for (k, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = &rem[shift + k] - &(&c * b);
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
            while rem.last().is_some_and(Element::is_zero) {
                rem.pop();
            }
            quot[shift] = c;
        }
        Ok((
            Self::from_raw(self.alg.clone(), quot),
            Self::from_raw(self.alg.clone(), rem),
        ))
    }

    /// Evaluates `L*R` at `d` two ways: directly, and as
    /// `L(h d h^-1) h` with `h = R(d)`. Returns `(direct, via_conjugate)`.
    pub fn product_eval_check(
        left: &Self,
        right: &Self,
        d: &Element,
    ) -> Result<(Element, Element)> {
        left.same_algebra(right)?;
        let h = right.right_eval(d)?;
        if h.is_zero() {
            return Err(Error::RightFactorVanishes);
        }
        let lhs = (left * right).right_eval(d)?;
        let rhs = &left.right_eval(&d.conjugated_by(&h)?)? * &h;
        Ok((lhs, rhs))
    }

    /// Coefficientwise quaternion conjugation. Reverses products.
    pub fn conjugate(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(Element::conjugate)
            .collect::<Result<Vec<_>>>();
        match coeffs {
            Ok(c) => Ok(Self::from_raw(self.alg.clone(), c)),
            Err(_) => Err(Error::UnsupportedAlgebra(
                "conjugate polynomials need a quaternion algebra",
            )),
        }
    }
}

fn assert_same(a: &SkewPolynomial, b: &SkewPolynomial) {
    assert!(
        a.alg == b.alg,
        "arithmetic on polynomials over different algebras"
    );
}

impl Add for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn add(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        assert_same(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.alg.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = rhs.coeffs.get(k).unwrap_or(&zero);
                a + b
            })
            .collect();
        SkewPolynomial::from_raw(self.alg.clone(), coeffs)
    }
}

impl Neg for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn neg(self) -> SkewPolynomial {
        SkewPolynomial::from_raw(self.alg.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn sub(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SkewPolynomial {
    type Output = SkewPolynomial;
    fn mul(self, rhs: &SkewPolynomial) -> SkewPolynomial {
        assert_same(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return SkewPolynomial::zero(&self.alg);
        }
        let mut coeffs = vec![self.alg.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        SkewPolynomial::from_raw(self.alg.clone(), coeffs)
    }
}

/// Prints in the expression grammar, highest power first, e.g.
/// `x^2 - (i + j)*x - k`.
impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let nonzero: Vec<usize> = (0..c.coords().len())
                .filter(|&m| !c.coords()[m].is_zero())
                .collect();
            if let [m] = nonzero[..] {
                // single term: fold sign and basis name into the monomial
                let name = self.alg.basis_names()[m];
                let mono = match (name, power.is_empty()) {
                    ("1", _) => power.clone(),
                    (n, true) => n.to_string(),
                    (n, false) => format!("{n}*{power}"),
                };
                push_term(&mut out, &c.coords()[m], &mono);
            } else {
                let body = if power.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{power}")
                };
                if out.is_empty() {
                    out.push_str(&body);
                } else {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn h() -> Algebra {
        Algebra::hamilton()
    }

    fn g(name: &str) -> Element {
        h().generator(name).unwrap()
    }

    #[test]
    fn product_of_linear_factors() {
        let (i, j) = (g("i"), g("j"));
        let p = SkewPolynomial::from_linear_factors(&[i.clone(), j.clone()]).unwrap();
        let expected = SkewPolynomial::new(
            &h(),
            vec![&j * &i, -(&i + &j), h().one()],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p, &SkewPolynomial::linear(&j) * &SkewPolynomial::linear(&i));
        assert_eq!(p.to_string(), "x^2 + (-i - j)*x - k");
    }

    #[test]
    fn identities() {
        let a = SkewPolynomial::from_linear_factors(&[g("i"), g("k")]).unwrap();
        assert_eq!(&a * &SkewPolynomial::one(&h()), a);
        assert!((&a * &SkewPolynomial::zero(&h())).is_zero());
        assert_eq!(SkewPolynomial::zero(&h()).degree(), None);
    }

    #[test]
    fn evaluation_examples() {
        let (i, j) = (g("i"), g("j"));
        let p = SkewPolynomial::from_linear_factors(&[i.clone(), j.clone()]).unwrap();
        assert!(p.right_eval(&i).unwrap().is_zero());
        // root of the left factor is not a root of the product
        assert_eq!(p.right_eval(&j).unwrap(), g("k").scale(&int(-2)));
        assert_eq!(p.right_eval(&h().zero()).unwrap(), &j * &i);
    }

    #[test]
    fn division_examples() {
        let (i, j) = (g("i"), g("j"));
        let p = SkewPolynomial::from_linear_factors(&[i.clone(), j.clone()]).unwrap();
        let (q, r) = p.right_divide(&SkewPolynomial::linear(&i)).unwrap();
        assert_eq!(q, SkewPolynomial::linear(&j));
        assert!(r.is_zero());

        let x2_plus_1 = SkewPolynomial::new(&h(), vec![h().one(), h().zero(), h().one()]).unwrap();
        let (q, r) = x2_plus_1.right_divide(&SkewPolynomial::linear(&i)).unwrap();
        assert_eq!(q, SkewPolynomial::linear(&(-&i)));
        assert!(r.is_zero());

        assert_eq!(
            p.right_divide(&SkewPolynomial::zero(&h())),
            Err(Error::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn division_by_non_monic() {
        let (i, j) = (g("i"), g("j"));
        let b = SkewPolynomial::new(&h(), vec![j.clone(), &i + &j]).unwrap();
        let p = SkewPolynomial::from_linear_factors(&[i.clone(), j.clone(), g("k")]).unwrap();
        let (q, r) = p.right_divide(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(&(&q * &b) + &r, p);
    }

    #[test]
    fn repeated_factor_has_root() {
        let d = &h().one() + &g("j");
        let p = SkewPolynomial::from_linear_factors(&[d.clone(), d.clone(), d.clone()]).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert!(p.right_eval(&d).unwrap().is_zero());
    }

    #[test]
    fn product_eval_examples() {
        let (i, j) = (g("i"), g("j"));
        let left = SkewPolynomial::linear(&j);
        let right = SkewPolynomial::linear(&i);
        let (lhs, rhs) = SkewPolynomial::product_eval_check(&left, &right, &j).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, (&left * &right).right_eval(&j).unwrap());

        let (lhs, rhs) =
            SkewPolynomial::product_eval_check(&left, &SkewPolynomial::one(&h()), &i).unwrap();
        assert_eq!(lhs, left.right_eval(&i).unwrap());
        assert_eq!(lhs, rhs);

        assert_eq!(
            SkewPolynomial::product_eval_check(&left, &right, &i),
            Err(Error::RightFactorVanishes)
        );
    }

    #[test]
    fn conjugate_polynomial() {
        let i = g("i");
        let c = SkewPolynomial::linear(&i).conjugate().unwrap();
        assert_eq!(c, SkewPolynomial::linear(&(-&i)));
        let central = SkewPolynomial::new(&h(), vec![h().one(), h().zero(), h().one()]).unwrap();
        assert_eq!(central.conjugate().unwrap(), central);
        let cyc = SkewPolynomial::x(&Algebra::cyclic_default());
        assert!(matches!(cyc.conjugate(), Err(Error::UnsupportedAlgebra(_))));
    }

    #[test]
    fn mixed_algebras() {
        let p = SkewPolynomial::x(&h());
        let q = SkewPolynomial::x(&Algebra::cyclic_default());
        assert_eq!(p.try_mul(&q), Err(Error::MixedAlgebras));
        assert_eq!(
            p.right_eval(&Algebra::cyclic_default().one()),
            Err(Error::MixedAlgebras)
        );
    }
}
