//! Minimal polynomials over the center, conjugacy tests, conjugators and
//! centralizers, all by exact linear algebra on coordinates.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{format_univariate, Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;

/// A monic polynomial with rational (hence central) coefficients,
/// low-to-high.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralPolynomial {
    coeffs: Vec<Rational>,
}

impl CentralPolynomial {
    /// Fails unless the leading coefficient is 1.
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if !coeffs.last().is_some_and(One::is_one) {
            return Err(Error::InvalidDescriptor(
                "central polynomial must be monic".into(),
            ));
        }
        Ok(CentralPolynomial { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Plain substitution; coefficients are central so sides do not matter.
    pub fn eval(&self, p: &Element) -> Element {
        let alg = p.algebra();
        self.coeffs
            .iter()
            .rev()
            .fold(alg.zero(), |acc, c| &(&acc * p) + &alg.scalar(c.clone()))
    }
}

impl fmt::Display for CentralPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_univariate(&self.coeffs, "x"))
    }
}

/// Least-degree monic rational polynomial annihilating `p`.
///
/// Finds the first power `p^m` lying in the span of `1, p, ..., p^(m-1)`.
pub fn minimal_polynomial(p: &Element) -> CentralPolynomial {
    let alg = p.algebra();
    let mut powers: Vec<Vec<Rational>> = vec![alg.one().coords().to_vec()];
    let mut current = alg.one();
    loop {
        current = &current * p;
        let m = linalg::from_columns(&powers, alg.dim());
        if let Some(sol) = linalg::solve(&m, current.coords()) {
            let mut coeffs: Vec<Rational> = sol.into_iter().map(|c| -c).collect();
            coeffs.push(Rational::one());
            return CentralPolynomial { coeffs };
        }
        powers.push(current.coords().to_vec());
        // dimension bound; unreachable since p satisfies its characteristic polynomial
        assert!(powers.len() <= alg.dim() + 1);
    }
}

/// Dickson's criterion: conjugate iff the minimal polynomials agree.
pub fn are_conjugate(p: &Element, q: &Element) -> Result<bool> {
    if p.algebra() != q.algebra() {
        return Err(Error::MixedAlgebras);
    }
    Ok(p == q || minimal_polynomial(p) == minimal_polynomial(q))
}

/// Matrix of `t -> t*p - q*t`.
fn twisted_commutator_matrix(p: &Element, q: &Element) -> linalg::Matrix {
    let alg = p.algebra();
    let cols: Vec<Vec<Rational>> = alg
        .basis()
        .iter()
        .map(|e| (&(e * p) - &(q * e)).coords().to_vec())
        .collect();
    linalg::from_columns(&cols, alg.dim())
}

/// A nonzero `t` with `t p t^-1 = q`. Returns 1 when `p == q`.
pub fn find_conjugator(p: &Element, q: &Element) -> Result<Element> {
    if p.algebra() != q.algebra() {
        return Err(Error::MixedAlgebras);
    }
    let alg = p.algebra();
    if p == q {
        return Ok(alg.one());
    }
    let ns = linalg::nullspace(&twisted_commutator_matrix(p, q), alg.dim());
    let v = ns.into_iter().next().ok_or(Error::NotConjugate)?;
    let t = alg.element(v)?;
    if p.conjugated_by(&t)? != *q {
        return Err(Error::InternalContradiction(
            "conjugator does not conjugate".into(),
        ));
    }
    Ok(t)
}

/// A Q-basis of `Z(p) = { t : tp = pt }`.
///
/// When the centralizer is the subfield `Q(p)` the basis returned is
/// `1, p, ..., p^(m-1)` with `m` the degree of the minimal polynomial;
/// otherwise (central `p`) it is the standard basis.
pub fn centralizer_basis(p: &Element) -> Vec<Element> {
    let alg = p.algebra();
    let ns = linalg::nullspace(&twisted_commutator_matrix(p, p), alg.dim());
    let m = minimal_polynomial(p).degree();
    if ns.len() == m {
        let mut out = Vec::with_capacity(m);
        let mut pw = alg.one();
        for _ in 0..m {
            out.push(pw.clone());
            pw = &pw * p;
        }
        return out;
    }
    ns.into_iter()
        .map(|v| alg.element(v).expect("nullspace vector has algebra dimension"))
        .collect()
}

/// Dimension of the Q-span of `elems`.
pub fn span_dimension(alg: &Algebra, elems: &[Element]) -> usize {
    let cols: Vec<Vec<Rational>> = elems.iter().map(|e| e.coords().to_vec()).collect();
    if cols.is_empty() {
        return 0;
    }
    linalg::rank(&linalg::from_columns(&cols, alg.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn hamilton(s: &str) -> Element {
        let h = Algebra::hamilton();
        h.generator(s).unwrap()
    }

    #[test]
    fn quaternion_minimal_polynomials() {
        let h = Algebra::hamilton();
        let i = hamilton("i");
        assert_eq!(minimal_polynomial(&i).coeffs(), &[int(1), int(0), int(1)]);
        let one_plus_j = &h.one() + &hamilton("j");
        assert_eq!(
            minimal_polynomial(&one_plus_j).coeffs(),
            &[int(2), int(-2), int(1)]
        );
        assert_eq!(minimal_polynomial(&h.scalar(int(5))).coeffs(), &[int(-5), int(1)]);
        assert_eq!(minimal_polynomial(&i).to_string(), "x^2 + 1");
    }

    #[test]
    fn cyclic_minimal_polynomial_of_theta() {
        let th = Algebra::cyclic_default().generator("th").unwrap();
        let mp = minimal_polynomial(&th);
        assert_eq!(mp.coeffs(), &[int(1), int(-3), int(0), int(1)]);
        assert_eq!(mp.to_string(), "x^3 - 3*x + 1");
        assert!(mp.eval(&th).is_zero());
    }

    #[test]
    fn conjugacy_examples() {
        let h = Algebra::hamilton();
        let (i, j) = (hamilton("i"), hamilton("j"));
        assert!(are_conjugate(&i, &j).unwrap());
        assert!(!are_conjugate(&i, &(&h.one() + &j)).unwrap());
        assert!(are_conjugate(&i, &i).unwrap());

        let t = find_conjugator(&i, &j).unwrap();
        assert_eq!(i.conjugated_by(&t).unwrap(), j);
        let i_plus_j = &i + &j;
        assert_eq!(i.conjugated_by(&i_plus_j).unwrap(), j);
        assert!(find_conjugator(&i, &i).unwrap().is_one());
        assert_eq!(
            find_conjugator(&i, &(&h.one() + &j)),
            Err(Error::NotConjugate)
        );
    }

    #[test]
    fn cyclic_conjugator_is_multiple_of_u() {
        let alg = Algebra::cyclic_default();
        let th = alg.generator("th").unwrap();
        let u = alg.generator("u").unwrap();
        let sigma_th = &(&th * &th) - &alg.scalar(int(2));
        let t = find_conjugator(&th, &sigma_th).unwrap();
        assert_eq!(th.conjugated_by(&t).unwrap(), sigma_th);
        assert_eq!(t, u);
    }

    #[test]
    fn centralizers() {
        let h = Algebra::hamilton();
        let i = hamilton("i");
        assert_eq!(centralizer_basis(&i), vec![h.one(), i.clone()]);
        assert_eq!(centralizer_basis(&h.one()), h.basis());

        let alg = Algebra::cyclic_default();
        let th = alg.generator("th").unwrap();
        assert_eq!(
            centralizer_basis(&th),
            vec![alg.one(), th.clone(), &th * &th]
        );
        assert_eq!(centralizer_basis(&alg.one()).len(), 9);
    }
}
