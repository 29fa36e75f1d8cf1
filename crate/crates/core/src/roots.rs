//! Explicit roots of products of linear factors, factor swapping, vanishing
//! on a conjugacy class, and the quadratic whose roots and non-roots both
//! fill out a single conjugacy class.
//!
//! Factor lists are always given as `d_1, ..., d_n` with `d_1` the
//! rightmost factor: `P(x) = (x - d_n) ... (x - d_1)`.
//!
//! Every element returned as a root has been checked by exact evaluation.

use std::collections::HashSet;

use rand::Rng;

use crate::algebra::{Algebra, Element};
use crate::conjugacy::{centralizer_basis, minimal_polynomial, CentralPolynomial};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::skew_poly::SkewPolynomial;

/// Default sampling budget for [`find_nonroot_witness`] inside
/// [`build_quadratic_counterexample`].
pub const DEFAULT_WITNESS_BUDGET: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// 1-based index of the factor whose class contains this root.
    pub index: usize,
    pub zeta: Element,
    pub class_polynomial: CentralPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSolution {
    /// `d_1, ..., d_n`, rightmost factor first.
    pub factors: Vec<Element>,
    pub polynomial: SkewPolynomial,
    pub roots: Vec<Root>,
}

impl RootSolution {
    pub fn zetas(&self) -> Vec<Element> {
        self.roots.iter().map(|r| r.zeta.clone()).collect()
    }
}

fn check_factor_list(ds: &[Element]) -> Result<(Algebra, Vec<CentralPolynomial>)> {
    let first = ds.first().ok_or(Error::EmptyFactorList)?;
    let alg = first.algebra().clone();
    if ds.iter().any(|d| d.algebra() != &alg) {
        return Err(Error::MixedAlgebras);
    }
    let polys: Vec<CentralPolynomial> = ds.iter().map(minimal_polynomial).collect();
    for a in 0..polys.len() {
        for b in a + 1..polys.len() {
            if polys[a] == polys[b] {
                return Err(Error::ClassesNotDistinct(a + 1, b + 1));
            }
        }
    }
    Ok((alg, polys))
}

/// `S` with `f = S (x - d)`, where `f` is the minimal polynomial of `d`.
/// Since `f` is central the same `S` also satisfies `f = (x - d) S`.
pub fn split_factor(d: &Element) -> Result<SkewPolynomial> {
    let alg = d.algebra();
    let f = SkewPolynomial::from_central(&minimal_polynomial(d), alg);
    let lin = SkewPolynomial::linear(d);
    let (s, r) = f.right_divide(&lin)?;
    if !r.is_zero() || &lin * &s != f {
        return Err(Error::InternalContradiction(format!(
            "x - ({d}) does not split its minimal polynomial on both sides"
        )));
    }
    Ok(s)
}

/// Conjugates `d` by `h`, then confirms the result is a root of `p`.
fn verified_root(p: &SkewPolynomial, d: &Element, h: &Element, k: usize) -> Result<Element> {
    if h.is_zero() {
        return Err(Error::InternalContradiction(format!(
            "conjugating factor for root {k} vanishes"
        )));
    }
    let zeta = d.conjugated_by(h)?;
    if !p.right_eval(&zeta)?.is_zero() {
        return Err(Error::InternalContradiction(format!(
            "zeta_{k} = {zeta} is not a root"
        )));
    }
    Ok(zeta)
}

/// All roots of `(x - d_n) ... (x - d_1)` for pairwise non-conjugate
/// factors: `zeta_k = P_k(d_k) d_k P_k(d_k)^-1` with
/// `P_k = S_1 ... S_(k-1)` built from the minimal-polynomial cofactors.
pub fn linear_factor_roots(ds: &[Element]) -> Result<RootSolution> {
    let (alg, polys) = check_factor_list(ds)?;
    let p = SkewPolynomial::from_linear_factors(ds)?;
    let mut prefix = SkewPolynomial::one(&alg);
    let mut roots = Vec::with_capacity(ds.len());
    for (k, (d, f)) in ds.iter().zip(polys).enumerate() {
        let h = prefix.right_eval(d)?;
        let zeta = verified_root(&p, d, &h, k + 1)?;
        roots.push(Root {
            index: k + 1,
            zeta,
            class_polynomial: f,
        });
        if k + 1 < ds.len() {
            prefix = &prefix * &split_factor(d)?;
        }
    }
    Ok(RootSolution {
        factors: ds.to_vec(),
        polynomial: p,
        roots,
    })
}

/// Quaternion form of [`linear_factor_roots`]: the conjugating element is
/// `conj(P_k)(q_k)` with `P_k = (x - q_(k-1)) ... (x - q_1)`.
pub fn quaternion_roots(qs: &[Element]) -> Result<RootSolution> {
    let first = qs.first().ok_or(Error::EmptyFactorList)?;
    if !first.algebra().is_quaternion() {
        return Err(Error::UnsupportedAlgebra(
            "the conjugate-polynomial formula needs a quaternion algebra",
        ));
    }
    if let Some(k) = qs.iter().position(Element::is_central) {
        return Err(Error::CentralFactor(k + 1));
    }
    let (_, polys) = check_factor_list(qs)?;
    let p = SkewPolynomial::from_linear_factors(qs)?;
    let mut roots = Vec::with_capacity(qs.len());
    for (k, (q, f)) in qs.iter().zip(polys).enumerate() {
        let h = if k == 0 {
            q.algebra().one()
        } else {
            SkewPolynomial::from_linear_factors(&qs[..k])?
                .conjugate()?
                .right_eval(q)?
        };
        let zeta = verified_root(&p, q, &h, k + 1)?;
        roots.push(Root {
            index: k + 1,
            zeta,
            class_polynomial: f,
        });
    }
    Ok(RootSolution {
        factors: qs.to_vec(),
        polynomial: p,
        roots,
    })
}

fn check_swap(d1: &Element, d2: &Element, left: &Element, right: &Element) -> Result<()> {
    let before = &SkewPolynomial::linear(d2) * &SkewPolynomial::linear(d1);
    let after = &SkewPolynomial::linear(left) * &SkewPolynomial::linear(right);
    if before != after {
        return Err(Error::InternalContradiction(
            "swapped product differs from the original".into(),
        ));
    }
    Ok(())
}

/// Rewrites `(x - d2)(x - d1)` as `(x - left)(x - right)` with `right`
/// conjugate to `d2` and `left` conjugate to `d1`.
///
/// `right = S(d2) d2 S(d2)^-1` where `f = S (x - d1)` is the minimal
/// polynomial of `d1`, and `left = (d1 - right) d1 (d1 - right)^-1`.
pub fn swap_factors(d1: &Element, d2: &Element) -> Result<(Element, Element)> {
    check_factor_list(&[d1.clone(), d2.clone()])?;
    let s = split_factor(d1)?;
    let right = d2.conjugated_by(&s.right_eval(d2)?)?;
    let left = d1.conjugated_by(&(d1 - &right))?;
    check_swap(d1, d2, &left, &right)?;
    Ok((left, right))
}

/// Quaternion shortcut for [`swap_factors`]: with `h = d2 - conj(d1)`,
/// `(x - d2)(x - d1) = (x - h d1 h^-1)(x - h d2 h^-1)`.
pub fn quaternion_swap(d1: &Element, d2: &Element) -> Result<(Element, Element)> {
    if !d1.algebra().is_quaternion() {
        return Err(Error::UnsupportedAlgebra(
            "the conjugate-based swap needs a quaternion algebra",
        ));
    }
    if d1.is_central() {
        return Err(Error::CentralFirstFactor);
    }
    check_factor_list(&[d1.clone(), d2.clone()])?;
    let h = d2 - &d1.conjugate()?;
    let left = d1.conjugated_by(&h)?;
    let right = d2.conjugated_by(&h)?;
    check_swap(d1, d2, &left, &right)?;
    Ok((left, right))
}

/// True iff `P` vanishes at every conjugate of `a`, i.e. the minimal
/// polynomial of `a` right-divides `P`.
pub fn vanishes_on_class(p: &SkewPolynomial, a: &Element) -> Result<bool> {
    let lambda = SkewPolynomial::from_central(&minimal_polynomial(a), a.algebra());
    let (_, r) = p.right_divide(&lambda)?;
    Ok(r.is_zero())
}

/// Samples `t` with `ta != at` and `P(t a t^-1) != 0`. Coordinate bounds
/// double every eight samples, starting at 1.
pub fn find_nonroot_witness<R: Rng + ?Sized>(
    p: &SkewPolynomial,
    a: &Element,
    rng: &mut R,
    budget: usize,
) -> Result<Element> {
    if vanishes_on_class(p, a)? {
        return Err(Error::VanishesOnClass);
    }
    let alg = a.algebra();
    for n in 0..budget {
        let bound = 1u32 << (n / 8).min(16);
        let t = alg.random_element(rng, bound);
        if t.is_zero() || t.commutes_with(a) {
            continue;
        }
        if !p.right_eval(&a.conjugated_by(&t)?)?.is_zero() {
            return Ok(t);
        }
    }
    Err(Error::WitnessSearchExhausted(budget))
}

/// Distinct elements of the centralizer of `a`: `0, 1, 2, ...` first, then
/// small integer combinations of the centralizer basis.
pub fn centralizer_schedule(a: &Element) -> impl Iterator<Item = Element> {
    let alg = a.algebra().clone();
    let basis = centralizer_basis(a);
    let integers = {
        let alg = alg.clone();
        (0i64..).map(move |m| alg.scalar(int(m)))
    };
    let combos = (1i64..).flat_map(move |m| {
        let basis = basis.clone();
        let alg = alg.clone();
        (1..basis.len()).map(move |b| {
            &alg.scalar(Rational::from_integer(m.into())) + &basis[b].scale(&int(m + b as i64))
        })
    });
    integers.take(1 << 20).chain(combos)
}

/// Collects `count` pairwise-distinct conjugates `(t + z) a (t + z)^-1`
/// over the centralizer schedule.
fn conjugate_family(a: &Element, t: &Element, count: usize) -> Result<Vec<Element>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    for z in centralizer_schedule(a) {
        let c = a.conjugated_by(&(t + &z))?;
        if seen.insert(c.clone()) {
            out.push(c);
            if out.len() == count {
                break;
            }
        }
    }
    Ok(out)
}

/// A quadratic with infinitely many roots and infinitely many non-roots in
/// the class of `a`, with finite certified samples of both.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub a: Element,
    /// Minimal polynomial of the class of `a`.
    pub lambda: CentralPolynomial,
    pub d: Element,
    /// `d a d^-1`.
    pub q: Element,
    /// `(q - a) q (q - a)^-1`.
    pub b: Element,
    /// `(x - b)(x - a)`.
    pub polynomial: SkewPolynomial,
    /// Non-root witness `t`; the non-roots are conjugates by `t + z`.
    pub witness: Element,
    pub roots: Vec<Element>,
    pub nonroots: Vec<Element>,
    /// Remainder of `P` on right division by `lambda`; nonzero.
    pub remainder: SkewPolynomial,
}

impl CounterexampleReport {
    /// Rechecks every invariant from scratch.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: String| Err(Error::InternalContradiction(m));
        if self.lambda.degree() <= 2 {
            return fail("class minimal polynomial has degree <= 2".into());
        }
        for r in &self.roots {
            if !self.polynomial.right_eval(r)?.is_zero() {
                return fail(format!("{r} is not a root"));
            }
            if minimal_polynomial(r) != self.lambda {
                return fail(format!("{r} is not conjugate to a"));
            }
        }
        for s in &self.nonroots {
            if self.polynomial.right_eval(s)?.is_zero() {
                return fail(format!("{s} is a root"));
            }
            if minimal_polynomial(s) != self.lambda {
                return fail(format!("{s} is not conjugate to a"));
            }
        }
        let mut all = HashSet::new();
        if !self
            .roots
            .iter()
            .chain(&self.nonroots)
            .all(|e| all.insert(e.clone()))
        {
            return fail("families are not pairwise distinct".into());
        }
        let lambda = SkewPolynomial::from_central(&self.lambda, self.a.algebra());
        let (_, rem) = self.polynomial.right_divide(&lambda)?;
        if rem != self.remainder || rem.is_zero() {
            return fail("lambda divides P".into());
        }
        Ok(())
    }

    /// The second quadratic `(x - b1)(x - a)` with
    /// `b1 = (s - a) s (s - a)^-1` for `s = t a t^-1`.
    pub fn companion_quadratic(&self) -> Result<SkewPolynomial> {
        let s = self.a.conjugated_by(&self.witness)?;
        let b1 = s.conjugated_by(&(&s - &self.a))?;
        Ok(&SkewPolynomial::linear(&b1) * &SkewPolynomial::linear(&self.a))
    }

    /// Elements among `a`, the roots and the non-roots that are roots of both
    /// `P` and the companion quadratic.
    pub fn sampled_common_roots(&self) -> Result<Vec<Element>> {
        let other = self.companion_quadratic()?;
        let mut out = Vec::new();
        for c in std::iter::once(&self.a).chain(&self.roots).chain(&self.nonroots) {
            if self.polynomial.right_eval(c)?.is_zero() && other.right_eval(c)?.is_zero() {
                out.push(c.clone());
            }
        }
        Ok(out)
    }
}

/// Builds `P = (x - b)(x - a)` with `q = d a d^-1`, `b = (q - a) q (q - a)^-1`
/// and certifies `num_roots` roots and `num_nonroots` non-roots in `[a]`.
///
/// Roots are `(d + z) a (d + z)^-1` and non-roots `(t + z) a (t + z)^-1`
/// for `z` running through the centralizer of `a`.
pub fn build_quadratic_counterexample<R: Rng + ?Sized>(
    a: &Element,
    d: &Element,
    num_roots: usize,
    num_nonroots: usize,
    rng: &mut R,
) -> Result<CounterexampleReport> {
    a.same_algebra(d)?;
    let lambda = minimal_polynomial(a);
    if lambda.degree() <= 2 {
        return Err(Error::MinimalPolynomialTooSmall(lambda.degree()));
    }
    if d.commutes_with(a) {
        return Err(Error::ElementsCommute);
    }
    let q = a.conjugated_by(d)?;
    let b = q.conjugated_by(&(&q - a))?;
    let polynomial = &SkewPolynomial::linear(&b) * &SkewPolynomial::linear(a);
    let witness = find_nonroot_witness(&polynomial, a, rng, DEFAULT_WITNESS_BUDGET)?;
    let roots = conjugate_family(a, d, num_roots)?;
    let nonroots = conjugate_family(a, &witness, num_nonroots)?;
    let lambda_lift = SkewPolynomial::from_central(&lambda, a.algebra());
    let (_, remainder) = polynomial.right_divide(&lambda_lift)?;
    let report = CounterexampleReport {
        a: a.clone(),
        lambda,
        d: d.clone(),
        q,
        b,
        polynomial,
        witness,
        roots,
        nonroots,
        remainder,
    };
    report.verify()?;
    Ok(report)
}

/// Randomized check that `(x - d_n) ... (x - d_1)` has exactly the roots
/// given by [`linear_factor_roots`]: each is a root, no sampled conjugate of
/// any `d_k` other than `zeta_k` is a root, and every root's minimal
/// polynomial is one of the factors'.
pub fn verify_exact_root_count<R: Rng + ?Sized>(
    ds: &[Element],
    samples_per_class: usize,
    rng: &mut R,
) -> Result<bool> {
    let (alg, polys) = check_factor_list(ds)?;
    let sol = linear_factor_roots(ds)?;
    let p = &sol.polynomial;
    for root in &sol.roots {
        if !p.right_eval(&root.zeta)?.is_zero() || !polys.contains(&minimal_polynomial(&root.zeta)) {
            return Ok(false);
        }
    }
    for (d, root) in ds.iter().zip(&sol.roots) {
        if d.is_central() {
            // singleton class
            continue;
        }
        let mut checked = 0;
        let mut attempts = 0;
        while checked < samples_per_class {
            attempts += 1;
            if attempts > 16 * samples_per_class + 64 {
                return Err(Error::InternalContradiction(
                    "could not sample enough conjugates".into(),
                ));
            }
            let t = alg.random_nonzero(rng, 3);
            let c = d.conjugated_by(&t)?;
            if c == root.zeta {
                continue;
            }
            checked += 1;
            if p.right_eval(&c)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
