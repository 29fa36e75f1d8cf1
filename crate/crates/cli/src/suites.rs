//! Randomized verification suites behind `skewroot verify`.
//!
//! Each trial draws from its own ChaCha stream keyed by (seed, suite,
//! trial index), so results do not depend on scheduling. Even trials run in
//! `quat:-1,-1`, odd trials in `cyclic:default` (the counterexample suite
//! always uses the cyclic algebra).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use skewroot_core::roots::{
    build_quadratic_counterexample, linear_factor_roots, quaternion_roots, quaternion_swap,
    swap_factors, verify_exact_root_count,
};
use skewroot_core::{are_conjugate, minimal_polynomial, Algebra, Element, Result, SkewPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Prop163,
    Roots,
    Swap,
    Counterexample,
    Gm,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 5] = [
        Suite::Prop163,
        Suite::Roots,
        Suite::Swap,
        Suite::Counterexample,
        Suite::Gm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop163 => "prop163",
            Suite::Roots => "roots",
            Suite::Swap => "swap",
            Suite::Counterexample => "counterexample",
            Suite::Gm => "gm",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::INDIVIDUAL.to_vec(),
            s => vec![s],
        }
    }

    fn stream_id(self) -> u64 {
        Self::INDIVIDUAL.iter().position(|s| *s == self).unwrap_or(0) as u64
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: Suite,
    pub trials: usize,
    /// `(trial index, reason)` for every failed trial, in index order.
    pub failures: Vec<(usize, String)>,
    /// Trials that found `(LR)(d) != L(d) R(d)`; only for `prop163`.
    pub nonmultiplicative_witnesses: Option<usize>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.nonmultiplicative_witnesses != Some(0)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.suite.name(),
            "trials": self.trials,
            "failed": self.failures.len(),
            "passed": self.passed(),
            "failures": self.failures.iter()
                .map(|(t, why)| json!({ "trial": t, "detail": why }))
                .collect::<Vec<_>>(),
        });
        if let Some(w) = self.nonmultiplicative_witnesses {
            v["nonmultiplicative_witnesses"] = json!(w);
        }
        v
    }
}

pub fn trial_rng(seed: u64, suite: Suite, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite.stream_id() << 32) | trial as u64);
    rng
}

fn trial_algebra(trial: usize) -> Algebra {
    if trial.is_multiple_of(2) {
        Algebra::hamilton()
    } else {
        Algebra::cyclic_default()
    }
}

/// `n` random factors with pairwise distinct minimal polynomials.
pub fn random_distinct_factors<R: Rng + ?Sized>(
    alg: &Algebra,
    rng: &mut R,
    n: usize,
    bound: u32,
    noncentral: bool,
) -> Vec<Element> {
    loop {
        let ds: Vec<Element> = (0..n).map(|_| alg.random_element(rng, bound)).collect();
        if noncentral && ds.iter().any(Element::is_central) {
            continue;
        }
        let polys: Vec<_> = ds.iter().map(minimal_polynomial).collect();
        if (0..n).all(|a| (a + 1..n).all(|b| polys[a] != polys[b])) {
            return ds;
        }
    }
}

fn random_poly<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R, max_deg: usize, bound: u32) -> SkewPolynomial {
    let deg = rng.random_range(0..=max_deg);
    let mut coeffs: Vec<Element> = (0..deg).map(|_| alg.random_element(rng, bound)).collect();
    coeffs.push(alg.random_nonzero(rng, bound));
    SkewPolynomial::new(alg, coeffs).unwrap()
}

enum Outcome {
    Pass { witness: bool },
    Fail(String),
}

fn prop163_trial(rng: &mut ChaCha8Rng, alg: &Algebra, bound: u32) -> Result<Outcome> {
    let left = random_poly(alg, rng, 3, bound);
    let right = random_poly(alg, rng, 3, bound);
    let mut d = alg.random_element(rng, bound);
    while right.right_eval(&d)?.is_zero() {
        d = alg.random_element(rng, bound);
    }
    let (lhs, rhs) = SkewPolynomial::product_eval_check(&left, &right, &d)?;
    if lhs != rhs {
        return Ok(Outcome::Fail(format!("L = {left}, R = {right}, d = {d}: {lhs} != {rhs}")));
    }
    let naive = &left.right_eval(&d)? * &right.right_eval(&d)?;
    Ok(Outcome::Pass { witness: naive != lhs })
}

fn roots_trial(rng: &mut ChaCha8Rng, alg: &Algebra, bound: u32) -> Result<Outcome> {
    let n = rng.random_range(1..=alg.degree() + 1);
    let ds = random_distinct_factors(alg, rng, n, bound, false);
    let sol = linear_factor_roots(&ds)?;
    for (r, d) in sol.roots.iter().zip(&ds) {
        if !sol.polynomial.right_eval(&r.zeta)?.is_zero() || !are_conjugate(&r.zeta, d)? {
            return Ok(Outcome::Fail(format!("bad root {} for factor {d}", r.zeta)));
        }
    }
    if alg.is_quaternion() && !ds.iter().any(Element::is_central) {
        let other = quaternion_roots(&ds)?;
        if other.zetas() != sol.zetas() {
            return Ok(Outcome::Fail("conjugate-polynomial formula disagrees".into()));
        }
    }
    Ok(Outcome::Pass { witness: false })
}

fn swap_trial(rng: &mut ChaCha8Rng, alg: &Algebra, bound: u32) -> Result<Outcome> {
    let ds = random_distinct_factors(alg, rng, 2, bound, false);
    let (d1, d2) = (&ds[0], &ds[1]);
    let (left, right) = swap_factors(d1, d2)?;
    let before = &SkewPolynomial::linear(d2) * &SkewPolynomial::linear(d1);
    let after = &SkewPolynomial::linear(&left) * &SkewPolynomial::linear(&right);
    if before != after {
        return Ok(Outcome::Fail(format!("swap of {d1}, {d2} changes the product")));
    }
    if alg.is_quaternion() && !d1.is_central() && quaternion_swap(d1, d2)? != (left, right) {
        return Ok(Outcome::Fail(format!("quaternion swap disagrees for {d1}, {d2}")));
    }
    Ok(Outcome::Pass { witness: false })
}

fn counterexample_trial(rng: &mut ChaCha8Rng, bound: u32) -> Result<Outcome> {
    let alg = Algebra::cyclic_default();
    let bound = bound.min(2);
    let a = loop {
        let a = alg.random_element(rng, bound);
        if minimal_polynomial(&a).degree() == 3 {
            break a;
        }
    };
    let d = loop {
        let d = alg.random_element(rng, bound);
        if !d.commutes_with(&a) {
            break d;
        }
    };
    // the builder re-verifies every invariant before returning
    let report = build_quadratic_counterexample(&a, &d, 5, 5, rng)?;
    if report.sampled_common_roots()? != vec![a.clone()] {
        return Ok(Outcome::Fail(format!("common roots other than a = {a}")));
    }
    Ok(Outcome::Pass { witness: false })
}

fn gm_trial(rng: &mut ChaCha8Rng, alg: &Algebra, bound: u32) -> Result<Outcome> {
    let n = rng.random_range(1..=3);
    let ds = random_distinct_factors(alg, rng, n, bound, false);
    Ok(if verify_exact_root_count(&ds, 10, rng)? {
        Outcome::Pass { witness: false }
    } else {
        Outcome::Fail("extra root or foreign class found".into())
    })
}

pub fn run_suite(suite: Suite, trials: usize, seed: u64, bound: u32) -> SuiteResult {
    let outcomes: Vec<Outcome> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, suite, t);
            let alg = trial_algebra(t);
            let res = match suite {
                Suite::Prop163 => prop163_trial(&mut rng, &alg, bound),
                Suite::Roots => roots_trial(&mut rng, &alg, bound),
                Suite::Swap => swap_trial(&mut rng, &alg, bound),
                Suite::Counterexample => counterexample_trial(&mut rng, bound),
                Suite::Gm => gm_trial(&mut rng, &alg, bound),
                Suite::All => unreachable!("expanded by caller"),
            };
            res.unwrap_or_else(|e| Outcome::Fail(format!("error: {e}")))
        })
        .collect();
    let mut failures = Vec::new();
    let mut witnesses = 0;
    for (t, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Pass { witness } => witnesses += usize::from(witness),
            Outcome::Fail(why) => failures.push((t, why)),
        }
    }
    SuiteResult {
        suite,
        trials,
        failures,
        nonmultiplicative_witnesses: (suite == Suite::Prop163).then_some(witnesses),
    }
}
