//! Command-line front end for `skewroot`.

pub mod report;
pub mod suites;

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use skewroot_core::roots::{
    build_quadratic_counterexample, linear_factor_roots, quaternion_roots, swap_factors,
};
use skewroot_core::{
    are_conjugate, minimal_polynomial, parse_algebra, parse_element, parse_element_list,
    parse_poly, Algebra, Error, Result, SkewPolynomial,
};

pub use report::{Format, Report};
pub use suites::Suite;
use report::{central_json, element_json, poly_json};

#[derive(Parser, Debug, Clone)]
#[command(name = "skewroot", version, about = "Exact roots of polynomials over division algebras")]
pub struct Cli {
    /// Algebra: `quat:A,B`, `cyclic:default` or `cyclic:g=..;sigma=..;gamma=..`
    #[arg(long, global = true, default_value = "quat:-1,-1")]
    pub algebra: String,

    #[arg(long, global = true, env = "SKEWROOT_SEED", default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Right evaluation P(d) = sum a_k d^k.
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Product of two polynomials.
    Mul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Right division P = Q*B + R.
    Divide {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        by: String,
    },
    /// Roots of (x - d_n)...(x - d_1).
    Roots(RootsArgs),
    /// Rewrite (x - d2)(x - d1) as (x - d)(x - d3).
    Swap {
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
    },
    /// Quadratic with infinitely many roots and non-roots in the class of `a`.
    Counterexample {
        #[arg(long)]
        a: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 10)]
        roots: usize,
        #[arg(long, default_value_t = 10)]
        nonroots: usize,
    },
    /// Seeded randomized verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Bound on the integer coordinates of random elements.
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RootsArgs {
    /// Semicolon-separated d_1; d_2; ...; d_n. d_1 is the rightmost factor:
    /// P = (x - d_n)...(x - d_1).
    #[arg(long)]
    pub factors: String,
    #[arg(long, value_enum, default_value_t = Method::General)]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// zeta_k = P_k(d_k) d_k P_k(d_k)^-1.
    General,
    /// Conjugate-polynomial formula; quaternion algebras only.
    Quaternion,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Mul { .. } => "mul",
            Command::Divide { .. } => "divide",
            Command::Roots(_) => "roots",
            Command::Swap { .. } => "swap",
            Command::Counterexample { .. } => "counterexample",
            Command::Verify { .. } => "verify",
        }
    }

    fn inputs(&self) -> Value {
        match self {
            Command::Eval { poly, at } => json!({ "poly": poly, "at": at }),
            Command::Mul { left, right } => json!({ "left": left, "right": right }),
            Command::Divide { poly, by } => json!({ "poly": poly, "by": by }),
            Command::Roots(r) => json!({
                "factors": r.factors,
                "method": format!("{:?}", r.method).to_lowercase(),
            }),
            Command::Swap { d1, d2 } => json!({ "d1": d1, "d2": d2 }),
            Command::Counterexample { a, d, roots, nonroots } => {
                json!({ "a": a, "d": d, "roots": roots, "nonroots": nonroots })
            }
            Command::Verify { suite, trials, bound } => {
                json!({ "suite": suite.name(), "trials": trials, "bound": bound })
            }
        }
    }
}

struct Outcome {
    results: Value,
    verified: bool,
    lines: Vec<String>,
}

pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let outcome = parse_algebra(&cli.algebra).and_then(|alg| dispatch(&cli.command, &alg, cli.seed));
    let (results, verified, lines, error) = match outcome {
        Ok(o) => (o.results, o.verified, o.lines, None),
        Err(e) => (Value::Null, false, Vec::new(), Some(e)),
    };
    Report {
        command: cli.command.name().to_string(),
        algebra: cli.algebra.clone(),
        inputs: cli.command.inputs(),
        results,
        verified,
        seed: cli.seed,
        elapsed_ms: start.elapsed().as_millis(),
        error,
        lines,
    }
}

fn dispatch(cmd: &Command, alg: &Algebra, seed: u64) -> Result<Outcome> {
    match cmd {
        Command::Eval { poly, at } => {
            let p = parse_poly(poly, alg)?;
            let d = parse_element(at, alg)?;
            let v = p.right_eval(&d)?;
            // cross-check against the remainder of right division by x - d
            let (_, r) = p.right_divide(&SkewPolynomial::linear(&d))?;
            let verified = r == SkewPolynomial::constant(v.clone());
            Ok(Outcome {
                results: json!({ "value": element_json(&v), "is_root": v.is_zero() }),
                verified,
                lines: vec![format!("P({d}) = {v}")],
            })
        }
        Command::Mul { left, right } => {
            let l = parse_poly(left, alg)?;
            let r = parse_poly(right, alg)?;
            let prod = l.try_mul(&r)?;
            let (q, rem) = if r.is_zero() {
                (l.clone(), SkewPolynomial::zero(alg))
            } else {
                prod.right_divide(&r)?
            };
            let verified = r.is_zero() || (q == l && rem.is_zero());
            Ok(Outcome {
                results: json!({ "product": poly_json(&prod) }),
                verified,
                lines: vec![format!("{prod}")],
            })
        }
        Command::Divide { poly, by } => {
            let p = parse_poly(poly, alg)?;
            let b = parse_poly(by, alg)?;
            let (q, r) = p.right_divide(&b)?;
            let back = &(&q * &b) + &r;
            let small = r.degree().is_none_or(|dr| Some(dr) < b.degree());
            Ok(Outcome {
                results: json!({ "quotient": poly_json(&q), "remainder": poly_json(&r) }),
                verified: back == p && small,
                lines: vec![format!("quotient: {q}"), format!("remainder: {r}")],
            })
        }
        Command::Roots(args) => {
            let ds = parse_element_list(&args.factors, alg)?;
            let sol = match args.method {
                Method::General => linear_factor_roots(&ds)?,
                Method::Quaternion => quaternion_roots(&ds)?,
            };
            let mut all_ok = true;
            let mut roots = Vec::new();
            let mut lines = vec![format!("P = {}", sol.polynomial)];
            for (root, d) in sol.roots.iter().zip(&ds) {
                let ok = sol.polynomial.right_eval(&root.zeta)?.is_zero()
                    && are_conjugate(&root.zeta, d)?;
                all_ok &= ok;
                roots.push(json!({
                    "index": root.index,
                    "zeta": element_json(&root.zeta),
                    "class_polynomial": central_json(&root.class_polynomial),
                    "verified": ok,
                }));
                lines.push(format!(
                    "zeta_{} = {}  [{}]{}",
                    root.index,
                    root.zeta,
                    root.class_polynomial,
                    if ok { "" } else { "  UNVERIFIED" }
                ));
            }
            Ok(Outcome {
                results: json!({ "polynomial": poly_json(&sol.polynomial), "roots": roots }),
                verified: all_ok,
                lines,
            })
        }
        Command::Swap { d1, d2 } => {
            let d1 = parse_element(d1, alg)?;
            let d2 = parse_element(d2, alg)?;
            let (d, d3) = swap_factors(&d1, &d2)?;
            let before = &SkewPolynomial::linear(&d2) * &SkewPolynomial::linear(&d1);
            let after = &SkewPolynomial::linear(&d) * &SkewPolynomial::linear(&d3);
            Ok(Outcome {
                results: json!({
                    "d": element_json(&d),
                    "d3": element_json(&d3),
                    "product": poly_json(&before),
                }),
                verified: before == after,
                lines: vec![format!("(x - ({d2}))(x - ({d1})) = (x - ({d}))(x - ({d3}))")],
            })
        }
        Command::Counterexample { a, d, roots, nonroots } => {
            let a = parse_element(a, alg)?;
            let d = parse_element(d, alg)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rep = build_quadratic_counterexample(&a, &d, *roots, *nonroots, &mut rng)?;
            let verified = rep.verify().is_ok()
                && rep.roots.len() == *roots
                && rep.nonroots.len() == *nonroots
                && rep
                    .roots
                    .iter()
                    .chain(&rep.nonroots)
                    .all(|e| minimal_polynomial(e) == rep.lambda);
            let mut lines = vec![
                format!("P = {}", rep.polynomial),
                format!("class polynomial: {}", rep.lambda),
                format!("P mod class polynomial: {}", rep.remainder),
                format!("non-root witness t = {}", rep.witness),
            ];
            lines.extend(rep.roots.iter().map(|r| format!("root: {r}")));
            lines.extend(rep.nonroots.iter().map(|s| format!("non-root: {s}")));
            Ok(Outcome {
                results: json!({
                    "q": element_json(&rep.q),
                    "b": element_json(&rep.b),
                    "polynomial": poly_json(&rep.polynomial),
                    "class_polynomial": central_json(&rep.lambda),
                    "witness": element_json(&rep.witness),
                    "roots": rep.roots.iter().map(element_json).collect::<Vec<_>>(),
                    "nonroots": rep.nonroots.iter().map(element_json).collect::<Vec<_>>(),
                    "remainder_P_mod_lambda": poly_json(&rep.remainder),
                }),
                verified,
                lines,
            })
        }
        Command::Verify { suite, trials, bound } => {
            if *bound == 0 {
                return Err(Error::InvalidDescriptor("--bound must be positive".into()));
            }
            let results: Vec<_> = suite
                .expand()
                .into_iter()
                .map(|s| suites::run_suite(s, *trials, seed, *bound))
                .collect();
            let lines = results
                .iter()
                .map(|r| {
                    format!(
                        "{}: {} ({}/{} trials failed)",
                        r.suite.name(),
                        if r.passed() { "pass" } else { "FAIL" },
                        r.failures.len(),
                        r.trials
                    )
                })
                .collect();
            Ok(Outcome {
                verified: results.iter().all(|r| r.passed()),
                results: json!({ "suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>() }),
                lines,
            })
        }
    }
}
