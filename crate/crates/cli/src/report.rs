//! Machine-readable and plain-text reports.

use serde_json::{json, Value};
use skewroot_core::rational::format_rational;
use skewroot_core::{CentralPolynomial, Element, Error, SkewPolynomial};

pub fn element_json(e: &Element) -> Value {
    json!({
        "basis": e.algebra().basis_names(),
        "coords": e.coords().iter().map(format_rational).collect::<Vec<_>>(),
    })
}

pub fn poly_json(p: &SkewPolynomial) -> Value {
    json!({
        "degree": p.degree(),
        "coeffs": p.coeffs().iter().map(element_json).collect::<Vec<_>>(),
    })
}

pub fn central_json(f: &CentralPolynomial) -> Value {
    json!({
        "coeffs": f.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    pub inputs: Value,
    pub results: Value,
    pub verified: bool,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub error: Option<Error>,
    /// Human-readable lines for `--format text`.
    pub lines: Vec<String>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.error {
            Some(Error::InternalContradiction(_)) => 1,
            Some(_) => 2,
            None if self.verified => 0,
            None => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "algebra": self.algebra,
            "inputs": self.inputs,
            "results": self.results,
            "verified": self.verified,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        });
        if let Some(err) = &self.error {
            v["error"] = json!({ "kind": err.kind(), "message": err.to_string() });
        }
        v
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).unwrap(),
            Format::Text => {
                let mut out = format!("{} over {}\n", self.command, self.algebra);
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                if let Some(err) = &self.error {
                    out.push_str(&format!("error ({}): {err}\n", err.kind()));
                }
                out.push_str(&format!("verified: {}\n", self.verified));
                out
            }
        }
    }
}
