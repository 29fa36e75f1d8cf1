//! Text grammar for algebras, elements and polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' unary) | atom)*        juxtaposition multiplies
//! unary   := ('-' | '+') unary | power
//! power   := atom ('^' INT)?
//! atom    := INT ('/' INT)? | IDENT | 'inv' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Quaternion generators are `i`, `j`, `k` (= `i*j`); the cyclic algebra
//! uses `th` and `u`. Polynomials use the central variable `x`, with
//! coefficients written to its left.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, CyclicCubic, Element};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::skew_poly::SkewPolynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(src[start..i].parse().unwrap()), start));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::syntax(start, format!("unexpected character '{c}'"))),
        };
        out.push((tok, start));
        i += c.len_utf8();
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

#[derive(Clone, Debug)]
enum Node {
    Num(Rational),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Inv(Box<Expr>),
}

#[derive(Clone, Debug)]
struct Expr {
    node: Node,
    pos: usize,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(Error::syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let node = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    Node::Add(Box::new(lhs), Box::new(self.term()?))
                }
                Tok::Minus => {
                    self.bump();
                    Node::Sub(Box::new(lhs), Box::new(self.term()?))
                }
                _ => return Ok(lhs),
            };
            lhs = Expr { node, pos };
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let rhs = match self.peek() {
                Tok::Star => {
                    self.bump();
                    self.unary()?
                }
                Tok::Ident(_) | Tok::LParen => self.power()?,
                Tok::Slash => {
                    return Err(Error::syntax(
                        pos,
                        "'/' only forms rational literals; use inv(...) to divide",
                    ))
                }
                _ => return Ok(lhs),
            };
            lhs = Expr {
                node: Node::Mul(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek() {
            Tok::Minus => {
                self.bump();
                let inner = self.unary()?;
                Ok(Expr {
                    node: Node::Neg(Box::new(inner)),
                    pos,
                })
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let (tok, epos) = self.bump();
        let Tok::Int(n) = tok else {
            return Err(Error::syntax(epos, "exponent must be a nonnegative integer"));
        };
        let n: u32 = n
            .try_into()
            .map_err(|_| Error::syntax(epos, "exponent too large"))?;
        Ok(Expr {
            node: Node::Pow(Box::new(base), n),
            pos,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, pos) = self.bump();
        let node = match tok {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let (den, dpos) = self.bump();
                    match den {
                        Tok::Int(d) if !d.is_zero() => Node::Num(Rational::new(n, d)),
                        Tok::Int(_) => return Err(Error::syntax(dpos, "zero denominator")),
                        _ => return Err(Error::syntax(dpos, "expected integer denominator")),
                    }
                } else {
                    Node::Num(Rational::from_integer(n))
                }
            }
            Tok::Ident(name) if name == "inv" => {
                self.expect(Tok::LParen, "'(' after inv")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Node::Inv(Box::new(inner))
            }
            Tok::Ident(name) => Node::Sym(name),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(inner);
            }
            Tok::End => return Err(Error::syntax(pos, "unexpected end of input")),
            other => return Err(Error::syntax(pos, format!("unexpected token {other:?}"))),
        };
        Ok(Expr { node, pos })
    }
}

fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(Error::syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Interprets parsed expressions in some ring.
trait Interp {
    type V: Clone;
    fn num(&self, r: Rational) -> Self::V;
    fn sym(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn neg(&self, a: Self::V) -> Self::V;
    fn mul(&self, a: Self::V, b: Self::V, pos: usize) -> Result<Self::V>;
    fn one(&self) -> Self::V;
    fn inv(&self, a: Self::V, pos: usize) -> Result<Self::V>;

    fn eval(&self, e: &Expr) -> Result<Self::V> {
        Ok(match &e.node {
            Node::Num(r) => self.num(r.clone()),
            Node::Sym(s) => self.sym(s, e.pos)?,
            Node::Neg(a) => self.neg(self.eval(a)?),
            Node::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?),
            Node::Sub(a, b) => self.add(self.eval(a)?, self.neg(self.eval(b)?)),
            Node::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?, e.pos)?,
            Node::Pow(a, n) => {
                let base = self.eval(a)?;
                let mut acc = self.one();
                for _ in 0..*n {
                    acc = self.mul(acc, base.clone(), e.pos)?;
                }
                acc
            }
            Node::Inv(a) => self.inv(self.eval(a)?, e.pos)?,
        })
    }
}

fn unknown_symbol(alg: &Algebra, name: &str, pos: usize) -> Error {
    const ALL: [&str; 5] = ["i", "j", "k", "th", "u"];
    if ALL.contains(&name) && alg.generator(name).is_none() {
        Error::MixedAlgebras
    } else {
        Error::syntax(pos, format!("unknown symbol '{name}'"))
    }
}

struct ElementInterp<'a>(&'a Algebra);

impl Interp for ElementInterp<'_> {
    type V = Element;
    fn num(&self, r: Rational) -> Element {
        self.0.scalar(r)
    }
    fn sym(&self, name: &str, pos: usize) -> Result<Element> {
        self.0
            .generator(name)
            .ok_or_else(|| unknown_symbol(self.0, name, pos))
    }
    fn add(&self, a: Element, b: Element) -> Element {
        &a + &b
    }
    fn neg(&self, a: Element) -> Element {
        -&a
    }
    fn mul(&self, a: Element, b: Element, _: usize) -> Result<Element> {
        Ok(&a * &b)
    }
    fn one(&self) -> Element {
        self.0.one()
    }
    fn inv(&self, a: Element, _: usize) -> Result<Element> {
        a.inverse()
    }
}

struct PolyInterp<'a>(&'a Algebra);

impl Interp for PolyInterp<'_> {
    type V = SkewPolynomial;
    fn num(&self, r: Rational) -> SkewPolynomial {
        SkewPolynomial::constant(self.0.scalar(r))
    }
    fn sym(&self, name: &str, pos: usize) -> Result<SkewPolynomial> {
        if name == "x" {
            return Ok(SkewPolynomial::x(self.0));
        }
        self.0
            .generator(name)
            .map(SkewPolynomial::constant)
            .ok_or_else(|| unknown_symbol(self.0, name, pos))
    }
    fn add(&self, a: SkewPolynomial, b: SkewPolynomial) -> SkewPolynomial {
        &a + &b
    }
    fn neg(&self, a: SkewPolynomial) -> SkewPolynomial {
        -&a
    }
    fn mul(&self, a: SkewPolynomial, b: SkewPolynomial, pos: usize) -> Result<SkewPolynomial> {
        // a noncentral constant to the right of an x-term is rejected
        if a.degree().unwrap_or(0) >= 1
            && b.degree() == Some(0)
            && !b.coeffs()[0].is_central()
        {
            return Err(Error::NoncommutativeAmbiguity { pos });
        }
        Ok(&a * &b)
    }
    fn one(&self) -> SkewPolynomial {
        SkewPolynomial::one(self.0)
    }
    fn inv(&self, a: SkewPolynomial, pos: usize) -> Result<SkewPolynomial> {
        match a.degree() {
            Some(0) => Ok(SkewPolynomial::constant(a.coeffs()[0].inverse()?)),
            None => Err(Error::ZeroInverse),
            Some(_) => Err(Error::syntax(pos, "inv(...) of a nonconstant polynomial")),
        }
    }
}

/// Univariate rational polynomials, used for cyclic algebra parameters.
struct RationalPolyInterp;

fn rp_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

impl Interp for RationalPolyInterp {
    type V = Vec<Rational>;
    fn num(&self, r: Rational) -> Vec<Rational> {
        rp_trim(vec![r])
    }
    fn sym(&self, name: &str, pos: usize) -> Result<Vec<Rational>> {
        match name {
            "t" | "th" | "x" => Ok(vec![Rational::zero(), Rational::one()]),
            _ => Err(Error::syntax(pos, format!("unknown symbol '{name}'"))),
        }
    }
    fn add(&self, a: Vec<Rational>, b: Vec<Rational>) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let z = Rational::zero();
        rp_trim(
            (0..n)
                .map(|k| a.get(k).unwrap_or(&z) + b.get(k).unwrap_or(&z))
                .collect(),
        )
    }
    fn neg(&self, a: Vec<Rational>) -> Vec<Rational> {
        a.into_iter().map(|c| -c).collect()
    }
    fn mul(&self, a: Vec<Rational>, b: Vec<Rational>, _: usize) -> Result<Vec<Rational>> {
        if a.is_empty() || b.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Ok(rp_trim(out))
    }
    fn one(&self) -> Vec<Rational> {
        vec![Rational::one()]
    }
    fn inv(&self, a: Vec<Rational>, pos: usize) -> Result<Vec<Rational>> {
        match a.len() {
            1 => Ok(vec![a[0].recip()]),
            0 => Err(Error::ZeroInverse),
            _ => Err(Error::syntax(pos, "inv(...) of a nonconstant polynomial")),
        }
    }
}

pub fn parse_element(src: &str, alg: &Algebra) -> Result<Element> {
    ElementInterp(alg).eval(&parse_expr(src)?)
}

pub fn parse_poly(src: &str, alg: &Algebra) -> Result<SkewPolynomial> {
    PolyInterp(alg).eval(&parse_expr(src)?)
}

/// Semicolon-separated element list, e.g. `"i; 1+j"`.
pub fn parse_element_list(src: &str, alg: &Algebra) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in src.split(';') {
        let e = parse_element(part, alg).map_err(|err| match err {
            Error::Syntax { pos, message } => Error::Syntax {
                pos: pos + offset,
                message,
            },
            other => other,
        })?;
        out.push(e);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// Parses `quat:A,B`, `cyclic:default`, or
/// `cyclic:g=<poly>;sigma=<poly>;gamma=<rational>`.
pub fn parse_algebra(spec: &str) -> Result<Algebra> {
    let spec = spec.trim();
    let bad = |m: &str| Error::InvalidDescriptor(format!("{m}: '{spec}'"));
    if let Some(rest) = spec.strip_prefix("quat:") {
        let (a, b) = rest.split_once(',').ok_or_else(|| bad("expected quat:A,B"))?;
        let a = parse_rational(a).ok_or_else(|| bad("bad rational A"))?;
        let b = parse_rational(b).ok_or_else(|| bad("bad rational B"))?;
        return Algebra::quaternion(a, b);
    }
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        if rest.trim() == "default" {
            return Ok(Algebra::cyclic_default());
        }
        let (mut g, mut sigma, mut gamma) = (None, None, None);
        for field in rest.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            match key.trim() {
                "g" => g = Some(RationalPolyInterp.eval(&parse_expr(value)?)?),
                "sigma" => sigma = Some(RationalPolyInterp.eval(&parse_expr(value)?)?),
                "gamma" => gamma = Some(parse_rational(value).ok_or_else(|| bad("bad gamma"))?),
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        let g = g.ok_or_else(|| bad("missing g"))?;
        let sigma = sigma.ok_or_else(|| bad("missing sigma"))?;
        let gamma = gamma.ok_or_else(|| bad("missing gamma"))?;
        return Ok(Algebra::cyclic(CyclicCubic::new(&g, &sigma, gamma)?));
    }
    Err(bad("expected quat:A,B or cyclic:..."))
}
