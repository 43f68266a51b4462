//! Text syntax for skew polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ['^' integer]
//! atom   := integer | 'a' | 'x' | 'z' | 'e' integer | '(' expr ')'
//! ```
//!
//! Integers are field elements by encoding, `a` is the primitive element of
//! the field, `e1`, `e2`, … are the primitive idempotents in component order.
//! Products follow the skew rule a·z = z·σ(a) and are evaluated left to right.

use std::sync::Arc;

use skewcyclic::ring::{Automorphism, RingContext, RingElement};
use skewcyclic::skew::{SkewContext, SkewPoly};
use skewcyclic::{Fe, Gf, Poly};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    A,
    X,
    Z,
    E(u64),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position, message: &str| ParseError { position, message: message.into() };
    let number = |i: &mut usize| -> Result<u64, ParseError> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        text[start..*i].parse().map_err(|_| err(start, "expected an integer"))
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => Tok::Num(number(&mut i)?),
            b'e' => {
                i += 1;
                Tok::E(number(&mut i)?)
            }
            _ => {
                i += 1;
                match c {
                    b'a' => Tok::A,
                    b'x' => Tok::X,
                    b'z' => Tok::Z,
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'(' => Tok::Open,
                    b')' => Tok::Close,
                    _ => return Err(err(start, &format!("unexpected character {:?}", c as char))),
                }
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Arc<SkewContext>,
    allow_z: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message: message.into() })
    }

    fn constant(&self, c: Fe) -> SkewPoly {
        SkewPoly::constant(self.ctx, self.ctx.ring().constant(c))
    }

    fn expr(&mut self) -> Result<SkewPoly, ParseError> {
        let negate = self.peek() == Some(Tok::Minus);
        if negate {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == Tok::Plus { acc.add(&t) } else { acc.sub(&t) }.expect("one context");
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SkewPoly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.power()?).expect("one context");
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<SkewPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Tok::Num(e)) = self.peek() else { return self.fail("expected an exponent") };
        if e > MAX_EXPONENT {
            return self.fail(format!("exponent above {MAX_EXPONENT}"));
        }
        self.pos += 1;
        Ok(pow(&base, e))
    }

    fn atom(&mut self) -> Result<SkewPoly, ParseError> {
        let ring = self.ctx.ring().clone();
        let f = ring.field();
        let Some(tok) = self.peek() else { return self.fail("unexpected end of input") };
        let value = match tok {
            Tok::Num(v) => match u32::try_from(v).ok().and_then(|v| f.from_enc(v)) {
                Some(c) => self.constant(c),
                None => return self.fail(format!("{v} is not an element of GF({})", f.q())),
            },
            Tok::A => self.constant(f.generator()),
            Tok::X => SkewPoly::constant(self.ctx, ring.x_pow(1)),
            Tok::Z if self.allow_z => SkewPoly::z(self.ctx),
            Tok::Z => return self.fail("z is not allowed here"),
            Tok::E(k) if k >= 1 && (k as usize) <= ring.r() => {
                SkewPoly::constant(self.ctx, ring.idempotent(k as usize - 1).clone())
            }
            Tok::E(k) => return self.fail(format!("no idempotent e{k}; the ring has {} components", ring.r())),
            Tok::Open => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::Close) {
                    return self.fail("expected ')'");
                }
                inner
            }
            _ => return self.fail("expected a term"),
        };
        self.pos += 1;
        Ok(value)
    }
}

fn pow(base: &SkewPoly, mut e: u64) -> SkewPoly {
    let mut acc = SkewPoly::one(base.ctx());
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).expect("one context");
        }
        b = b.mul(&b).expect("one context");
        e >>= 1;
    }
    acc
}

fn parse_in(text: &str, ctx: &Arc<SkewContext>, allow_z: bool) -> Result<SkewPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), ctx, allow_z };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("unexpected trailing input");
    }
    Ok(value)
}

/// Parses an element of A[z; σ].
pub fn parse_poly(text: &str, ctx: &Arc<SkewContext>) -> Result<SkewPoly, ParseError> {
    parse_in(text, ctx, true)
}

/// Parses an element of A (no `z`).
pub fn parse_ring_element(text: &str, ring: &Arc<RingContext>) -> Result<RingElement, ParseError> {
    let ctx = SkewContext::new(ring, Automorphism::identity(ring)).expect("identity is an automorphism");
    Ok(parse_in(text, &ctx, false)?.coeff(0))
}

/// Canonical text for a field element: encodings over prime fields, powers
/// of `a` otherwise.
pub fn print_constant(c: Fe, f: &Gf) -> String {
    match (c.enc(), f.log(c)) {
        (0 | 1, _) => c.enc().to_string(),
        (_, Some(k)) if f.m() > 1 => {
            if k == 1 {
                "a".into()
            } else {
                format!("a^{k}")
            }
        }
        (v, _) => v.to_string(),
    }
}

fn power_term(c: Fe, var: &str, i: usize, f: &Gf) -> String {
    let v = match i {
        0 => return print_constant(c, f),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    };
    if c == Fe::ONE {
        v
    } else {
        format!("{}*{v}", print_constant(c, f))
    }
}

fn print_univariate(coeffs: &[Fe], var: &str, f: &Gf) -> String {
    let terms: Vec<String> =
        coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| power_term(c, var, i, f)).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn print_ring_element(a: &RingElement, f: &Gf) -> String {
    print_univariate(a.coeffs(), "x", f)
}

/// A polynomial over F in x, not reduced modulo x^n - 1.
pub fn print_x_poly(p: &Poly, f: &Gf) -> String {
    print_univariate(p.coeffs(), "x", f)
}

/// An entry of a matrix over F[z].
pub fn print_fz(p: &Poly, f: &Gf) -> String {
    print_univariate(p.coeffs(), "z", f)
}

/// Canonical form: ascending powers of z, each coefficient in ascending powers of x.
pub fn print_poly(g: &SkewPoly) -> String {
    let f = g.ring().field();
    let groups: Vec<String> = g
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(nu, c)| {
            let inner = print_ring_element(c, f);
            match nu {
                0 => inner,
                1 => format!("z*({inner})"),
                _ => format!("z^{nu}*({inner})"),
            }
        })
        .collect();
    if groups.is_empty() {
        "0".into()
    } else {
        groups.join(" + ")
    }
}
