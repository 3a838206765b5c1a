//! Canonical string codec for PolQ (and CycQ constants).
//!
//! Printing: terms in strictly descending degree; `t` denotes the cube root
//! of unity and `t^2` its square; fractional coefficients are parenthesized
//! when multiplied, e.g. `q^3*t`, `q^4 - q^3`, `(1/2)*q^2`, `q^3*t^2`.
//! Parsing accepts the same grammar, extended to arbitrary sums, products
//! and constant quotients of the atoms `q`, `t` and rational literals.

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{CycQ, PolQ};
use crate::{Error, Result};

fn ratio_plain(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ratio_coeff(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

fn q_pow(k: usize) -> String {
    match k {
        1 => "q".to_string(),
        _ => format!("q^{}", k),
    }
}

/// One printed term; returns (is_negative, body without a sign).
fn term_string(c: &CycQ, k: usize) -> (bool, String) {
    // rational coefficient
    if c.is_rational() {
        let r = c.rational_a();
        let neg = r.is_negative();
        let mag = r.abs();
        let body = if k == 0 {
            ratio_plain(&mag)
        } else if mag.is_one() {
            q_pow(k)
        } else {
            format!("{}*{}", ratio_coeff(&mag), q_pow(k))
        };
        return (neg, body);
    }
    // pure multiples of t or t^2
    let t_part = if let Some(r) = c.theta_sq_multiple() {
        Some((r, "t^2"))
    } else if c.rational_a() == &BigRational::from_integer(BigInt::from(0)) {
        Some((c.rational_b().clone(), "t"))
    } else {
        None
    };
    if let Some((r, sym)) = t_part {
        let neg = r.is_negative();
        let mag = r.abs();
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() {
            parts.push(ratio_coeff(&mag));
        }
        if k > 0 {
            parts.push(q_pow(k));
        }
        parts.push(sym.to_string());
        return (neg, parts.join("*"));
    }
    // general a + b*t coefficient, fully parenthesized
    let inner = cyc_inner(c);
    let body = if k == 0 {
        format!("({})", inner)
    } else {
        format!("({})*{}", inner, q_pow(k))
    };
    (false, body)
}

fn cyc_inner(c: &CycQ) -> String {
    let a = c.rational_a();
    let b = c.rational_b();
    let mut out = String::new();
    if a.is_negative() {
        out.push('-');
    }
    out.push_str(&ratio_plain(&a.abs()));
    out.push_str(if b.is_negative() { " - " } else { " + " });
    let bm = b.abs();
    if bm.is_one() {
        out.push('t');
    } else {
        out.push_str(&format!("{}*t", ratio_coeff(&bm)));
    }
    out
}

pub(crate) fn cyc_to_string(c: &CycQ) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    if c.is_rational() || c.theta_sq_multiple().is_some() || c.rational_a().is_zero() {
        let (neg, body) = term_string(c, 0);
        return if neg { format!("-{}", body) } else { body };
    }
    cyc_inner(c)
}

pub(crate) fn pol_to_string(p: &PolQ) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for k in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let (neg, body) = term_string(&c, k);
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

// ---- Parser ----

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            'q' => {
                toks.push(Tok::Q);
                i += 1;
            }
            't' => {
                toks.push(Tok::T);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = bytes[start..i].iter().collect();
                let n = lit
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad integer {}: {}", lit, e)))?;
                toks.push(Tok::Int(n));
            }
            other => return Err(Error::Parse(format!("unexpected character '{}'", other))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<PolQ> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolQ> {
        let mut sign = false;
        while matches!(self.peek(), Some(Tok::Minus) | Some(Tok::Plus)) {
            if matches!(self.next(), Some(Tok::Minus)) {
                sign = !sign;
            }
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return Err(Error::Parse(
                            "division only by nonzero constants".to_string(),
                        ));
                    }
                    let inv = rhs.coeff(0).inv().unwrap();
                    acc = acc.scalar_mul(&inv);
                }
                _ => break,
            }
        }
        Ok(if sign { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<PolQ> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Int(n)) => n
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".to_string()))?,
                other => return Err(Error::Parse(format!("expected exponent, got {:?}", other))),
            };
            let e: u32 = e;
            let mut acc = PolQ::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolQ> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(PolQ::constant(CycQ::from_rational(
                BigRational::from_integer(n),
            ))),
            Some(Tok::Q) => Ok(PolQ::q()),
            Some(Tok::T) => Ok(PolQ::constant(CycQ::theta())),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(Error::Parse(format!("expected ')', got {:?}", other))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parse the canonical PolQ grammar.
pub fn parse_pol(s: &str) -> Result<PolQ> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing tokens at position {}",
            p.pos
        )));
    }
    Ok(out)
}
