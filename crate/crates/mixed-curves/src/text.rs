//! Text form of mixed polynomials.
//!
//! A polynomial prints as terms joined by ` + `, each term a coefficient
//! `(<re>,<im>)` followed by `*z<i>` / `*zb<i>` factors with `^<k>` for
//! exponents above one. The zero polynomial prints as `0`. Coefficients use
//! the shortest decimal form that parses back to the same double, so
//! parse(print(f)) == f exactly for canonical f.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::poly::{MixedMonomial, MixedPolynomial, PolyError};

/// Largest variable index the inferring parser accepts. Bounds the memory a
/// hostile input can demand via `z4294967295`.
pub const MAX_PARSE_VARS: usize = 256;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("expected '{expected}' at byte {pos}")]
    Expected { expected: char, pos: usize },
    #[error("bad number at byte {pos}")]
    BadNumber { pos: usize },
    #[error("non-finite coefficient at byte {pos}")]
    NonFinite { pos: usize },
    #[error("bad variable index at byte {pos}")]
    BadIndex { pos: usize },
    #[error("variable index {index} exceeds limit {limit}")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("bad exponent at byte {pos}")]
    BadExponent { pos: usize },
    #[error("trailing input at byte {pos}")]
    Trailing { pos: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return w.write_str("0");
        }
        for (k, t) in self.terms().iter().enumerate() {
            if k > 0 {
                w.write_str(" + ")?;
            }
            write!(w, "({},{})", t.coeff.re, t.coeff.im)?;
            write_factors(w, &t.nu, "z")?;
            write_factors(w, &t.mu, "zb")?;
        }
        Ok(())
    }
}

fn write_factors(w: &mut fmt::Formatter<'_>, exps: &[u32], name: &str) -> fmt::Result {
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        write!(w, "*{}{}", name, i + 1)?;
        if e > 1 {
            write!(w, "^{}", e)?;
        }
    }
    Ok(())
}

/// Parses with a fixed variable count; indices above `n_vars` are rejected.
pub fn parse_polynomial(s: &str, n_vars: usize) -> Result<MixedPolynomial, ParseError> {
    let raw = parse_raw(s, n_vars)?;
    assemble(raw, n_vars)
}

/// Parses and takes the variable count from the largest index that occurs
/// (zero variables for the zero polynomial).
pub fn parse_polynomial_infer(s: &str) -> Result<MixedPolynomial, ParseError> {
    let raw = parse_raw(s, MAX_PARSE_VARS)?;
    let n_vars = raw
        .iter()
        .flat_map(|(_, fs)| fs.iter().map(|f| f.index))
        .max()
        .unwrap_or(0);
    assemble(raw, n_vars)
}

struct Factor {
    conj: bool,
    index: usize,
    exp: u32,
}

type RawTerm = (Complex64, Vec<Factor>);

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Expected {
                expected: b as char,
                pos: self.pos,
            })
        }
    }

    fn eat_str(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    /// Slice up to (not including) the next `stop` byte.
    fn until(&mut self, stop: u8) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b == stop {
                // The format is pure ASCII; any multi-byte UTF-8 in the
                // slice fails the later number parse rather than str slicing.
                let piece = std::str::from_utf8(&self.s[start..self.pos])
                    .map_err(|_| ParseError::BadNumber { pos: start })?;
                return Ok(piece);
            }
            self.pos += 1;
        }
        Err(ParseError::Expected {
            expected: stop as char,
            pos: self.pos,
        })
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::BadNumber { pos: start });
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits"))
    }
}

fn parse_raw(s: &str, limit: usize) -> Result<Vec<RawTerm>, ParseError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(ParseError::Empty);
    }
    if trimmed == "0" {
        return Ok(Vec::new());
    }
    let mut cur = Cursor {
        s: trimmed.as_bytes(),
        pos: 0,
    };
    let mut terms = vec![parse_term(&mut cur, limit)?];
    loop {
        if cur.peek().is_none() {
            return Ok(terms);
        }
        if !cur.eat_str(" + ") {
            return Err(ParseError::Trailing { pos: cur.pos });
        }
        terms.push(parse_term(&mut cur, limit)?);
    }
}

fn parse_term(cur: &mut Cursor, limit: usize) -> Result<RawTerm, ParseError> {
    cur.eat(b'(')?;
    let re = parse_float(cur, b',')?;
    cur.eat(b',')?;
    let im = parse_float(cur, b')')?;
    cur.eat(b')')?;
    let mut factors = Vec::new();
    while cur.peek() == Some(b'*') {
        cur.pos += 1;
        factors.push(parse_factor(cur, limit)?);
    }
    Ok((Complex64::new(re, im), factors))
}

fn parse_float(cur: &mut Cursor, stop: u8) -> Result<f64, ParseError> {
    let start = cur.pos;
    let piece = cur.until(stop)?;
    let v = f64::from_str(piece).map_err(|_| ParseError::BadNumber { pos: start })?;
    if !v.is_finite() {
        return Err(ParseError::NonFinite { pos: start });
    }
    Ok(v)
}

fn parse_factor(cur: &mut Cursor, limit: usize) -> Result<Factor, ParseError> {
    cur.eat(b'z')?;
    let conj = cur.peek() == Some(b'b') && {
        cur.pos += 1;
        true
    };
    let idx_pos = cur.pos;
    let digits = cur
        .digits()
        .map_err(|_| ParseError::BadIndex { pos: idx_pos })?;
    let index = usize::from_str(digits).map_err(|_| ParseError::BadIndex { pos: idx_pos })?;
    if index == 0 {
        return Err(ParseError::BadIndex { pos: idx_pos });
    }
    if index > limit {
        return Err(ParseError::IndexOutOfRange { index, limit });
    }
    let exp = if cur.peek() == Some(b'^') {
        cur.pos += 1;
        let e_pos = cur.pos;
        let digits = cur
            .digits()
            .map_err(|_| ParseError::BadExponent { pos: e_pos })?;
        u32::from_str(digits).map_err(|_| ParseError::BadExponent { pos: e_pos })?
    } else {
        1
    };
    Ok(Factor { conj, index, exp })
}

fn assemble(raw: Vec<RawTerm>, n_vars: usize) -> Result<MixedPolynomial, ParseError> {
    let mut terms = Vec::with_capacity(raw.len());
    for (coeff, factors) in raw {
        let mut nu = vec![0u32; n_vars];
        let mut mu = vec![0u32; n_vars];
        for f in factors {
            if f.index > n_vars {
                return Err(ParseError::IndexOutOfRange {
                    index: f.index,
                    limit: n_vars,
                });
            }
            let slot = if f.conj {
                &mut mu[f.index - 1]
            } else {
                &mut nu[f.index - 1]
            };
            *slot = slot.checked_add(f.exp).ok_or(PolyError::ExponentOverflow)?;
        }
        terms.push(MixedMonomial::new(coeff, nu, mu));
    }
    Ok(MixedPolynomial::new(terms, n_vars)?)
}
