//! Plain-text notation for constant-coefficient forms.
//!
//! The printed form is `dx1 dx2 dx3 - dx1 dy2 dy3 + 1/2 dy0 dy1`, the same
//! syntax [`parse_form`] accepts, so the two round-trip.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Blade, ExteriorError, Form, Frame};
use crate::scalars::{Rational, Scalar};

impl<S: Scalar> fmt::Display for Form<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (blade, c)) in self.terms().enumerate() {
            let (neg, mag) = c.coefficient_text();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *blade == Blade::SCALAR {
                f.write_str(if mag.is_empty() { "1" } else { &mag })?;
            } else if mag.is_empty() {
                write!(f, "{}", blade.display(self.frame()))?;
            } else {
                write!(f, "{mag} {}", blade.display(self.frame()))?;
            }
        }
        Ok(())
    }
}

fn parse_err(msg: impl Into<String>) -> ExteriorError {
    ExteriorError::Parse(msg.into())
}

/// Parses a signed sum of monomials such as `dy0 dx1 dy1 - 1/2 dx2 dy2`.
///
/// Factors may appear in any order; the sign of the sorting permutation is
/// applied. Wedge symbols `^` and `∧` are optional separators.
pub fn parse_form(frame: Frame, degree: usize, text: &str) -> Result<Form<Rational>, ExteriorError> {
    let mut out = Form::zero(frame, degree);
    let cleaned: String = text.chars().map(|c| if c == '^' || c == '∧' || c == '*' { ' ' } else { c }).collect();
    let mut chars = cleaned.trim().chars().peekable();
    if cleaned.trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace()) {
            chars.next();
        }
        if chars.peek().is_none() {
            if first {
                return Err(parse_err("empty expression"));
            }
            break;
        }
        let mut negative = false;
        match chars.peek() {
            Some('+') => {
                chars.next();
            }
            Some('-') => {
                negative = true;
                chars.next();
            }
            _ if !first => return Err(parse_err("expected '+' or '-' between terms")),
            _ => {}
        }
        first = false;
        // collect the term up to the next top-level sign
        let mut term = String::new();
        while let Some(&c) = chars.peek() {
            if (c == '+' || c == '-') && !term.trim().is_empty() {
                break;
            }
            term.push(c);
            chars.next();
        }
        let (coeff, seq) = parse_term(frame, term.trim())?;
        if seq.len() != degree {
            return Err(parse_err(format!("term `{}` has degree {}, expected {degree}", term.trim(), seq.len())));
        }
        if let Some((sign, blade)) = Blade::from_sequence(&seq) {
            let mut c = coeff * Rational::from_integer(BigInt::from(sign));
            if negative {
                c = -c;
            }
            out.add_term(blade, c);
        }
    }
    Ok(out)
}

fn parse_term(frame: Frame, term: &str) -> Result<(Rational, alloc::vec::Vec<usize>), ExteriorError> {
    let mut coeff = Rational::from_integer(1.into());
    let mut seq = alloc::vec::Vec::new();
    for token in term.split_whitespace() {
        let mut rest = token;
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let end = rest.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(rest.len());
            coeff *= parse_rational(&rest[..end])?;
            rest = &rest[end..];
        }
        while !rest.is_empty() {
            let Some(tail) = rest.strip_prefix('d') else {
                return Err(parse_err(format!("unexpected token `{token}`")));
            };
            if tail.len() < 2 {
                return Err(parse_err(format!("truncated coordinate in `{token}`")));
            }
            let name = &tail[..2];
            let idx =
                frame.index_of(name).ok_or_else(|| parse_err(format!("unknown coordinate `{name}` for {frame}")))?;
            seq.push(idx);
            rest = &tail[2..];
        }
    }
    Ok((coeff, seq))
}

fn parse_rational(s: &str) -> Result<Rational, ExteriorError> {
    let bad = || parse_err(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Convenience for crate-internal constants that are known to parse.
pub(crate) fn form(frame: Frame, degree: usize, text: &str) -> Form<Rational> {
    parse_form(frame, degree, text).unwrap_or_else(|e| panic!("bad form literal `{text}`: {e}"))
}

pub fn to_text<S: Scalar>(f: &Form<S>) -> String {
    f.to_string()
}
