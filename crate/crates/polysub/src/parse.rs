//! Text syntax for polynomials.
//!
//! Two input forms are accepted, mirroring the two ways polynomials are
//! written elsewhere in the crate:
//!
//! - a bracketed **ascending coefficient list** such as `[-2, 0, 0, 1]`
//!   (= x^3 - 2), the form used in certificate files, and
//! - human **term syntax** such as `x^3 - 2` or `8*x^6 - 2`: a sum of
//!   terms in the single variable `x`, with `^` for powers and an
//!   optional `*` between coefficient and variable.
//!
//! Coefficients are integer literals, or `num/den` fractions over `Q`.
//! Integers are reduced into the coefficient field, so `"7x + 10"` over
//! `F5` parses to `2x`. A fraction literal under a prime field is
//! rejected with [`Error::FieldLiteral`]; every other rejection is an
//! [`Error::Parse`] carrying the byte offset of the offending input.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Polynomial;

/// Largest exponent the term syntax accepts. Certificates in this crate
/// have degree d(d-1) for moderate d; the cap only exists so that a typo
/// like `x^99999999999` fails fast instead of allocating.
const MAX_EXPONENT: usize = 1_000_000;

/// Parses `text` as a polynomial over `field`, accepting either the
/// bracketed ascending-coefficient form or term syntax.
///
/// ```
/// use polysub::{FieldSpec, Polynomial, parse_polynomial};
///
/// let q = FieldSpec::rationals();
/// let from_list = parse_polynomial("[-2, 0, 0, 1]", q).unwrap();
/// let from_terms = parse_polynomial("x^3 - 2", q).unwrap();
/// assert_eq!(from_list, from_terms);
/// assert_eq!(from_list, Polynomial::from_integers(q, &[-2, 0, 0, 1]));
/// ```
pub fn parse_polynomial(text: &str, field: FieldSpec) -> Result<Polynomial> {
    let mut scanner = Scanner { text, pos: 0 };
    scanner.skip_ws();
    match scanner.peek() {
        None => Err(scanner.error_here("empty input")),
        Some(b'[') => scanner.bracketed(field),
        Some(_) => scanner.terms(field),
    }
}

/// A byte-offset cursor over the input. All grammar productions leave
/// `pos` on the first byte they did not consume.
struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl Scanner<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn error_here(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse { pos, msg: msg.into() }
    }

    /// `[ elem, elem, ... ]` — ascending coefficients; `[]` is the zero
    /// polynomial. Elements use the field-element literal grammar
    /// (optionally signed integer, or fraction over `Q`).
    fn bracketed(&mut self, field: FieldSpec) -> Result<Polynomial> {
        self.bump(); // consume '['
        let mut coeffs = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.bump();
        } else {
            loop {
                coeffs.push(self.list_element(field)?);
                match self.peek() {
                    Some(b',') => self.bump(),
                    Some(b']') => {
                        self.bump();
                        break;
                    }
                    // list_element stops only at ',', ']' or end of input
                    _ => return Err(self.error_here("unterminated coefficient list, expected ']'")),
                }
            }
        }
        self.skip_ws();
        if self.peek().is_some() {
            return Err(self.error_here("unexpected input after ']'"));
        }
        Polynomial::new(field, coeffs)
    }

    /// One element of a bracketed list: everything up to the next `,` or
    /// `]`, handed to the field's literal parser. Shape errors become
    /// positioned parse errors; a well-formed fraction under a prime
    /// field stays a field-literal error.
    fn list_element(&mut self, field: FieldSpec) -> Result<FieldElement> {
        self.skip_ws();
        let start = self.pos;
        while !matches!(self.peek(), None | Some(b',') | Some(b']')) {
            self.bump();
        }
        let raw = self.text[start..self.pos].trim();
        if raw.is_empty() {
            return Err(self.error_at(start, "expected a coefficient"));
        }
        field.parse_element(raw).map_err(|e| match e {
            Error::FieldLiteral { .. } if !is_numeric_literal(raw) => {
                self.error_at(start, format!("invalid coefficient literal '{raw}'"))
            }
            other => other,
        })
    }

    /// Term syntax: `term (('+'|'-') term)*` with an optional leading
    /// sign. Terms with equal exponents accumulate, so `x + x` over `F3`
    /// parses to `2x`.
    fn terms(&mut self, field: FieldSpec) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(field);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            Some(b'+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let (coeff, exponent) = self.term(field)?;
            let coeff = if negate { coeff.neg() } else { coeff };
            acc = acc.add(&Polynomial::monomial(coeff, exponent))?;
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    negate = false;
                    self.bump();
                }
                Some(b'-') => {
                    negate = true;
                    self.bump();
                }
                Some(_) => return Err(self.error_here("expected '+', '-', or end of input")),
            }
        }
    }

    /// A single term: `number ['*'] [variable]` or a bare `variable`.
    fn term(&mut self, field: FieldSpec) -> Result<(FieldElement, usize)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.number(field)?;
                let after_number = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.bump();
                    self.skip_ws();
                    if !matches!(self.peek(), Some(b'x') | Some(b'X')) {
                        return Err(self.error_here("expected 'x' after '*'"));
                    }
                    Ok((coeff, self.variable()?))
                } else if matches!(self.peek(), Some(b'x') | Some(b'X')) {
                    Ok((coeff, self.variable()?))
                } else {
                    self.pos = after_number;
                    Ok((coeff, 0))
                }
            }
            Some(b'x') | Some(b'X') => Ok((field.one(), self.variable()?)),
            Some(_) => Err(self.error_here("expected a coefficient or 'x'")),
            None => Err(self.error_here("expected a term")),
        }
    }

    /// `x` or `x^k`; returns the exponent.
    fn variable(&mut self) -> Result<usize> {
        self.bump(); // consume 'x'
        let after_var = self.pos;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            self.pos = after_var;
            return Ok(1);
        }
        self.bump(); // consume '^'
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error_here("expected an exponent after '^'"));
        }
        let exponent: usize = self.text[start..self.pos]
            .parse()
            .map_err(|_| self.error_at(start, "exponent out of range"))?;
        if exponent > MAX_EXPONENT {
            return Err(self.error_at(start, format!("exponent exceeds the maximum {MAX_EXPONENT}")));
        }
        Ok(exponent)
    }

    /// An unsigned integer literal with no interior whitespace, then
    /// optionally `/ den`. Fractions go through the field so that `1/2`
    /// under `F7` reports a field-literal error, not a syntax error.
    fn number(&mut self, field: FieldSpec) -> Result<FieldElement> {
        let num = self.integer()?;
        let after_numerator = self.pos;
        self.skip_ws();
        if self.peek() != Some(b'/') {
            self.pos = after_numerator;
            return Ok(field.element_from_bigint(&num));
        }
        self.bump(); // consume '/'
        self.skip_ws();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.error_here("expected denominator digits after '/'"));
        }
        let den = self.integer()?;
        field.element_from_fraction(&num, &den)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        debug_assert!(self.pos > start, "integer() called off a non-digit");
        BigInt::from_str(&self.text[start..self.pos])
            .map_err(|_| self.error_at(start, "invalid integer literal"))
    }
}

/// True when `s` already has the shape of a field-element literal
/// (optionally signed integer or fraction). Used to tell a genuine
/// wrong-field literal such as `1/2` under `F7` apart from plain junk.
fn is_numeric_literal(s: &str) -> bool {
    fn is_signed_digits(part: &str) -> bool {
        let body = part.trim().strip_prefix(['-', '+']).unwrap_or(part.trim());
        !body.is_empty() && body.bytes().all(|c| c.is_ascii_digit())
    }
    match s.split_once('/') {
        Some((num, den)) => is_signed_digits(num) && is_signed_digits(den),
        None => is_signed_digits(s),
    }
}
