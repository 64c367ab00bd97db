//! Dense univariate polynomial arithmetic over a [`FieldSpec`].
//!
//! Coefficients are stored ascending by degree: `coeffs[i]` is the
//! coefficient of `X^i`. Normal form strips trailing zeros, so the zero
//! polynomial has an empty coefficient vector and `degree()` returns `None`
//! for it (a distinguished value, never `-1`). Degrees in this crate stay
//! small (a few hundred at most), so multiplication, division and
//! composition are deliberately schoolbook.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Dense univariate polynomial in normal form (no trailing zero
/// coefficients). Immutable: every operation returns a fresh value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, validating that each
    /// belongs to `field` and trimming trailing zeros.
    pub fn new(field: FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch { expected: field, found: c.field() });
            }
        }
        let mut p = Polynomial { field, coeffs };
        p.trim();
        Ok(p)
    }

    /// Convenience constructor from integer coefficients, reduced into the
    /// field (so `[-2, 0, 0, 1]` is `X^3 - 2` over `Q` and `X^3 + 1` over
    /// `F_3`).
    pub fn from_integers(field: FieldSpec, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&n| field.element_from_i64(n)).collect();
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Polynomial::from_integers(field, &[1])
    }

    /// The monomial `X`.
    pub fn x(field: FieldSpec) -> Self {
        Polynomial::from_integers(field, &[0, 1])
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field();
        let mut p = Polynomial { field, coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * X^degree`.
    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let field = c.field();
        if c.is_zero() {
            return Polynomial::zero(field);
        }
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { field, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `None` for the zero polynomial, `len - 1` otherwise.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    /// True iff this is the constant polynomial 1.
    pub fn is_one_polynomial(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Ascending coefficients in normal form.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coeff(0)
    }

    fn check_same_field(&self, rhs: &Self) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch { expected: self.field, found: rhs.field })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&rhs.coeff(i))?);
        }
        let mut p = Polynomial { field: self.field, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(FieldElement::neg).collect();
        Polynomial { field: self.field, coeffs }
    }

    /// Coefficientwise scalar multiple.
    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch { expected: self.field, found: c.field() });
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(c)?);
        }
        let mut p = Polynomial { field: self.field, coeffs };
        p.trim();
        Ok(p)
    }

    /// Schoolbook product: exact, `deg(a*b) = deg a + deg b` for nonzero
    /// inputs.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        let mut p = Polynomial { field: self.field, coeffs };
        p.trim();
        Ok(p)
    }

    /// Euclidean division: returns `(q, r)` with `self = rhs*q + r` and
    /// `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        self.check_same_field(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Polynomial::zero(self.field), self.clone()));
        }
        let lc_inv = rhs.leading_coefficient().expect("nonzero divisor").inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].mul(&lc_inv)?;
            for j in 0..db {
                let t = q.mul(&rhs.coeffs[j])?;
                rem[k - db + j] = rem[k - db + j].sub(&t)?;
            }
            rem[k] = self.field.zero();
            quot[k - db] = q;
        }
        let mut q = Polynomial { field: self.field, coeffs: quot };
        let mut r = Polynomial { field: self.field, coeffs: rem };
        q.trim();
        r.trim();
        Ok((q, r))
    }

    /// True iff `rhs` divides `self` exactly.
    pub fn is_divisible_by(&self, rhs: &Self) -> Result<bool> {
        Ok(self.divrem(rhs)?.1.is_zero())
    }

    /// Composition `self(inner(X))` by Horner's scheme over polynomials.
    /// For nonconstant operands, `deg(f o h) = deg f * deg h`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_same_field(inner)?;
        let mut acc = Polynomial::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?.add(&Polynomial::constant(c.clone()))?;
        }
        Ok(acc)
    }

    /// The reversed coefficient sequence `X^{deg f} * f(1/X)`, re-normalized.
    /// For `f(0) != 0` the degree is preserved and reversing twice is the
    /// identity; each trailing zero of the reversal (a root 0 of `f`) drops
    /// the degree by one.
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        let mut p = Polynomial { field: self.field, coeffs };
        p.trim();
        Ok(p)
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch { expected: self.field, found: x.field() });
        }
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading_coefficient().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        self.scale(&lc.inv()?)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(self.field);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let scalar = self.field.element_from_i64(i as i64);
            coeffs.push(scalar.mul(c).expect("same field"));
        }
        let mut p = Polynomial { field: self.field, coeffs };
        p.trim();
        p
    }

    /// Extended Euclidean algorithm: returns `(d, u, v)` with `d = gcd`
    /// normalized monic and `u*self + v*rhs = d`. When neither input divides
    /// the other, the Bezout pair has the standard minimal degrees
    /// `deg u < deg rhs - deg d` and `deg v < deg self - deg d`.
    pub fn xgcd(&self, rhs: &Self) -> Result<(Self, Self, Self)> {
        self.check_same_field(rhs)?;
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::BothZero);
        }
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Polynomial::one(field), Polynomial::zero(field));
        let (mut t0, mut t1) = (Polynomial::zero(field), Polynomial::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            (r0, r1) = (r1, r);
            let s = s0.sub(&q.mul(&s1)?)?;
            (s0, s1) = (s1, s);
            let t = t0.sub(&q.mul(&t1)?)?;
            (t0, t1) = (t1, t);
        }
        let lc_inv = r0.leading_coefficient().expect("gcd of nonzero inputs").inv()?;
        Ok((r0.scale(&lc_inv)?, s0.scale(&lc_inv)?, t0.scale(&lc_inv)?))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        Ok(self.xgcd(rhs)?.0)
    }

    /// `self^exp mod modulus` by repeated squaring; the exponent may be
    /// astronomically large (e.g. `p^n` in irreducibility tests), hence the
    /// big-integer type.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &Self) -> Result<Self> {
        self.check_same_field(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = self.divrem(modulus)?.1;
        let mut acc = Polynomial::one(self.field).divrem(modulus)?.1;
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                acc = acc.mul(&base)?.divrem(modulus)?.1;
            }
            if i + 1 < bits {
                base = base.mul(&base)?.divrem(modulus)?.1;
            }
        }
        Ok(acc)
    }

    /// Ascending coefficient strings, the canonical serialization unit
    /// (`x^3 - 2` over `Q` becomes `["-2", "0", "0", "1"]`).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Compact bracketed ascending list, e.g. `[-2,0,0,1]`.
    pub fn bracket_string(&self) -> String {
        format!("[{}]", self.coeff_strings().join(","))
    }
}

impl fmt::Display for Polynomial {
    /// Human term syntax, highest degree first: `8*x^6 - 2`, `x^3 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unit = mag == "1";
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}
