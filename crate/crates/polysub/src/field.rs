//! Exact arithmetic over the two supported coefficient fields: the prime
//! fields `F_p` (p prime, `2 <= p < 2^31`) and the rationals `Q`.
//!
//! `F_p` elements are canonical residues in a machine word; products go
//! through a 128-bit intermediate so no modulus below `2^31` can overflow.
//! `Q` elements are arbitrary-precision fractions kept in lowest terms with
//! a positive denominator. There is no floating point anywhere: every result
//! is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus is `2^31 - 1` (which happens to be prime).
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum FieldKind {
    Prime(u64),
    Rationals,
}

/// Selects the coefficient field. Construct with [`FieldSpec::prime`] or
/// [`FieldSpec::rationals`]; the prime constructor runs a deterministic
/// primality check, so every `FieldSpec` in circulation is valid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    kind: FieldKind,
}

impl FieldSpec {
    /// The prime field `F_p`. Rejects composites and moduli outside
    /// `2 <= p < 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { kind: FieldKind::Prime(p) })
    }

    /// The rational numbers `Q`.
    pub fn rationals() -> Self {
        FieldSpec { kind: FieldKind::Rationals }
    }

    /// `Some(p)` for a prime field, `None` for `Q`.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Prime(p) => Some(p),
            FieldKind::Rationals => None,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.kind, FieldKind::Rationals)
    }

    /// Additive identity.
    pub fn zero(&self) -> FieldElement {
        match self.kind {
            FieldKind::Prime(p) => FieldElement { repr: Repr::Prime { p, value: 0 } },
            FieldKind::Rationals => FieldElement { repr: Repr::Rational(BigRational::zero()) },
        }
    }

    /// Multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.element_from_i64(1)
    }

    /// The canonical image of an integer in this field.
    pub fn element_from_i64(&self, n: i64) -> FieldElement {
        self.element_from_bigint(&BigInt::from(n))
    }

    /// The canonical image of an arbitrary-precision integer in this field.
    pub fn element_from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.kind {
            FieldKind::Prime(p) => {
                let p_big = BigInt::from(p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let value: u64 = r.try_into().expect("residue fits in u64 after reduction");
                FieldElement { repr: Repr::Prime { p, value } }
            }
            FieldKind::Rationals => {
                FieldElement { repr: Repr::Rational(BigRational::from(n.clone())) }
            }
        }
    }

    /// An exact fraction `num/den`. Only `Q` has nontrivial fractions;
    /// a fraction literal under `F_p` is a [`Error::FieldLiteral`].
    pub fn element_from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        match self.kind {
            FieldKind::Prime(_) => Err(Error::FieldLiteral {
                literal: format!("{num}/{den}"),
                field: *self,
            }),
            FieldKind::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldElement { repr: Repr::Rational(BigRational::new(num.clone(), den.clone())) })
            }
        }
    }

    /// Parses a field-element literal: an optionally signed integer, or
    /// `num/den` over `Q`. This is the grammar used for coefficients in
    /// certificate files and bracketed polynomial lists.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        let bad = || Error::FieldLiteral { literal: text.to_string(), field: *self };
        if let Some((num, den)) = t.split_once('/') {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            self.element_from_fraction(&num, &den)
        } else {
            let n = BigInt::from_str(t).map_err(|_| bad())?;
            Ok(self.element_from_bigint(&n))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Prime(p) => write!(f, "F{p}"),
            FieldKind::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `"Q"` and `"F<p>"` (e.g. `"F7"`), case-insensitive in the
    /// leading letter.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::rationals());
        }
        if let Some(rest) = t.strip_prefix('F').or_else(|| t.strip_prefix('f')) {
            let p: u64 = rest.parse().map_err(|_| Error::Parse {
                pos: 1,
                msg: format!("expected a prime after 'F', got '{rest}'"),
            })?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse {
            pos: 0,
            msg: format!("unknown field '{t}' (expected 'Q' or 'F<p>')"),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Prime { p: u64, value: u64 },
    Rational(BigRational),
}

/// An exact element of a [`FieldSpec`]: a canonical residue mod p, or a
/// reduced fraction. Immutable; all operations return fresh values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    repr: Repr,
}

impl FieldElement {
    /// The field this element belongs to.
    pub fn field(&self) -> FieldSpec {
        match &self.repr {
            Repr::Prime { p, .. } => FieldSpec { kind: FieldKind::Prime(*p) },
            Repr::Rational(_) => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Prime { value, .. } => *value == 0,
            Repr::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Prime { value, .. } => *value == 1,
            Repr::Rational(r) => r.is_one(),
        }
    }

    /// Canonical residue for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    /// Reduced fraction for rational elements.
    pub fn rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Prime { .. } => None,
        }
    }

    fn check_same_field(&self, rhs: &Self) -> Result<()> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch { expected: self.field(), found: rhs.field() })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(match (&self.repr, &rhs.repr) {
            (Repr::Prime { p, value: a }, Repr::Prime { value: b, .. }) => {
                let s = a + b; // both < 2^31, no overflow in u64
                FieldElement { repr: Repr::Prime { p: *p, value: if s >= *p { s - p } else { s } } }
            }
            (Repr::Rational(a), Repr::Rational(b)) => {
                FieldElement { repr: Repr::Rational(a + b) }
            }
            _ => unreachable!("fields already checked equal"),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_field(rhs)?;
        Ok(match (&self.repr, &rhs.repr) {
            (Repr::Prime { p, value: a }, Repr::Prime { value: b, .. }) => {
                let prod = (*a as u128) * (*b as u128) % (*p as u128);
                FieldElement { repr: Repr::Prime { p: *p, value: prod as u64 } }
            }
            (Repr::Rational(a), Repr::Rational(b)) => {
                FieldElement { repr: Repr::Rational(a * b) }
            }
            _ => unreachable!("fields already checked equal"),
        })
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Prime { p, value } => {
                let value = if *value == 0 { 0 } else { p - value };
                FieldElement { repr: Repr::Prime { p: *p, value } }
            }
            Repr::Rational(r) => FieldElement { repr: Repr::Rational(-r) },
        }
    }

    /// Multiplicative inverse. `F_p` uses the extended Euclidean algorithm
    /// on integers, so a composite modulus would surface as
    /// [`Error::NotInvertible`] rather than a silently wrong answer.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.repr {
            Repr::Prime { p, value } => {
                let (g, u) = xgcd_i128(*value as i128, *p as i128);
                if g != 1 {
                    return Err(Error::NotInvertible);
                }
                let inv = u.rem_euclid(*p as i128) as u64;
                Ok(FieldElement { repr: Repr::Prime { p: *p, value: inv } })
            }
            Repr::Rational(r) => Ok(FieldElement { repr: Repr::Rational(r.recip()) }),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.mul(&rhs.inv()?)
    }

    /// Square-and-multiply power with the convention `0^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    /// Prime-field elements print as their canonical residue; rationals as
    /// `num/den`, or just `num` when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime { value, .. } => write!(f, "{value}"),
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Extended Euclid on signed 128-bit integers: returns `(gcd, u)` with
/// `u*a = gcd (mod b)`.
fn xgcd_i128(a: i128, b: i128) -> (i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0, s0)
}

/// Deterministic Miller-Rabin for `n < 3_215_031_751`, which covers the whole
/// admissible modulus range: the witness set {2, 3, 5, 7} is exact there.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        exp >>= 1;
        base = ((base as u128 * base as u128) % m as u128) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn prime_spec_validates() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
        assert_eq!(FieldSpec::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(0), Err(Error::NotPrime(0)));
        // 2^31 - 1 is a Mersenne prime, 2^31 + 11 is prime but out of range
        assert!(FieldSpec::prime(MAX_PRIME).is_ok());
        assert!(matches!(FieldSpec::prime((1 << 31) + 11), Err(Error::PrimeTooLarge(_))));
    }

    #[test]
    fn spec_equality() {
        assert_eq!(f5(), FieldSpec::prime(5).unwrap());
        assert_ne!(f5(), FieldSpec::prime(7).unwrap());
        assert_ne!(f5(), q());
    }

    #[test]
    fn additive_identity() {
        for field in [f5(), q()] {
            let x = field.element_from_i64(3);
            assert_eq!(field.zero().add(&x).unwrap(), x);
        }
    }

    #[test]
    fn mul_mod_5() {
        // 3 * 4 = 12 = 2 mod 5
        let a = f5().element_from_i64(3);
        let b = f5().element_from_i64(4);
        assert_eq!(a.mul(&b).unwrap(), f5().element_from_i64(2));
    }

    #[test]
    fn rational_add_lowest_terms() {
        // 1/2 + 1/3 = 5/6
        let a = q().element_from_fraction(&1.into(), &2.into()).unwrap();
        let b = q().element_from_fraction(&1.into(), &3.into()).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn inverses() {
        assert_eq!(f5().one().inv().unwrap(), f5().one());
        assert_eq!(q().one().inv().unwrap(), q().one());
        // inv(3) = 5 over F_7 since 3*5 = 15 = 1 mod 7
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.element_from_i64(3).inv().unwrap(), f7.element_from_i64(5));
        // inv(-2/3) = -3/2
        let x = q().element_from_fraction(&(-2).into(), &3.into()).unwrap();
        assert_eq!(x.inv().unwrap().to_string(), "-3/2");
        assert_eq!(f5().zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn powers() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.element_from_i64(3).pow(0), f7.one());
        assert_eq!(f7.zero().pow(0), f7.one()); // 0^0 = 1 by convention
        // 2^4 = 16 = 2 mod 7
        assert_eq!(f7.element_from_i64(2).pow(4), f7.element_from_i64(2));
        // 2^10 = 1024 over Q
        assert_eq!(q().element_from_i64(2).pow(10), q().element_from_i64(1024));
    }

    #[test]
    fn mixed_field_is_an_error() {
        let a = f5().one();
        let b = q().one();
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
        let c = FieldSpec::prime(7).unwrap().one();
        assert!(matches!(a.mul(&c), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn canonical_forms() {
        // residues reduce, including negatives
        assert_eq!(f5().element_from_i64(12), f5().element_from_i64(2));
        assert_eq!(f5().element_from_i64(-1), f5().element_from_i64(4));
        // fractions normalize sign and reduce
        let x = q().element_from_fraction(&4.into(), &(-6).into()).unwrap();
        assert_eq!(x.to_string(), "-2/3");
        let z = q().element_from_fraction(&0.into(), &(-5).into()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn fraction_literal_rejected_mod_p() {
        assert!(matches!(
            f5().parse_element("1/2"),
            Err(Error::FieldLiteral { .. })
        ));
        assert_eq!(f5().parse_element("-3").unwrap(), f5().element_from_i64(2));
        assert_eq!(q().parse_element("-7/14").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn field_spec_round_trips_text() {
        for s in ["Q", "F2", "F7", "F101", "F2147483647"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("F9".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn largest_modulus_has_no_overflow() {
        let f = FieldSpec::prime(MAX_PRIME).unwrap();
        let a = f.element_from_i64(MAX_PRIME as i64 - 1);
        let sq = a.mul(&a).unwrap();
        // (p-1)^2 = 1 mod p
        assert!(sq.is_one());
    }
}
