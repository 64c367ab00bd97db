//! The serialized, independently re-checkable output of the construction.
//!
//! A certificate packages `f`, the divisor `g`, the substitution `h`, the
//! composition `f(h(X))` and its cofactor, plus a record of named boolean
//! checks. [`SubstitutionCertificate::verify`] recomputes everything from
//! scratch — recompose, redivide, recheck every degree — so a verifier needs
//! none of the construction code, only polynomial arithmetic.
//!
//! The JSON form is canonical: one object with fixed keys, coefficients as
//! exact decimal/fraction strings in ascending order, keys sorted, no
//! whitespace, one trailing newline. Identical inputs therefore serialize to
//! byte-identical files.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Polynomial;

/// How the irreducibility hypothesis on `f` was established.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HypothesisMode {
    /// Verified by the irreducibility module before construction.
    Strict,
    /// Asserted by the caller (`--assume-irreducible`); the divisibility
    /// checks below hold regardless.
    Assumed,
}

impl fmt::Display for HypothesisMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisMode::Strict => "strict",
            HypothesisMode::Assumed => "assumed",
        })
    }
}

/// The six named checks every emitted certificate asserts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CertificateChecks {
    /// `g` divides `f(h(X))` with zero remainder.
    pub divides: bool,
    /// `deg h = d - 1`.
    pub deg_h_eq_dm1: bool,
    /// `deg h >= 2`.
    pub deg_h_ge2: bool,
    /// `deg f(h(X)) = d(d - 1)`.
    pub deg_fh_eq_d_dm1: bool,
    /// `deg f(h(X)) >= 2d`, the inequality that makes the factorization a
    /// genuine reducibility statement.
    pub deg_fh_ge_2d: bool,
    /// The cofactor is nonconstant, so neither factor is a unit.
    pub cofactor_nontrivial: bool,
}

impl CertificateChecks {
    pub fn all_true(&self) -> bool {
        self.divides
            && self.deg_h_eq_dm1
            && self.deg_h_ge2
            && self.deg_fh_eq_d_dm1
            && self.deg_fh_ge_2d
            && self.cofactor_nontrivial
    }
}

/// A reducibility certificate for the substitution `f(h(X))`.
///
/// Invariants in any certificate the library emits: `fh` is the recomputed
/// composition of `f` and `h`; `g * cofactor = fh` exactly; the degrees are
/// `deg g = d`, `deg h = d - 1`, `deg fh = d(d - 1)`,
/// `deg cofactor = d(d - 2)`; and every field of `checks` is true.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubstitutionCertificate {
    pub field: FieldSpec,
    pub f: Polynomial,
    pub f_monic: Polynomial,
    pub g: Polynomial,
    pub h: Polynomial,
    pub fh: Polynomial,
    pub cofactor: Polynomial,
    pub d: usize,
    pub checks: CertificateChecks,
    pub hypothesis_mode: HypothesisMode,
}

impl SubstitutionCertificate {
    /// Re-verifies the certificate from scratch, reporting the first failing
    /// check by name. The order is chosen so that a corruption is blamed on
    /// the most specific check: structural consistency first (`d` against
    /// `deg f`, `f_monic` against `f`, `deg g`), then the recomposed
    /// division, then the stored polynomials, then the degree laws.
    pub fn verify(&self) -> Result<()> {
        let fail = |check: &'static str| Err(Error::CheckFailed { check });
        if self.f.degree() != Some(self.d) {
            return fail("d_matches_degree");
        }
        if self.f_monic != self.f.monic()? {
            return fail("f_monic_matches");
        }
        if self.g.degree() != Some(self.d) {
            return fail("deg_g_eq_d");
        }
        let recomposed = self.f.compose(&self.h)?;
        if !recomposed.is_divisible_by(&self.g)? {
            return fail("divides");
        }
        if self.fh != recomposed {
            return fail("fh_matches");
        }
        if self.g.mul(&self.cofactor)? != self.fh {
            return fail("cofactor_matches");
        }
        if self.d < 1 || self.h.degree() != Some(self.d - 1) {
            return fail("deg_h_eq_dm1");
        }
        if self.h.degree().is_none_or(|dh| dh < 2) {
            return fail("deg_h_ge2");
        }
        if self.fh.degree() != Some(self.d * (self.d - 1)) {
            return fail("deg_fh_eq_d_dm1");
        }
        if self.fh.degree().is_none_or(|df| df < 2 * self.d) {
            return fail("deg_fh_ge_2d");
        }
        if self.cofactor.degree().is_none_or(|dc| dc < 1) {
            return fail("cofactor_nontrivial");
        }
        if !self.checks.all_true() {
            return fail("checks_recorded_true");
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "field": self.field.to_string(),
            "f": self.f.coeff_strings(),
            "f_monic": self.f_monic.coeff_strings(),
            "g": self.g.coeff_strings(),
            "h": self.h.coeff_strings(),
            "fh": self.fh.coeff_strings(),
            "cofactor": self.cofactor.coeff_strings(),
            "d": self.d as u64,
            "checks": {
                "divides": self.checks.divides,
                "deg_h_eq_dm1": self.checks.deg_h_eq_dm1,
                "deg_h_ge2": self.checks.deg_h_ge2,
                "deg_fh_eq_d_dm1": self.checks.deg_fh_eq_d_dm1,
                "deg_fh_ge_2d": self.checks.deg_fh_ge_2d,
                "cofactor_nontrivial": self.checks.cofactor_nontrivial,
            },
            "hypothesis_mode": self.hypothesis_mode.to_string(),
        })
    }

    /// Canonical single-line JSON: sorted keys, compact separators, trailing
    /// newline. Serializing the same certificate twice is byte-identical.
    pub fn to_json_string(&self) -> String {
        let mut s = self.to_json_value().to_string();
        s.push('\n');
        s
    }

    /// Strict parse of the canonical JSON form: exactly the documented keys,
    /// polynomials as ascending coefficient-string arrays over the declared
    /// field. Anything else is rejected as malformed.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(s)
            .map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))?;
        let Value::Object(mut map) = value else {
            return Err(Error::Malformed("certificate must be a JSON object".into()));
        };
        let field: FieldSpec = take_string(&mut map, "field")?
            .parse()
            .map_err(|e: Error| Error::Malformed(format!("bad field spec: {e}")))?;
        let f = take_poly(&mut map, "f", field)?;
        let f_monic = take_poly(&mut map, "f_monic", field)?;
        let g = take_poly(&mut map, "g", field)?;
        let h = take_poly(&mut map, "h", field)?;
        let fh = take_poly(&mut map, "fh", field)?;
        let cofactor = take_poly(&mut map, "cofactor", field)?;
        let d = take_u64(&mut map, "d")? as usize;
        let checks = take_checks(&mut map)?;
        let hypothesis_mode = match take_string(&mut map, "hypothesis_mode")?.as_str() {
            "strict" => HypothesisMode::Strict,
            "assumed" => HypothesisMode::Assumed,
            other => {
                return Err(Error::Malformed(format!("unknown hypothesis_mode \"{other}\"")));
            }
        };
        if let Some(key) = map.keys().next() {
            return Err(Error::Malformed(format!("unexpected key \"{key}\"")));
        }
        Ok(SubstitutionCertificate {
            field,
            f,
            f_monic,
            g,
            h,
            fh,
            cofactor,
            d,
            checks,
            hypothesis_mode,
        })
    }

    /// Multi-line human rendering used by the CLI.
    pub fn human_summary(&self) -> String {
        let deg = |p: &Polynomial| match p.degree() {
            Some(d) => d.to_string(),
            None => "-".to_string(),
        };
        let mut out = String::new();
        out.push_str(&format!("field      {}\n", self.field));
        out.push_str(&format!("f          = {}\n", self.f));
        if self.f_monic != self.f {
            out.push_str(&format!("f_monic    = {}\n", self.f_monic));
        }
        out.push_str(&format!("g          = {}\n", self.g));
        out.push_str(&format!("h          = {}\n", self.h));
        out.push_str(&format!("f(h(X))    = {}\n", self.fh));
        out.push_str(&format!("cofactor   = {}\n", self.cofactor));
        out.push_str("identity   f(h(X)) = g * cofactor\n");
        out.push_str(&format!(
            "degrees    d = {}, deg h = {}, deg f(h) = {}, deg cofactor = {}\n",
            self.d,
            deg(&self.h),
            deg(&self.fh),
            deg(&self.cofactor)
        ));
        let c = &self.checks;
        out.push_str(&format!(
            "checks     divides={} deg_h_eq_dm1={} deg_h_ge2={} deg_fh_eq_d_dm1={} deg_fh_ge_2d={} cofactor_nontrivial={}\n",
            c.divides, c.deg_h_eq_dm1, c.deg_h_ge2, c.deg_fh_eq_d_dm1, c.deg_fh_ge_2d, c.cofactor_nontrivial
        ));
        out.push_str(&format!(
            "hypothesis {} ({})\n",
            self.hypothesis_mode,
            match self.hypothesis_mode {
                HypothesisMode::Strict => "irreducibility of f verified",
                HypothesisMode::Assumed => "irreducibility of f asserted by caller",
            }
        ));
        out
    }
}

fn take_value(map: &mut Map<String, Value>, key: &str) -> Result<Value> {
    map.remove(key).ok_or_else(|| Error::Malformed(format!("missing key \"{key}\"")))
}

fn take_string(map: &mut Map<String, Value>, key: &str) -> Result<String> {
    match take_value(map, key)? {
        Value::String(s) => Ok(s),
        _ => Err(Error::Malformed(format!("key \"{key}\" must be a string"))),
    }
}

fn take_u64(map: &mut Map<String, Value>, key: &str) -> Result<u64> {
    match take_value(map, key)? {
        Value::Number(n) => n
            .as_u64()
            .ok_or_else(|| Error::Malformed(format!("key \"{key}\" must be a nonnegative integer"))),
        _ => Err(Error::Malformed(format!("key \"{key}\" must be a number"))),
    }
}

fn take_bool(map: &mut Map<String, Value>, key: &str) -> Result<bool> {
    match take_value(map, key)? {
        Value::Bool(b) => Ok(b),
        _ => Err(Error::Malformed(format!("key \"{key}\" must be a boolean"))),
    }
}

fn take_poly(map: &mut Map<String, Value>, key: &str, field: FieldSpec) -> Result<Polynomial> {
    let Value::Array(items) = take_value(map, key)? else {
        return Err(Error::Malformed(format!("key \"{key}\" must be an array")));
    };
    let mut coeffs = Vec::with_capacity(items.len());
    for item in items {
        let Value::String(s) = item else {
            return Err(Error::Malformed(format!(
                "key \"{key}\" must contain coefficient strings"
            )));
        };
        let c = field
            .parse_element(&s)
            .map_err(|e| Error::Malformed(format!("bad coefficient \"{s}\" in \"{key}\": {e}")))?;
        coeffs.push(c);
    }
    Polynomial::new(field, coeffs)
}

fn take_checks(map: &mut Map<String, Value>) -> Result<CertificateChecks> {
    let Value::Object(mut inner) = take_value(map, "checks")? else {
        return Err(Error::Malformed("key \"checks\" must be an object".into()));
    };
    let checks = CertificateChecks {
        divides: take_bool(&mut inner, "divides")?,
        deg_h_eq_dm1: take_bool(&mut inner, "deg_h_eq_dm1")?,
        deg_h_ge2: take_bool(&mut inner, "deg_h_ge2")?,
        deg_fh_eq_d_dm1: take_bool(&mut inner, "deg_fh_eq_d_dm1")?,
        deg_fh_ge_2d: take_bool(&mut inner, "deg_fh_ge_2d")?,
        cofactor_nontrivial: take_bool(&mut inner, "cofactor_nontrivial")?,
    };
    if let Some(key) = inner.keys().next() {
        return Err(Error::Malformed(format!("unexpected key \"{key}\" in checks")));
    }
    Ok(checks)
}
