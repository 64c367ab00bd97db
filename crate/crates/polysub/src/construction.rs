//! The substitution construction: given an irreducible `f` of degree
//! `d >= 3`, build `h` of degree `d - 1` with `f(h(X))` reducible.
//!
//! The idea: let `alpha` be a root of `f` and `g` the monic minimal
//! polynomial of `1/alpha` — concretely the monic reversal of `f`'s
//! coefficients. In `K[X]/(g)` the class of `X` represents `1/alpha`, so
//! its ring inverse represents `alpha` itself; lifting that inverse to a
//! polynomial `h` of degree below `d` gives `f(h(1/alpha)) = f(alpha) = 0`,
//! which is exactly the statement `g | f(h(X))`. Since
//! `deg f(h(X)) = d(d-1) >= 2d` for `d >= 3`, the quotient is nonconstant
//! and `f(h(X))` is genuinely reducible.
//!
//! Two independent routes compute `h`:
//!
//! * [`build_h_explicit`] — the closed form `h = (1 - g_raw(X)) / X`, where
//!   `g_raw` is the unnormalized reversal of monic `f` (constant term 1, so
//!   the division is exact);
//! * [`build_h_modular_inverse`] — the Bezout coefficient of `X` in
//!   `xgcd(X, g)`, i.e. the inverse of `X` mod `g`.
//!
//! Both are the unique inverse of `X` mod `g` of degree below `d`, so they
//! must agree coefficient for coefficient; [`certify_reducible`] computes
//! both and treats any disagreement as an internal error.

use crate::certificate::{CertificateChecks, HypothesisMode, SubstitutionCertificate};
use crate::error::{Error, Result};
use crate::irreducibility::{
    self, q_irreducibility_certificate, rabin_irreducible_fp_seeded, Status, Witness,
};
use crate::poly::Polynomial;

/// Whether [`certify_reducible`] must prove the irreducibility hypothesis or
/// may take the caller's word for it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ValidationMode {
    /// Decide irreducibility first; refuse reducible or undecided inputs.
    Strict,
    /// Skip the irreducibility check. The certificate's divisibility and
    /// degree checks hold regardless; it is labeled `assumed` so consumers
    /// know the hypothesis was asserted, not proven.
    Assume,
}

/// Knobs for the validation step: how many primes the `Q` certifier may try
/// and the seed for reducibility-witness extraction over `F_p`.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub prime_budget: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { prime_budget: irreducibility::DEFAULT_PRIME_BUDGET, seed: 0 }
    }
}

/// The monic reciprocal of `f`: reverse the coefficients and normalize. For
/// irreducible `f` with root `alpha`, this is the minimal polynomial of
/// `1/alpha`, of the same degree `d`.
pub fn reciprocal_g(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        // 0 is a root, so f was not irreducible of degree >= 2 — and the
        // reversal would silently drop the degree.
        return Err(Error::ZeroConstantTerm);
    }
    f.reverse()?.monic()
}

/// The closed-form substitution `h = (1 - g_raw(X)) / X` for monic `f`,
/// where `g_raw` is the plain coefficient reversal of `f`. `g_raw` has
/// constant term 1, so the division is exact and `deg h = d - 1`.
pub fn build_h_explicit(f: &Polynomial) -> Result<Polynomial> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: Some(d), required: 3 });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let g_raw = f.reverse()?;
    let numerator = Polynomial::one(f.field()).sub(&g_raw)?;
    let (h, rem) = numerator.divrem(&Polynomial::x(f.field()))?;
    debug_assert!(rem.is_zero(), "1 - g_raw must vanish at 0");
    Ok(h)
}

/// The substitution as the inverse of `X` in `K[X]/(g)`: the Bezout
/// coefficient `u` from `u*X + v*g = 1`, reduced mod `g`. Agrees with
/// [`build_h_explicit`] on every valid input.
pub fn build_h_modular_inverse(f: &Polynomial) -> Result<Polynomial> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: Some(d), required: 3 });
    }
    let g = reciprocal_g(f)?;
    let x = Polynomial::x(f.field());
    let (gcd, u, _) = x.xgcd(&g)?;
    if !gcd.is_one_polynomial() {
        // Only possible if g(0) = 0, i.e. f was not irreducible after all.
        return Err(Error::NotCoprime);
    }
    Ok(u.divrem(&g)?.1)
}

/// Runs the full construction and returns a verified certificate:
/// `f(h(X)) = g * cofactor` with both factors nonconstant.
///
/// In [`ValidationMode::Strict`] the irreducibility hypothesis is checked
/// first — exactly over `F_p`, and by the sound certifier over `Q`, where an
/// `Unknown` verdict is refused (use [`ValidationMode::Assume`] to proceed
/// on caller authority). Every certificate check is asserted before
/// returning, so a non-error result is already verified.
pub fn certify_reducible(
    f: &Polynomial,
    validate: ValidationMode,
) -> Result<SubstitutionCertificate> {
    certify_reducible_with(f, validate, &CertifyOptions::default())
}

/// [`certify_reducible`] with explicit prime budget and witness seed.
pub fn certify_reducible_with(
    f: &Polynomial,
    validate: ValidationMode,
    options: &CertifyOptions,
) -> Result<SubstitutionCertificate> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: Some(d), required: 3 });
    }
    if validate == ValidationMode::Strict {
        let verdict = if f.field().is_rationals() {
            q_irreducibility_certificate(f, options.prime_budget)?
        } else {
            rabin_irreducible_fp_seeded(f, options.seed)?
        };
        match verdict.status() {
            Status::Irreducible => {}
            Status::Reducible => {
                let witness = match verdict.witness() {
                    Some(Witness::Factor(w)) => Some(Box::new(w.clone())),
                    _ => None,
                };
                return Err(Error::NotIrreducible { witness });
            }
            Status::Unknown => return Err(Error::UnknownIrreducibility),
        }
    }

    let f_monic = f.monic()?;
    let g = reciprocal_g(&f_monic)?;
    let h = build_h_explicit(&f_monic)?;
    let h_modular = build_h_modular_inverse(f)?;
    if h != h_modular {
        return Err(Error::Internal("the two h constructions disagree"));
    }
    let fh = f.compose(&h)?;
    let (cofactor, rem) = fh.divrem(&g)?;
    if !rem.is_zero() {
        return Err(Error::Internal("g does not divide f(h(X))"));
    }
    let checks = CertificateChecks {
        divides: rem.is_zero(),
        deg_h_eq_dm1: h.degree() == Some(d - 1),
        deg_h_ge2: h.degree().is_some_and(|dh| dh >= 2),
        deg_fh_eq_d_dm1: fh.degree() == Some(d * (d - 1)),
        deg_fh_ge_2d: fh.degree().is_some_and(|df| df >= 2 * d),
        cofactor_nontrivial: cofactor.degree().is_some_and(|dc| dc >= 1),
    };
    if !checks.all_true() {
        return Err(Error::Internal("emitted certificate failed its own checks"));
    }
    Ok(SubstitutionCertificate {
        field: f.field(),
        f: f.clone(),
        f_monic,
        g,
        h,
        fh,
        cofactor,
        d,
        checks,
        hypothesis_mode: match validate {
            ValidationMode::Strict => HypothesisMode::Strict,
            ValidationMode::Assume => HypothesisMode::Assumed,
        },
    })
}

/// An element of the quotient ring `K[X]/(modulus)`, kept as its canonical
/// remainder. When the modulus is irreducible this is the field `K(alpha)`
/// in which the construction's root identity `f(h(1/alpha)) = 0` lives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueClass {
    modulus: Polynomial,
    rep: Polynomial,
}

impl ResidueClass {
    /// Wraps `rep` as a class mod `modulus` (monic, nonconstant), reducing
    /// it to the canonical remainder.
    pub fn new(modulus: Polynomial, rep: &Polynomial) -> Result<Self> {
        if modulus.degree().is_none_or(|dm| dm < 1) {
            return Err(Error::ConstantPolynomial);
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        let rep = rep.divrem(&modulus)?.1;
        Ok(ResidueClass { modulus, rep })
    }

    /// The class of `X` — the ring's distinguished generator.
    pub fn generator(modulus: Polynomial) -> Result<Self> {
        let x = Polynomial::x(modulus.field());
        ResidueClass::new(modulus, &x)
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    /// The canonical representative, of degree below the modulus.
    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check_same_modulus(&self, rhs: &Self) -> Result<()> {
        if self.modulus == rhs.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_modulus(rhs)?;
        Ok(ResidueClass {
            modulus: self.modulus.clone(),
            rep: self.rep.add(&rhs.rep)?,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_modulus(rhs)?;
        let rep = self.rep.mul(&rhs.rep)?.divrem(&self.modulus)?.1;
        Ok(ResidueClass { modulus: self.modulus.clone(), rep })
    }

    /// Ring inverse via the extended Euclidean algorithm; fails with
    /// `NotCoprime` when the representative shares a factor with the
    /// modulus (impossible over an irreducible modulus, except for zero).
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (gcd, u, _) = self.rep.xgcd(&self.modulus)?;
        if !gcd.is_one_polynomial() {
            return Err(Error::NotCoprime);
        }
        let rep = u.divrem(&self.modulus)?.1;
        Ok(ResidueClass { modulus: self.modulus.clone(), rep })
    }

    /// Evaluates `poly` at this class (Horner in the quotient ring):
    /// the class of `poly(rep)` mod the modulus.
    pub fn eval(&self, poly: &Polynomial) -> Result<Self> {
        let rep = poly.compose(&self.rep)?.divrem(&self.modulus)?.1;
        Ok(ResidueClass { modulus: self.modulus.clone(), rep })
    }
}
