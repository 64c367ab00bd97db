//! Error type shared across the crate.

use std::fmt;

use crate::field::FieldSpec;
use crate::poly::Polynomial;

/// Everything that can go wrong in field, polynomial, construction,
/// certificate and search code. The CLI maps variants onto its exit codes.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Operands belong to different coefficient fields.
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    /// Division or inversion of zero.
    DivisionByZero,
    /// Inversion failed because the element shares a factor with the
    /// modulus. Over a prime field this means the modulus was composite.
    NotInvertible,
    /// `FieldSpec::prime` was given a composite or out-of-range modulus.
    NotPrime(u64),
    /// Prime moduli must satisfy `2 <= p < 2^31`.
    PrimeTooLarge(u64),
    /// A literal that does not denote an element of the requested field,
    /// e.g. the fraction `1/2` under `F7`.
    FieldLiteral { literal: String, field: FieldSpec },
    /// Text input rejected at byte offset `pos`.
    Parse { pos: usize, msg: String },
    /// The operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// `xgcd(0, 0)` has no well-defined result.
    BothZero,
    /// Irreducibility queries need a nonconstant polynomial.
    ConstantPolynomial,
    /// The operation is only defined over the other kind of field.
    WrongField { expected: &'static str },
    /// The construction needs `degree(f) >= required`.
    DegreeTooSmall { degree: Option<usize>, required: usize },
    /// The explicit construction works on monic input; normalize first.
    NotMonic,
    /// `f(0) = 0`, so `X` divides `f` and `f` was not irreducible of
    /// degree >= 2.
    ZeroConstantTerm,
    /// A residue had no inverse modulo the quotient-ring modulus.
    NotCoprime,
    /// Mixed moduli in quotient-ring arithmetic.
    ModulusMismatch,
    /// Strict validation found a factor of the input.
    NotIrreducible { witness: Option<Box<Polynomial>> },
    /// Strict validation over Q could not decide irreducibility.
    UnknownIrreducibility,
    /// An enumeration or sweep exceeds the size guard.
    SweepTooLarge { size: u128, limit: u128 },
    /// A named certificate check failed during re-verification.
    CheckFailed { check: &'static str },
    /// A certificate file that does not follow the expected schema.
    Malformed(String),
    /// A file could not be read or written.
    Io { path: String, msg: String },
    /// An internal contradiction; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch { expected, found } => {
                write!(f, "field mismatch: expected {expected}, found {found}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotInvertible => write!(f, "element is not invertible (composite modulus?)"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::PrimeTooLarge(p) => write!(f, "prime modulus {p} out of range (need 2 <= p < 2^31)"),
            Error::FieldLiteral { literal, field } => {
                write!(f, "literal '{literal}' is not an element of {field}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at offset {pos}: {msg}"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::BothZero => write!(f, "gcd(0, 0) is undefined"),
            Error::ConstantPolynomial => write!(f, "polynomial must be nonconstant"),
            Error::WrongField { expected } => write!(f, "operation requires a {expected} field"),
            Error::DegreeTooSmall { degree, required } => {
                let shown = match degree {
                    Some(d) => d.to_string(),
                    None => "-inf (zero polynomial)".to_string(),
                };
                write!(
                    f,
                    "degree {shown} is too small: the construction requires an irreducible \
                     polynomial of degree d >= {required}"
                )
            }
            Error::NotMonic => write!(f, "polynomial must be monic (apply monic normalization first)"),
            Error::ZeroConstantTerm => write!(
                f,
                "constant term is zero, so X divides the input and it is not irreducible"
            ),
            Error::NotCoprime => write!(f, "residue shares a factor with the modulus"),
            Error::ModulusMismatch => write!(f, "residue classes have different moduli"),
            Error::NotIrreducible { witness } => match witness {
                Some(w) => write!(f, "polynomial is not irreducible: divisible by {w}"),
                None => write!(f, "polynomial is not irreducible"),
            },
            Error::UnknownIrreducibility => write!(
                f,
                "could not certify irreducibility over Q; pass --assume-irreducible to proceed"
            ),
            Error::SweepTooLarge { size, limit } => {
                write!(f, "sweep size {size} exceeds the guard {limit} (raise with --max-size)")
            }
            Error::CheckFailed { check } => write!(f, "certificate check '{check}' failed"),
            Error::Malformed(msg) => write!(f, "malformed certificate: {msg}"),
            Error::Io { path, msg } => write!(f, "cannot access '{path}': {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
