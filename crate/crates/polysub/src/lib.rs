//! Exact construction of reducible polynomial substitutions.
//!
//! Given an irreducible polynomial `f` of degree `d >= 3` over `F_p` or `Q`,
//! this crate builds a substitution polynomial `h` of degree `d - 1` such
//! that the composition `f(h(X))` is reducible, and packages the witness
//! divisor together with the composition into a certificate that anyone can
//! re-check with a single polynomial division.
//!
//! The key objects:
//!
//! * [`field::FieldSpec`] / [`field::FieldElement`] — exact arithmetic in
//!   `F_p` (odd or even prime `p`) and in `Q` (arbitrary-precision
//!   rationals).
//! * [`poly::Polynomial`] — dense univariate polynomials with exact
//!   division, composition, gcd and modular exponentiation.
//! * [`irreducibility`] — a complete irreducibility decision procedure over
//!   `F_p` and a sound (irreducible/reducible/unknown) certifier over `Q`.
//! * [`construction`] — the substitution builder itself, in two
//!   independently implemented variants that must agree.
//! * [`certificate::SubstitutionCertificate`] — the serialized, re-checkable
//!   output.
//! * [`search`] — exhaustive small-field sweeps that corroborate the
//!   construction statistically and demonstrate that degree 2 genuinely
//!   fails.
//!
//! ```
//! use polysub::construction::{certify_reducible, ValidationMode};
//! use polysub::field::FieldSpec;
//! use polysub::poly::Polynomial;
//!
//! let q = FieldSpec::rationals();
//! let f = Polynomial::from_integers(q, &[-2, 0, 0, 1]); // x^3 - 2
//! let cert = certify_reducible(&f, ValidationMode::Strict)?;
//! assert_eq!(cert.h, Polynomial::from_integers(q, &[0, 0, 2])); // 2x^2
//! assert!(cert.fh.is_divisible_by(&cert.g)?);
//! # Ok::<(), polysub::error::Error>(())
//! ```

pub mod certificate;
pub mod cli;
pub mod construction;
pub mod error;
pub mod field;
pub mod guide;
pub mod irreducibility;
pub mod parse;
pub mod poly;
pub mod search;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
