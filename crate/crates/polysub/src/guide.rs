//! The user guide, compiled.
//!
//! Each module below embeds one chapter of the mdbook under `book/src/`
//! as its doc comment, so every ```rust snippet in the book runs as a
//! doc-test. `cargo test --doc` therefore keeps the guide honest: a
//! chapter whose example drifts from the library fails the build.
//!
//! Read the rendered version with `mdbook build book`, or browse these
//! modules in `cargo doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/irreducibility.md")]
pub mod irreducibility {}

#[doc = include_str!("../../../book/src/construction.md")]
pub mod construction {}

#[doc = include_str!("../../../book/src/certificates.md")]
pub mod certificates {}

#[doc = include_str!("../../../book/src/search.md")]
pub mod search {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

/// The workspace README's example, doc-tested for the same reason.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
