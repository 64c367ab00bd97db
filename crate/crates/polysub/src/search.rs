//! Brute-force ground truth over small prime fields.
//!
//! These sweeps corroborate the construction by exhaustion: for every monic
//! irreducible `f` of degree `d` over `F_p`, enumerate *all* substitution
//! candidates `h` with `1 <= deg h <= d - 1`, count how many make `f(h(X))`
//! reducible, and confirm the constructed `h` is among them. They also
//! demonstrate why the `d >= 3` hypothesis is necessary:
//! [`negative_check_d2`] shows that no irreducible quadratic admits any good
//! `h` at all.
//!
//! Everything here is deterministic: enumeration is lexicographic in the
//! ascending coefficient tuple, parallel sweeps merge in enumeration order,
//! and serialized reports exclude wall-clock timings, so identical inputs
//! produce byte-identical JSON and CSV at any worker count.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::construction::{certify_reducible_with, CertifyOptions, ValidationMode};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::irreducibility::is_irreducible_fp;
use crate::poly::Polynomial;

/// Default ceiling for enumeration (`p^d`) and sweep (`p^(2d)`) sizes.
pub const DEFAULT_MAX_SIZE: u128 = 10_000_000;

/// Per-polynomial outcome of [`count_good_h`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoodHStats {
    /// Number of candidates tried: all `h` with `1 <= deg h <= d - 1`,
    /// which is `p^d - p`.
    pub total: u64,
    /// How many made `f(h(X))` reducible.
    pub good: u64,
    /// The constructed substitution, when `d >= 3`.
    pub constructed_h: Option<Polynomial>,
    /// Whether the constructed `h` landed in the good set (measured by
    /// re-testing its composition, not assumed).
    pub constructed_found: Option<bool>,
}

/// One sweep row: an irreducible `f` with its good-`h` counts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepRecord {
    pub f: Polynomial,
    pub num_h_total: u64,
    pub num_h_reducible: u64,
    pub constructed_h_found: bool,
}

/// Results of an exhaustive sweep over all monic irreducibles of degree `d`
/// over `F_p`, in enumeration order.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub p: u64,
    pub d: usize,
    pub records: Vec<SweepRecord>,
    /// Wall-clock time; reported in the human summary only, never in the
    /// serialized forms, which must be byte-stable.
    pub elapsed: Duration,
}

/// Number of monic irreducible polynomials of degree `n` over `F_p`, by the
/// Gauss necklace formula `(1/n) * sum over m | n of mu(m) * p^(n/m)`.
/// Intended for desk-scale parameters; panics if `p^n` overflows.
pub fn necklace_count(p: u64, n: usize) -> u128 {
    assert!(n >= 1, "degree must be positive");
    let mut sum: i128 = 0;
    for m in 1..=n {
        if !n.is_multiple_of(m) {
            continue;
        }
        let mu = mobius(m);
        if mu == 0 {
            continue;
        }
        let term = (p as i128)
            .checked_pow((n / m) as u32)
            .expect("necklace count overflow");
        sum = sum.checked_add(mu as i128 * term).expect("necklace count overflow");
    }
    debug_assert!(sum > 0 && sum % n as i128 == 0);
    (sum / n as i128) as u128
}

fn mobius(m: usize) -> i32 {
    let mut m = m;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn pow_u128(p: u64, e: u32) -> u128 {
    (p as u128).checked_pow(e).unwrap_or(u128::MAX)
}

/// All monic irreducible polynomials of degree `d` over `F_p`, filtered from
/// the `p^d` monic candidates in lexicographic order of the ascending
/// coefficient tuple. Guarded by `p^d <= max_size`.
pub fn enumerate_monic_irreducibles(p: u64, d: usize, max_size: u128) -> Result<Vec<Polynomial>> {
    let field = FieldSpec::prime(p)?;
    if d == 0 {
        return Err(Error::DegreeTooSmall { degree: Some(0), required: 1 });
    }
    let size = pow_u128(p, d as u32);
    if size > max_size {
        return Err(Error::SweepTooLarge { size, limit: max_size });
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; d + 1];
    coeffs[d] = 1;
    for i in 0..size {
        // digits of i in base p, most significant digit first, as the
        // ascending coefficients a_0 .. a_(d-1)
        let mut m = i;
        for j in (0..d).rev() {
            coeffs[j] = (m % p as u128) as i64;
            m /= p as u128;
        }
        let f = Polynomial::from_integers(field, &coeffs);
        if is_irreducible_fp(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Exhausts every substitution candidate for one irreducible `f` over `F_p`:
/// all `h` with `1 <= deg h <= d - 1`, good meaning `f(h(X))` is not
/// irreducible. For `d >= 3` the constructed `h` is built and re-tested too.
/// The caller vouches for the irreducibility of `f` (sweeps filter first).
pub fn count_good_h(f: &Polynomial) -> Result<GoodHStats> {
    let p = f.field().modulus().ok_or(Error::WrongField { expected: "F_p" })?;
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        other => return Err(Error::DegreeTooSmall { degree: other, required: 2 }),
    };
    let field = f.field();
    let mut total = 0u64;
    let mut good = 0u64;
    let mut coeffs = vec![0i64; d];
    for e in 1..=d - 1 {
        let lower = pow_u128(p, e as u32);
        for lead in 1..p {
            for i in 0..lower {
                let mut m = i;
                for j in (0..e).rev() {
                    coeffs[j] = (m % p as u128) as i64;
                    m /= p as u128;
                }
                coeffs[e] = lead as i64;
                let h = Polynomial::from_integers(field, &coeffs[..=e]);
                let fh = f.compose(&h)?;
                if !is_irreducible_fp(&fh)? {
                    good += 1;
                }
                total += 1;
            }
        }
    }
    let (constructed_h, constructed_found) = if d >= 3 {
        let cert = certify_reducible_with(f, ValidationMode::Assume, &CertifyOptions::default())?;
        let found = !is_irreducible_fp(&cert.fh)?;
        (Some(cert.h), Some(found))
    } else {
        (None, None)
    };
    Ok(GoodHStats { total, good, constructed_h, constructed_found })
}

/// True iff **every** monic irreducible quadratic over `F_p` has an empty
/// good set — i.e. degree 2 really is excluded for a reason: composing with
/// a linear polynomial preserves irreducibility, and those are the only
/// candidates below degree 2.
pub fn negative_check_d2(p: u64, max_size: u128) -> Result<bool> {
    for f in enumerate_monic_irreducibles(p, 2, max_size)? {
        if count_good_h(&f)?.good != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs [`count_good_h`] over every monic irreducible of degree `d >= 3`
/// over `F_p`, in parallel but merged in enumeration order. Guarded by
/// `p^(2d) <= max_size` (each of `~p^d` polynomials scans `~p^d`
/// substitutions).
pub fn run_sweep(p: u64, d: usize, max_size: u128) -> Result<SweepReport> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: Some(d), required: 3 });
    }
    let size = pow_u128(p, 2 * d as u32);
    if size > max_size {
        return Err(Error::SweepTooLarge { size, limit: max_size });
    }
    let start = Instant::now();
    let irreducibles = enumerate_monic_irreducibles(p, d, max_size)?;
    let records = irreducibles
        .par_iter()
        .map(|f| {
            let stats = count_good_h(f)?;
            Ok(SweepRecord {
                f: f.clone(),
                num_h_total: stats.total,
                num_h_reducible: stats.good,
                constructed_h_found: stats.constructed_found.unwrap_or(false),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { p, d, records, elapsed: start.elapsed() })
}

impl SweepReport {
    pub fn num_irreducible(&self) -> usize {
        self.records.len()
    }

    pub fn all_constructed_found(&self) -> bool {
        self.records.iter().all(|r| r.constructed_h_found)
    }

    pub fn min_num_h_reducible(&self) -> u64 {
        self.records.iter().map(|r| r.num_h_reducible).min().unwrap_or(0)
    }

    pub fn total_h_reducible(&self) -> u64 {
        self.records.iter().map(|r| r.num_h_reducible).sum()
    }

    pub fn to_json_value(&self) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                json!({
                    "f": r.f.coeff_strings(),
                    "num_h_total": r.num_h_total,
                    "num_h_reducible": r.num_h_reducible,
                    "constructed_h_found": r.constructed_h_found,
                })
            })
            .collect();
        json!({
            "p": self.p,
            "d": self.d,
            "num_irreducible": self.num_irreducible() as u64,
            "records": records,
            "all_constructed_found": self.all_constructed_found(),
            "min_num_h_reducible": self.min_num_h_reducible(),
            "total_h_reducible": self.total_h_reducible(),
        })
    }

    /// Canonical single-line JSON (sorted keys, trailing newline, no
    /// timings).
    pub fn to_json_string(&self) -> String {
        let mut s = self.to_json_value().to_string();
        s.push('\n');
        s
    }

    /// One quoted row per polynomial; like the JSON form, stable across
    /// runs and worker counts.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,d,f,num_h_total,num_h_reducible,constructed_h_found\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},\"{}\",{},{},{}\n",
                self.p,
                self.d,
                r.f.bracket_string(),
                r.num_h_total,
                r.num_h_reducible,
                r.constructed_h_found
            ));
        }
        out
    }

    /// Terminal rendering, the only place the elapsed time appears.
    pub fn human_summary(&self) -> String {
        let mut out = format!(
            "sweep over F_{} at degree {}: {} monic irreducible polynomials\n",
            self.p,
            self.d,
            self.num_irreducible()
        );
        for r in &self.records {
            out.push_str(&format!(
                "  f = {:<24} h tried {:>6}   reducible {:>6}   constructed h found {}\n",
                r.f.to_string(),
                r.num_h_total,
                r.num_h_reducible,
                r.constructed_h_found
            ));
        }
        out.push_str(&format!(
            "every f has at least one good h: {}; constructed h always found: {}\n",
            self.min_num_h_reducible() >= 1,
            self.all_constructed_found()
        ));
        out.push_str(&format!("elapsed: {:.1?}\n", self.elapsed));
        out
    }
}
