//! Irreducibility decisions over `F_p` and sound certification over `Q`.
//!
//! Over a prime field the question is decidable and [`rabin_irreducible_fp`]
//! decides it exactly, producing a checked factor witness in the reducible
//! case. Over `Q` no cheap complete procedure exists, so
//! [`q_irreducibility_certificate`] layers three sound strategies (rational
//! roots, Eisenstein, reduction mod p) and honestly answers
//! [`Status::Unknown`] when none of them concludes — it never guesses.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Polynomial;

/// Number of good-reduction primes the `Q` certifier tries by default.
pub const DEFAULT_PRIME_BUDGET: usize = 25;

/// Trial-division bound for integer factorization in the rational-root and
/// Eisenstein strategies.
const SIEVE_LIMIT: u64 = 1_000_000;

/// A residue with no prime factor below [`SIEVE_LIMIT`] is itself prime if
/// it is below the square of the limit.
const CERTIFIED_PRIME_LIMIT: u64 = SIEVE_LIMIT * SIEVE_LIMIT;

/// Caps on the rational-root candidate enumeration; exceeding either marks
/// the scan incomplete (the verdict then degrades to `Unknown`, never to a
/// wrong answer).
const DIVISOR_CAP: usize = 512;
const CANDIDATE_CAP: usize = 10_000;

/// How hard equal-degree splitting tries before giving up. Each attempt
/// succeeds with probability at least 1/2, so reaching the bound means the
/// input was not a product of distinct equal-degree irreducibles.
const SPLIT_ATTEMPTS: usize = 256;

/// Outcome of an irreducibility question.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Irreducible,
    Reducible,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Irreducible => "irreducible",
            Status::Reducible => "reducible",
            Status::Unknown => "unknown",
        })
    }
}

/// Evidence backing a verdict: a checked divisor for reducibility, the rule
/// that certified irreducibility, or a note on why nothing concluded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Nontrivial divisor of the input, re-checked by exact division when
    /// the verdict is built.
    Factor(Polynomial),
    /// The complete rational-root search came back empty (conclusive for
    /// degree 2 and 3 only).
    NoRationalRoot,
    /// Eisenstein's criterion holds at this prime.
    EisensteinPrime(u64),
    /// The reduction mod this prime keeps the degree and is irreducible.
    ReductionPrime(u64),
    /// No strategy reached a conclusion; records which ones were tried.
    Inconclusive(String),
}

/// An irreducibility verdict together with its evidence.
///
/// The constructor for the reducible case re-verifies the witness, so a
/// `Reducible` verdict always carries a divisor `w` with
/// `1 <= deg w < deg f` and `w | f`. `Unknown` only ever arises over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrreducibilityVerdict {
    status: Status,
    witness: Option<Witness>,
}

impl IrreducibilityVerdict {
    fn irreducible(witness: Option<Witness>) -> Self {
        IrreducibilityVerdict { status: Status::Irreducible, witness }
    }

    fn unknown(detail: String) -> Self {
        IrreducibilityVerdict {
            status: Status::Unknown,
            witness: Some(Witness::Inconclusive(detail)),
        }
    }

    /// Builds a `Reducible` verdict, re-checking that `factor` really is a
    /// nontrivial divisor of `f`.
    fn reducible(f: &Polynomial, factor: Polynomial) -> Result<Self> {
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        let ok_degree = factor.degree().is_some_and(|dw| dw >= 1 && dw < n);
        if !ok_degree || !f.is_divisible_by(&factor)? {
            return Err(Error::Internal("factor witness failed its own division check"));
        }
        Ok(IrreducibilityVerdict { status: Status::Reducible, witness: Some(Witness::Factor(factor)) })
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn is_irreducible(&self) -> bool {
        self.status == Status::Irreducible
    }

    /// One-line human rendering, e.g. `reducible (factor x + 2)`.
    pub fn describe(&self) -> String {
        match (&self.status, &self.witness) {
            (Status::Irreducible, None) => "irreducible".to_string(),
            (Status::Irreducible, Some(Witness::NoRationalRoot)) => {
                "irreducible (no rational root; conclusive for degree <= 3)".to_string()
            }
            (Status::Irreducible, Some(Witness::EisensteinPrime(p))) => {
                format!("irreducible (Eisenstein at {p})")
            }
            (Status::Irreducible, Some(Witness::ReductionPrime(p))) => {
                format!("irreducible (reduction mod {p} is irreducible)")
            }
            (Status::Reducible, Some(Witness::Factor(w))) => format!("reducible (factor {w})"),
            (Status::Unknown, Some(Witness::Inconclusive(detail))) => format!("unknown ({detail})"),
            (status, _) => status.to_string(),
        }
    }

    /// JSON form `{"status": "...", "witness": ...}` with a tagged witness
    /// object (or null).
    pub fn to_json_value(&self) -> Value {
        let witness = match &self.witness {
            None => Value::Null,
            Some(Witness::Factor(w)) => json!({"kind": "factor", "factor": w.coeff_strings()}),
            Some(Witness::NoRationalRoot) => json!({"kind": "no_rational_root"}),
            Some(Witness::EisensteinPrime(p)) => json!({"kind": "eisenstein_prime", "p": p}),
            Some(Witness::ReductionPrime(p)) => json!({"kind": "reduction_prime", "p": p}),
            Some(Witness::Inconclusive(detail)) => {
                json!({"kind": "inconclusive", "detail": detail})
            }
        };
        json!({"status": self.status.to_string(), "witness": witness})
    }

    /// Canonical single-line JSON (sorted keys, trailing newline).
    pub fn to_json_string(&self) -> String {
        let mut s = self.to_json_value().to_string();
        s.push('\n');
        s
    }
}

/// Exact irreducibility decision over `F_p` (Rabin's test), with the default
/// witness seed. `f` of degree `n` is irreducible iff `X^(p^n) = X (mod f)`
/// and `gcd(X^(p^(n/q)) - X, f) = 1` for every prime `q | n`.
pub fn rabin_irreducible_fp(f: &Polynomial) -> Result<IrreducibilityVerdict> {
    rabin_irreducible_fp_seeded(f, 0)
}

/// [`rabin_irreducible_fp`] with an explicit seed for the randomized factor
/// extraction in the reducible case. The same seed always yields the same
/// witness.
pub fn rabin_irreducible_fp_seeded(f: &Polynomial, seed: u64) -> Result<IrreducibilityVerdict> {
    match frobenius_scan(f)? {
        Scan::Irreducible => Ok(IrreducibilityVerdict::irreducible(None)),
        Scan::ProperFactor(w) => IrreducibilityVerdict::reducible(f, w),
        Scan::ReducibleNoWitness => {
            let w = find_factor(f, seed)?;
            IrreducibilityVerdict::reducible(f, w)
        }
    }
}

/// Boolean fast path of [`rabin_irreducible_fp`]: same decision, no factor
/// extraction. This is what exhaustive sweeps call in their inner loop.
pub fn is_irreducible_fp(f: &Polynomial) -> Result<bool> {
    Ok(matches!(frobenius_scan(f)?, Scan::Irreducible))
}

enum Scan {
    Irreducible,
    /// A Frobenius checkpoint handed us a proper factor for free.
    ProperFactor(Polynomial),
    /// Reducible, but the witness still has to be dug out.
    ReducibleNoWitness,
}

/// Shared core of the Rabin test: one ladder of Frobenius iterates
/// `X^(p^k) mod f`, with gcd checkpoints at `k = n/q` for each prime
/// `q | n` and the fixed-point check at `k = n`.
fn frobenius_scan(f: &Polynomial) -> Result<Scan> {
    let p = f.field().modulus().ok_or(Error::WrongField { expected: "F_p" })?;
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(Scan::Irreducible);
    }
    let x = Polynomial::x(f.field());
    let pb = BigUint::from(p);
    let checkpoints: Vec<usize> = distinct_prime_factors(n).into_iter().map(|q| n / q).collect();
    let mut t = x.clone();
    for k in 1..=n {
        t = t.pow_mod(&pb, f)?;
        if checkpoints.contains(&k) {
            let g0 = t.sub(&x)?.gcd(f)?;
            match g0.degree() {
                Some(dg) if dg >= 1 && dg < n => return Ok(Scan::ProperFactor(g0)),
                Some(dg) if dg >= n => return Ok(Scan::ReducibleNoWitness),
                _ => {}
            }
        }
    }
    if t == x {
        Ok(Scan::Irreducible)
    } else {
        Ok(Scan::ReducibleNoWitness)
    }
}

/// Extracts one nontrivial monic factor of a *reducible* polynomial over
/// `F_p`. The caller must already know `f` is reducible; on an irreducible
/// input this fails with an internal error rather than looping.
///
/// The path is the classical one: root at 0, then gcd with the derivative
/// (with the p-th-power special case when the derivative vanishes), then
/// distinct-degree gcds, and finally equal-degree splitting seeded by
/// `seed` so that witnesses are reproducible.
pub fn find_factor(f: &Polynomial, seed: u64) -> Result<Polynomial> {
    let p = f.field().modulus().ok_or(Error::WrongField { expected: "F_p" })?;
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Err(Error::Internal("degree-1 polynomials have no nontrivial factor"));
    }
    let f = f.monic()?;
    if f.constant_term().is_zero() {
        return Ok(Polynomial::x(f.field()));
    }
    let fd = f.derivative();
    if fd.is_zero() {
        // All exponents are multiples of p, so f = v(X)^p with v built from
        // every p-th coefficient (p-th roots are the identity on F_p).
        let coeffs = (0..=n / p as usize).map(|i| f.coeff(i * p as usize)).collect();
        return Polynomial::new(f.field(), coeffs);
    }
    let c = f.gcd(&fd)?;
    if c.degree().is_some_and(|dg| dg >= 1) {
        // gcd(f, f') = f is impossible here: f' is nonzero of lower degree.
        return Ok(c);
    }
    // f is squarefree. Scan gcd(X^(p^k) - X, f) for the smallest k with a
    // nontrivial factor; a full hit means all factors share degree k.
    let x = Polynomial::x(f.field());
    let pb = BigUint::from(p);
    let mut w = x.clone();
    for k in 1..=n / 2 {
        w = w.pow_mod(&pb, &f)?;
        let g0 = w.sub(&x)?.gcd(&f)?;
        match g0.degree() {
            Some(dg) if dg >= 1 && dg < n => return Ok(g0),
            Some(dg) if dg >= n => return equal_degree_split(&f, k, p, seed),
            _ => {}
        }
    }
    Err(Error::Internal("no factor found; the input was irreducible"))
}

/// Cantor–Zassenhaus splitting of a squarefree product of at least two
/// distinct irreducibles, all of degree `k`.
fn equal_degree_split(f: &Polynomial, k: usize, p: u64, seed: u64) -> Result<Polynomial> {
    let field = f.field();
    let n = f.degree().expect("nonzero input");
    let one = Polynomial::one(field);
    let proper = |g: &Polynomial| g.degree().is_some_and(|dg| dg >= 1 && dg < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPLIT_ATTEMPTS {
        let coeffs: Vec<FieldElement> = (0..n)
            .map(|_| field.element_from_i64(rng.gen_range(0..p) as i64))
            .collect();
        let t = Polynomial::new(field, coeffs)?;
        if t.degree().is_none_or(|dt| dt < 1) {
            continue;
        }
        let shared = t.gcd(f)?;
        if proper(&shared) {
            return Ok(shared);
        }
        let u = if p == 2 {
            // Trace map T + T^2 + ... + T^(2^(k-1)): takes values in F_2 on
            // each factor, so its gcd with f splits the factors.
            let mut acc = t.clone();
            let mut sq = t.clone();
            for _ in 1..k {
                sq = sq.mul(&sq)?.divrem(f)?.1;
                acc = acc.add(&sq)?;
            }
            acc
        } else {
            // T^((p^k - 1)/2) is a square-ness indicator (+1/-1) on each
            // factor; subtracting 1 isolates the +1 part.
            let exp = (BigUint::from(p).pow(k as u32) - BigUint::one()) >> 1;
            t.pow_mod(&exp, f)?.sub(&one)?
        };
        let g0 = u.gcd(f)?;
        if proper(&g0) {
            return Ok(g0);
        }
    }
    Err(Error::Internal("equal-degree splitting failed to converge"))
}

/// True iff `f` has no repeated factor: gcd with the formal derivative is
/// constant. Nonconstant polynomials with zero derivative (p-th powers in
/// characteristic p) report false; constants report true, the zero
/// polynomial false.
pub fn squarefree_check(f: &Polynomial) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => {
            let fd = f.derivative();
            if fd.is_zero() {
                return false;
            }
            f.gcd(&fd).is_ok_and(|g| g.degree() == Some(0))
        }
    }
}

/// Sound, incomplete irreducibility certification over `Q`.
///
/// Strategies in order, first conclusion wins:
///
/// 1. rational-root scan (any root gives a linear factor at any degree;
///    an exhaustive miss certifies irreducibility for degree 2 and 3);
/// 2. Eisenstein's criterion at the primes of the constant term's radical;
/// 3. reduction modulo up to `prime_budget` good primes (ascending, skipping
///    primes that divide the leading coefficient): one irreducible reduction
///    certifies irreducibility.
///
/// Everything inconclusive returns [`Status::Unknown`] — notably `x^4 + 1`,
/// which is irreducible but reducible modulo every prime.
pub fn q_irreducibility_certificate(
    f: &Polynomial,
    prime_budget: usize,
) -> Result<IrreducibilityVerdict> {
    if !f.field().is_rationals() {
        return Err(Error::WrongField { expected: "Q" });
    }
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(IrreducibilityVerdict::irreducible(None));
    }
    if f.constant_term().is_zero() {
        return IrreducibilityVerdict::reducible(f, Polynomial::x(f.field()));
    }
    let prim = primitive_integer_form(f);
    let (factors0, rem0) = factor_magnitude(prim[0].magnitude());
    let (factors_n, rem_n) = factor_magnitude(prim[n].magnitude());

    // (i) rational roots.
    let scan = rational_root_scan(f, &factors0, &factors_n)?;
    let root_scan_complete = scan.complete && rem0.is_none() && rem_n.is_none();
    if let Some(x0) = scan.root {
        let witness = Polynomial::new(f.field(), vec![x0.neg(), f.field().one()])?;
        return IrreducibilityVerdict::reducible(f, witness);
    }
    if n <= 3 && root_scan_complete {
        return Ok(IrreducibilityVerdict::irreducible(Some(Witness::NoRationalRoot)));
    }

    // (ii) Eisenstein at primes dividing the constant term exactly once.
    for &(q, e) in &factors0 {
        if e != 1 || divisible(&prim[n], q) {
            continue;
        }
        if (1..n).all(|i| divisible(&prim[i], q)) {
            return Ok(IrreducibilityVerdict::irreducible(Some(Witness::EisensteinPrime(q))));
        }
    }

    // (iii) reduction mod p over the first good primes.
    let mut used = 0usize;
    for &p in small_primes() {
        if used >= prime_budget {
            break;
        }
        if divisible(&prim[n], p) {
            continue;
        }
        used += 1;
        let fs = FieldSpec::prime(p)?;
        let coeffs = prim.iter().map(|c| fs.element_from_bigint(c)).collect();
        let reduced = Polynomial::new(fs, coeffs)?;
        if is_irreducible_fp(&reduced)? {
            return Ok(IrreducibilityVerdict::irreducible(Some(Witness::ReductionPrime(p))));
        }
    }

    let root_note = if !root_scan_complete {
        "rational-root scan incomplete (coefficients too hard to factor within bounds)"
    } else {
        "no rational root (conclusive only up to degree 3)"
    };
    Ok(IrreducibilityVerdict::unknown(format!(
        "{root_note}; no Eisenstein prime; no irreducible reduction among the first {used} good primes (budget {prime_budget})"
    )))
}

struct RootScan {
    root: Option<FieldElement>,
    complete: bool,
}

/// Tests every candidate `±r/s` with `r` dividing the constant term and `s`
/// dividing the leading coefficient of the primitive integer form, up to the
/// enumeration caps.
fn rational_root_scan(
    f: &Polynomial,
    factors0: &[(u64, u32)],
    factors_n: &[(u64, u32)],
) -> Result<RootScan> {
    let (rs, c0) = divisors_capped(factors0);
    let (ss, cn) = divisors_capped(factors_n);
    let mut complete = c0 && cn;
    let mut tested = 0usize;
    'outer: for r in &rs {
        for s in &ss {
            if tested >= CANDIDATE_CAP {
                complete = false;
                break 'outer;
            }
            tested += 2;
            let num = BigInt::from(r.clone());
            let den = BigInt::from(s.clone());
            for cand in [
                f.field().element_from_fraction(&num, &den)?,
                f.field().element_from_fraction(&(-&num), &den)?,
            ] {
                if f.eval(&cand)?.is_zero() {
                    return Ok(RootScan { root: Some(cand), complete });
                }
            }
        }
    }
    Ok(RootScan { root: None, complete })
}

/// Clears denominators and divides by the content, preserving the degree:
/// the result is an integer coefficient vector with trivial common factor
/// and the same roots and factorization shape as `f`.
fn primitive_integer_form(f: &Polynomial) -> Vec<BigInt> {
    let rats: Vec<_> = f
        .coeffs()
        .iter()
        .map(|c| c.rational().expect("rational field element").clone())
        .collect();
    let mut den_lcm = BigInt::one();
    for r in &rats {
        den_lcm = den_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den_lcm / r.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn divisible(n: &BigInt, p: u64) -> bool {
    (n % BigInt::from(p)).is_zero()
}

/// Trial division by the sieve primes. Returns `(prime, exponent)` pairs and
/// `None` when the factorization is complete; a leftover cofactor above
/// [`CERTIFIED_PRIME_LIMIT`] (which could be composite) comes back as
/// `Some(leftover)` instead of being guessed at.
fn factor_magnitude(n: &BigUint) -> (Vec<(u64, u32)>, Option<BigUint>) {
    debug_assert!(!n.is_zero());
    let mut m = n.clone();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        if m.is_one() {
            break;
        }
        if let Some(m64) = m.to_u64() {
            if p * p > m64 {
                break;
            }
        }
        let pb = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    if m.is_one() {
        return (factors, None);
    }
    // m has no prime factor below the sieve limit, so below the limit's
    // square it must itself be prime (and then with exponent 1 in n).
    match m.to_u64() {
        Some(m64) if m64 < CERTIFIED_PRIME_LIMIT => {
            factors.push((m64, 1));
            (factors, None)
        }
        _ => (factors, Some(m)),
    }
}

/// All divisors from a `(prime, exponent)` factorization, truncated at
/// [`DIVISOR_CAP`]; the flag reports whether the list is exhaustive.
fn divisors_capped(factors: &[(u64, u32)]) -> (Vec<BigUint>, bool) {
    let mut divs = vec![BigUint::one()];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pe = BigUint::one();
        for _ in 0..=e {
            for d in &divs {
                if next.len() >= DIVISOR_CAP {
                    return (next, false);
                }
                next.push(d * &pe);
            }
            pe *= p;
        }
        divs = next;
    }
    (divs, true)
}

/// The primes up to [`SIEVE_LIMIT`], sieved once on first use.
fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = SIEVE_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::with_capacity(80_000);
        for i in 2..=limit {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
        primes
    })
}

fn distinct_prime_factors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}
