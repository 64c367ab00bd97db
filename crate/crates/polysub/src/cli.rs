//! Command-line front end.
//!
//! Five subcommands drive the library: `construct` builds a substitution
//! certificate for an irreducible `f`, `verify` re-checks a certificate
//! file from scratch, `irred` reports an irreducibility verdict, `sweep`
//! checks every monic irreducible polynomial of one degree over a prime
//! field, and `d2check` confirms that degree 2 admits no good substitution.
//!
//! Exit codes are part of the interface so shell harnesses can assert
//! failures precisely:
//!
//! | code | meaning                                                |
//! |------|--------------------------------------------------------|
//! | 0    | success                                                |
//! | 1    | bad input: parse error, unreadable or malformed file   |
//! | 2    | degree too small (the construction needs d >= 3)       |
//! | 3    | input not irreducible (a factor is printed)            |
//! | 4    | irreducibility over Q undecided; rerun with            |
//! |      | `--assume-irreducible` or a larger `--prime-budget`    |
//! | 5    | certificate verification failed (first bad check named)|
//! | 6    | sweep exceeds the size guard (`--max-size` raises it)  |

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::certificate::SubstitutionCertificate;
use crate::construction::{certify_reducible_with, CertifyOptions, ValidationMode};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::irreducibility::{
    q_irreducibility_certificate, rabin_irreducible_fp_seeded, DEFAULT_PRIME_BUDGET,
};
use crate::parse::parse_polynomial;
use crate::search::{negative_check_d2, run_sweep, DEFAULT_MAX_SIZE};

/// Build and check substitution-reducibility certificates: for an
/// irreducible polynomial f of degree d >= 3 over Q or F_p, construct h of
/// degree d - 1 such that f(h(X)) is reducible, with an independently
/// checkable divisor.
#[derive(Parser, Debug)]
#[command(name = "polysub", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct h and a divisibility certificate for an irreducible f
    Construct(ConstructArgs),
    /// Re-check a certificate file from scratch
    Verify(VerifyArgs),
    /// Report an irreducibility verdict for one polynomial
    Irred(IrredArgs),
    /// Check every monic irreducible f of one degree over F_p
    Sweep(SweepArgs),
    /// Confirm that no irreducible quadratic admits a good substitution
    #[command(name = "d2check")]
    D2check(D2CheckArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Coefficient field: Q, or F<p> for prime p (e.g. F2, F101)
    #[arg(long)]
    field: FieldSpec,
    /// The polynomial f, e.g. "x^3 - 2" or "[-2,0,0,1]"
    f: String,
    /// Assert irreducibility of f instead of checking it
    #[arg(long)]
    assume_irreducible: bool,
    /// Reduction primes the Q irreducibility certifier may try
    #[arg(long, value_name = "N", default_value_t = DEFAULT_PRIME_BUDGET)]
    prime_budget: usize,
    /// Seed for reducibility-witness extraction
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the canonical JSON certificate instead of the summary
    #[arg(long)]
    json: bool,
    /// Also write the canonical JSON certificate to PATH
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Path to a certificate JSON file
    file: PathBuf,
}

#[derive(Args, Debug)]
struct IrredArgs {
    /// Coefficient field: Q, or F<p> for prime p
    #[arg(long)]
    field: FieldSpec,
    /// The polynomial to test
    f: String,
    /// Reduction primes the Q irreducibility certifier may try
    #[arg(long, value_name = "N", default_value_t = DEFAULT_PRIME_BUDGET)]
    prime_budget: usize,
    /// Seed for reducibility-witness extraction over F_p
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the verdict as canonical JSON
    #[arg(long)]
    json: bool,
    /// Also write the JSON verdict to PATH
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Prime field F<p> to sweep (Q is not enumerable)
    #[arg(long)]
    field: FieldSpec,
    /// Degree d >= 3 of the monic irreducible polynomials to sweep
    #[arg(long, value_name = "D")]
    degree: usize,
    /// Size guard: refuse sweeps with p^(2d) > N
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_SIZE)]
    max_size: u128,
    /// Print the report as canonical JSON instead of the summary
    #[arg(long)]
    json: bool,
    /// Write the report to PATH: CSV by default, JSON with --json
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct D2CheckArgs {
    /// Prime field F<p> to check
    #[arg(long)]
    field: FieldSpec,
    /// Size guard for the quadratic enumeration
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_SIZE)]
    max_size: u128,
    /// Print the result as canonical JSON
    #[arg(long)]
    json: bool,
    /// Also write the JSON result to PATH
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Parses `std::env::args`, dispatches, and returns the process exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage errors exit 1 (clap's default of 2 would collide with
            // the degree-too-small code); --help and --version exit 0.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// The documented mapping from error variants to exit codes.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::DegreeTooSmall { .. } => 2,
        Error::NotIrreducible { .. } => 3,
        Error::UnknownIrreducibility => 4,
        Error::CheckFailed { .. } => 5,
        Error::SweepTooLarge { .. } => 6,
        _ => 1,
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Irred(args) => cmd_irred(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::D2check(args) => cmd_d2check(args),
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<()> {
    let f = parse_polynomial(&args.f, args.field)?;
    let mode = if args.assume_irreducible { ValidationMode::Assume } else { ValidationMode::Strict };
    let options = CertifyOptions { prime_budget: args.prime_budget, seed: args.seed };
    let certificate = certify_reducible_with(&f, mode, &options)?;
    let json = certificate.to_json_string();
    if let Some(path) = &args.out {
        write_file(path, &json)?;
    }
    if args.json {
        print!("{json}");
    } else {
        print!("{}", certificate.human_summary());
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let text = read_file(&args.file)?;
    let certificate = SubstitutionCertificate::from_json_str(&text)?;
    certificate.verify()?;
    println!(
        "ok: certificate verified over {} (d = {}, g divides f(h(X)))",
        certificate.field, certificate.d
    );
    Ok(())
}

fn cmd_irred(args: IrredArgs) -> Result<()> {
    let f = parse_polynomial(&args.f, args.field)?;
    let verdict = if args.field.is_rationals() {
        q_irreducibility_certificate(&f, args.prime_budget)?
    } else {
        rabin_irreducible_fp_seeded(&f, args.seed)?
    };
    if let Some(path) = &args.out {
        write_file(path, &verdict.to_json_string())?;
    }
    if args.json {
        print!("{}", verdict.to_json_string());
    } else {
        println!("{}", verdict.describe());
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let p = args.field.modulus().ok_or(Error::WrongField { expected: "prime" })?;
    let report = run_sweep(p, args.degree, args.max_size)?;
    if let Some(path) = &args.out {
        let contents = if args.json { report.to_json_string() } else { report.to_csv() };
        write_file(path, &contents)?;
    }
    if args.json {
        print!("{}", report.to_json_string());
    } else {
        print!("{}", report.human_summary());
    }
    Ok(())
}

fn cmd_d2check(args: D2CheckArgs) -> Result<()> {
    let p = args.field.modulus().ok_or(Error::WrongField { expected: "prime" })?;
    let holds = negative_check_d2(p, args.max_size)?;
    // serde_json's map keeps keys sorted, matching the other JSON outputs.
    let mut json = serde_json::json!({ "holds": holds, "p": p }).to_string();
    json.push('\n');
    if let Some(path) = &args.out {
        write_file(path, &json)?;
    }
    if args.json {
        print!("{json}");
    } else {
        println!("{holds}");
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)
        .map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn args_parse_for_every_subcommand() {
        let cli = Cli::try_parse_from(["polysub", "construct", "--field", "Q", "x^3-2", "--json"])
            .unwrap();
        match cli.command {
            Command::Construct(a) => {
                assert!(a.json);
                assert!(!a.assume_irreducible);
                assert_eq!(a.prime_budget, DEFAULT_PRIME_BUDGET);
                assert_eq!(a.seed, 0);
                assert_eq!(a.f, "x^3-2");
            }
            other => panic!("wrong command: {other:?}"),
        }

        let cli = Cli::try_parse_from(["polysub", "verify", "cert.json"]).unwrap();
        assert!(matches!(cli.command, Command::Verify(_)));

        let cli = Cli::try_parse_from(["polysub", "irred", "--field", "F7", "x^2+1"]).unwrap();
        assert!(matches!(cli.command, Command::Irred(_)));

        let cli = Cli::try_parse_from([
            "polysub", "sweep", "--field", "F3", "--degree", "3", "--max-size", "100000000",
        ])
        .unwrap();
        match cli.command {
            Command::Sweep(a) => {
                assert_eq!(a.degree, 3);
                assert_eq!(a.max_size, 100_000_000);
            }
            other => panic!("wrong command: {other:?}"),
        }

        let cli = Cli::try_parse_from(["polysub", "d2check", "--field", "F5"]).unwrap();
        assert!(matches!(cli.command, Command::D2check(_)));
    }

    #[test]
    fn field_flag_rejects_garbage() {
        assert!(Cli::try_parse_from(["polysub", "irred", "--field", "Z9", "x"]).is_err());
        assert!(Cli::try_parse_from(["polysub", "irred", "--field", "F4", "x"]).is_err());
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(exit_code(&Error::Parse { pos: 0, msg: String::new() }), 1);
        assert_eq!(exit_code(&Error::Malformed(String::new())), 1);
        assert_eq!(exit_code(&Error::DegreeTooSmall { degree: Some(2), required: 3 }), 2);
        assert_eq!(exit_code(&Error::NotIrreducible { witness: None }), 3);
        assert_eq!(exit_code(&Error::UnknownIrreducibility), 4);
        assert_eq!(exit_code(&Error::CheckFailed { check: "divides" }), 5);
        assert_eq!(exit_code(&Error::SweepTooLarge { size: 1, limit: 0 }), 6);
    }
}
