//! Binary-level contract tests: exit codes, output shapes, file writing,
//! and the construct -> verify round trip.

use std::path::Path;
use std::process::{Command, Output};

fn polysub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polysub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn polysub_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polysub"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn construct_prints_the_worked_example() {
    let out = polysub(&["construct", "--field", "Q", "x^3-2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for needle in [
        "g          = x^3 - 1/2",
        "h          = 2*x^2",
        "f(h(X))    = 8*x^6 - 2",
        "cofactor   = 8*x^3 + 4",
        "identity   f(h(X)) = g * cofactor",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }
}

#[test]
fn construct_json_is_the_canonical_certificate() {
    let out = polysub(&["construct", "--field", "F2", "x^3+x+1", "--json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // single line, parseable by the strict certificate reader
    assert_eq!(text.lines().count(), 1);
    let cert = polysub::certificate::SubstitutionCertificate::from_json_str(&text).unwrap();
    cert.verify().unwrap();
    assert_eq!(cert.cofactor, cert.f, "cofactor equals f for x^3+x+1 over F2");
}

#[test]
fn construct_and_verify_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = polysub_in(dir.path(), &["construct", "--field", "Q", "x^3-2", "--out", "cert.json"]);
    assert_eq!(code(&out), 0);

    let on_disk = std::fs::read_to_string(dir.path().join("cert.json")).unwrap();
    let json = stdout(&polysub(&["construct", "--field", "Q", "x^3-2", "--json"]));
    assert_eq!(on_disk, json, "--out writes exactly the --json bytes");

    let verify = polysub_in(dir.path(), &["verify", "cert.json"]);
    assert_eq!(code(&verify), 0, "stderr: {}", stderr(&verify));
    assert!(stdout(&verify).starts_with("ok:"));
}

#[test]
fn parse_errors_exit_1() {
    for args in [
        &["construct", "--field", "Q", "x^^3"][..],
        &["construct", "--field", "Q", "[1, 2"][..],
        &["construct", "--field", "F7", "x^3 + 1/2"][..], // fraction under F_p
        &["irred", "--field", "F4", "x"][..],             // 4 is not prime
        &["irred", "--field", "Z9", "x"][..],
        &["sweep", "--field", "Q", "--degree", "3"][..],  // sweeps need F_p
        &["bogus"][..],
        &["construct"][..],                               // missing required args
    ] {
        let out = polysub(args);
        assert_eq!(code(&out), 1, "args {args:?}, stderr: {}", stderr(&out));
    }
}

#[test]
fn degree_too_small_exits_2_citing_the_hypothesis() {
    let out = polysub(&["construct", "--field", "Q", "x^2+1"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("d >= 3"),
        "message should cite the degree hypothesis: {}",
        stderr(&out)
    );

    let sweep = polysub(&["sweep", "--field", "F2", "--degree", "2"]);
    assert_eq!(code(&sweep), 2);
}

#[test]
fn reducible_input_exits_3_with_a_witness() {
    let out = polysub(&["construct", "--field", "F2", "x^3+1"]);
    assert_eq!(code(&out), 3);
    assert!(
        stderr(&out).contains("divisible by x + 1"),
        "witness factor should be printed: {}",
        stderr(&out)
    );

    let q = polysub(&["construct", "--field", "Q", "x^3-1"]);
    assert_eq!(code(&q), 3);
    assert!(stderr(&q).contains("divisible by"));
}

#[test]
fn undecided_irreducibility_exits_4_unless_assumed() {
    // x^4 + 1 is irreducible over Q but reducible mod every prime, so the
    // certifier cannot decide it.
    let out = polysub(&["construct", "--field", "Q", "x^4+1"]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("--assume-irreducible"));

    let assumed = polysub(&["construct", "--field", "Q", "x^4+1", "--assume-irreducible", "--json"]);
    assert_eq!(code(&assumed), 0);
    assert!(stdout(&assumed).contains("\"hypothesis_mode\":\"assumed\""));
}

#[test]
fn verify_failures_exit_5_and_name_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout(&polysub(&["construct", "--field", "Q", "x^3-2", "--json"]));

    let tampered_h = json.replace("\"h\":[\"0\",\"0\",\"2\"]", "\"h\":[\"0\",\"1\",\"2\"]");
    assert_ne!(tampered_h, json);
    let path = dir.path().join("h.json");
    std::fs::write(&path, &tampered_h).unwrap();
    let out = polysub(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 5);
    assert!(stderr(&out).contains("'divides'"), "stderr: {}", stderr(&out));

    let tampered_d = json.replace("\"d\":3", "\"d\":4");
    let path = dir.path().join("d.json");
    std::fs::write(&path, &tampered_d).unwrap();
    let out = polysub(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 5);
    assert!(stderr(&out).contains("'d_matches_degree'"), "stderr: {}", stderr(&out));
}

#[test]
fn verify_rejects_malformed_or_missing_files_with_1() {
    let dir = tempfile::tempdir().unwrap();
    let json = stdout(&polysub(&["construct", "--field", "Q", "x^3-2", "--json"]));

    let missing_key = json.replace("\"d\":3,", "");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, &missing_key).unwrap();
    let out = polysub(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("malformed"));

    std::fs::write(&path, "not json at all").unwrap();
    assert_eq!(code(&polysub(&["verify", path.to_str().unwrap()])), 1);

    let gone = dir.path().join("nonexistent.json");
    assert_eq!(code(&polysub(&["verify", gone.to_str().unwrap()])), 1);
}

#[test]
fn sweep_too_large_exits_6_and_max_size_raises_the_guard() {
    let out = polysub(&["sweep", "--field", "F7", "--degree", "5"]);
    assert_eq!(code(&out), 6);
    assert!(stderr(&out).contains("--max-size"));

    // (3,3) fits only once the guard is raised past 3^6 = 729
    let blocked = polysub(&["sweep", "--field", "F3", "--degree", "3", "--max-size", "500"]);
    assert_eq!(code(&blocked), 6);
    let allowed = polysub(&["sweep", "--field", "F3", "--degree", "3", "--max-size", "1000"]);
    assert_eq!(code(&allowed), 0);
}

#[test]
fn sweep_writes_csv_by_default_and_json_with_the_flag() {
    let dir = tempfile::tempdir().unwrap();

    let out = polysub_in(dir.path(), &["sweep", "--field", "F2", "--degree", "3", "--out", "report.csv"]);
    assert_eq!(code(&out), 0);
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,d,f,num_h_total,num_h_reducible,constructed_h_found"));
    assert_eq!(lines.next(), Some("2,3,\"[1,0,1,1]\",6,3,true"));
    assert_eq!(lines.next(), Some("2,3,\"[1,1,0,1]\",6,3,true"));
    assert_eq!(lines.next(), None);

    let out = polysub_in(
        dir.path(),
        &["sweep", "--field", "F2", "--degree", "3", "--json", "--out", "report.json"],
    );
    assert_eq!(code(&out), 0);
    let json = std::fs::read_to_string(dir.path().join("report.json")).unwrap();
    assert_eq!(json, stdout(&out), "--json --out writes the stdout bytes");
    assert!(json.contains("\"num_irreducible\":2"));
    assert!(!json.contains("elapsed"), "timings must not leak into the report");
}

#[test]
fn irred_reports_verdicts_with_exit_0() {
    let irreducible = polysub(&["irred", "--field", "F2", "x^3+x+1"]);
    assert_eq!(code(&irreducible), 0);
    assert_eq!(stdout(&irreducible).trim(), "irreducible");

    let reducible = polysub(&["irred", "--field", "F5", "x^2+1", "--json"]);
    assert_eq!(code(&reducible), 0);
    assert!(stdout(&reducible).contains("\"status\":\"reducible\""));

    let unknown = polysub(&["irred", "--field", "Q", "x^4+1"]);
    assert_eq!(code(&unknown), 0);
    assert!(stdout(&unknown).starts_with("unknown"));

    let eisenstein = polysub(&["irred", "--field", "Q", "x^3-2"]);
    assert_eq!(code(&eisenstein), 0);
    assert!(stdout(&eisenstein).contains("irreducible"));
}

#[test]
fn d2check_prints_the_boolean() {
    let out = polysub(&["d2check", "--field", "F5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "true");

    let json = polysub(&["d2check", "--field", "F2", "--json"]);
    assert_eq!(code(&json), 0);
    assert_eq!(stdout(&json), "{\"holds\":true,\"p\":2}\n");
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&polysub(&["--help"])), 0);
    assert_eq!(code(&polysub(&["--version"])), 0);
    assert_eq!(code(&polysub(&["construct", "--help"])), 0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["construct", "--field", "Q", "x^3-2", "--json"][..],
        &["irred", "--field", "F7", "x^3+2x+1", "--json"][..],
        &["sweep", "--field", "F3", "--degree", "3", "--json", "--max-size", "1000"][..],
    ] {
        let a = polysub(args);
        let b = polysub(args);
        assert_eq!(code(&a), code(&b));
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}
