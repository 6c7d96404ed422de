//! End-to-end tests for the `parind` binary: exit codes, deterministic
//! output, and JSON round-trips into the emitting report types.

use parind_core::report::{
    CoinvariantsReport, CosetsReport, ExtReport, FiltrationCommandReport, RootsReport,
    VerifyReport, WeylReport,
};
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parind"))
}

fn write_datum(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("parind-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env("PARIND_COLOR", "never").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn cosets_example() {
    let datum = write_datum("a2.json", r#"{"type": "A2"}"#);
    let out = run(&["cosets", "--datum", datum.to_str().unwrap(), "--I", "a1", "--K", ""]);
    assert!(out.status.success());
    let rep: CosetsReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep.schema, 1);
    let words: Vec<Vec<usize>> = rep.cosets.iter().map(|c| c.word.clone()).collect();
    assert_eq!(words, vec![vec![], vec![2], vec![2, 1]]);
    let ds: Vec<u64> = rep.cosets.iter().map(|c| c.d_w).collect();
    assert_eq!(ds, vec![0, 1, 2]);
}

#[test]
fn ps_example_degrees() {
    let datum = write_datum("a1.json", r#"{"type": "A1"}"#);
    let out = run(&[
        "ps",
        "--datum",
        datum.to_str().unwrap(),
        "--I",
        "",
        "--K",
        "",
        "--chi",
        "trivial",
    ]);
    assert!(out.status.success());
    let rep: CoinvariantsReport = serde_json::from_str(&stdout(&out)).unwrap();
    let degrees: Vec<i64> = rep.degrees.iter().map(|g| g.degree).collect();
    assert_eq!(degrees, vec![0, -1]);
}

#[test]
fn verify_all_passes() {
    let datum = write_datum("b2.json", r#"{"type": "B2", "p": 5}"#);
    let out = run(&["verify", "--datum", datum.to_str().unwrap(), "--suite", "all"]);
    assert!(out.status.success(), "verify failed: {}", stdout(&out));
    let rep: VerifyReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.suites.len(), parind_core::verify::SUITE_ORDER.len());

    let text = run(&[
        "verify",
        "--datum",
        datum.to_str().unwrap(),
        "--suite",
        "cosets",
        "--format",
        "text",
    ]);
    assert!(text.status.success());
    assert!(stdout(&text).contains("PASS cosets"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let datum = write_datum("g2.json", r#"{"type": "G2", "f": 2}"#);
    let args =
        ["filtration", "--datum", datum.to_str().unwrap(), "--I", "a1", "--K", "a2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reports_round_trip() {
    let datum = write_datum("rt.json", r#"{"type": "B2", "d": [1,2], "p": 5, "f": 1}"#);
    let d = datum.to_str().unwrap();

    let out = run(&["roots", "--datum", d]);
    serde_json::from_str::<RootsReport>(&stdout(&out)).unwrap();

    let out = run(&["weyl", "--datum", d]);
    serde_json::from_str::<WeylReport>(&stdout(&out)).unwrap();

    let out = run(&["filtration", "--datum", d, "--I", "a1", "--K", "", "--mode", "concrete"]);
    let rep: FiltrationCommandReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep.mode, "concrete");

    let out = run(&["steinberg", "--datum", d, "--I", "", "--K", "a1"]);
    let parsed: CoinvariantsReport = serde_json::from_str(&stdout(&out)).unwrap();
    let re_emitted = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(re_emitted, stdout(&out));

    let out = run(&[
        "ext", "--datum", d, "--mode", "parabolic", "--I", "a1", "--K", "a2", "--r", "1",
        "--left-cuspidal", "--right-cuspidal",
    ]);
    serde_json::from_str::<ExtReport>(&stdout(&out)).unwrap();
}

#[test]
fn ext_ps_mode() {
    let datum = write_datum("gl2.json", r#"{"type": "A1", "z_dim": 2}"#);
    let d = datum.to_str().unwrap();
    let out = run(&[
        "ext",
        "--datum",
        d,
        "--mode",
        "ps",
        "--I",
        "",
        "--chi",
        "chi",
        "--chi-prime",
        "chi",
        "--r",
        "1",
        "--assume-split-torus",
        "--assume-p-odd-no-p-roots",
    ]);
    assert!(out.status.success());
    let rep: ExtReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep.prediction.rule, "ps-generic-collapse");

    // ps mode rejects a nonempty K.
    let out = run(&[
        "ext", "--datum", d, "--mode", "ps", "--I", "", "--K", "a1", "--chi", "chi",
        "--chi-prime", "chi",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_1_with_distinct_diagnostics() {
    let missing = run(&["roots", "--datum", "/nonexistent/x.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot read"));

    let datum = write_datum("err.json", r#"{"type": "A2"}"#);
    let d = datum.to_str().unwrap();

    let bad_subset = run(&["cosets", "--datum", d, "--I", "a7", "--K", ""]);
    assert_eq!(bad_subset.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad_subset.stderr).contains("out of range"));

    let no_prime = run(&["filtration", "--datum", d, "--I", "", "--K", "", "--mode", "concrete"]);
    assert_eq!(no_prime.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&no_prime.stderr).contains("odd prime"));

    let bad_spec = write_datum("bad.json", r#"{"cartan": [[2,-2],[-2,2]]}"#);
    let non_finite = run(&["roots", "--datum", bad_spec.to_str().unwrap()]);
    assert_eq!(non_finite.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&non_finite.stderr).contains("finite"));
}

#[test]
fn toml_specs_are_accepted() {
    let datum = write_datum("c3.toml", "type = \"C3\"\nf = 1\n");
    let out = run(&["roots", "--datum", datum.to_str().unwrap()]);
    assert!(out.status.success());
    let rep: RootsReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rep.positive_roots.len(), 9);
}
