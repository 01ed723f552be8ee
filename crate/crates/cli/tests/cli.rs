use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn nilext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilext")).args(args).env_remove("NILEXT_THREADS").output().expect("run nilext")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_accepts_catalog_file() {
    let out = nilext(&["check", &data("b5_06.alg")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bicommutative  yes"));
    assert!(text.contains("one-generated  yes"));
}

#[test]
fn check_reports_violations() {
    let out = nilext(&["check", &data("not_bicommutative.alg")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("(e1 e1) e2 != (e1 e2) e1"));
}

#[test]
fn parse_error_exits_2_with_position() {
    let out = nilext(&["check", &data("half_gf2.alg")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5, column 1"), "{err}");
    assert!(err.contains("division by zero"), "{err}");
}

#[test]
fn parametric_file_needs_binding() {
    assert_eq!(nilext(&["check", &data("family.alg")]).status.code(), Some(2));
    let out = nilext(&["check", &data("family.alg"), "--set", "lambda=2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn cohomology_of_b4_03() {
    let out = nilext(&["cohomology", "B4_03"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim Z2 = 5, dim B2 = 3, dim H2 = 2"));
}

#[test]
fn extend_reproduces_b5_06() {
    let out = nilext(&["extend", "B4_03", "--cocycle", "D(1,2) + D(4,1)", "--name", "B5_06"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read_to_string(data("b5_06.alg")).unwrap();
    assert_eq!(stdout(&out), expected);
}

#[test]
fn extend_rejects_non_cocycle() {
    let out = nilext(&["extend", "B4_03", "--cocycle", "D(2,3)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbits_over_gf2() {
    let out = nilext(&["orbits", "B4_03", "--field", "GF(2)", "--ext-dim", "1", "--threads", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("subspaces: 3, in T_s: 2, orbits: 2"), "{text}");
}

#[test]
fn iso_exit_codes() {
    let yes = nilext(&["iso", &data("b5_06.alg"), "B5_06"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("yes"));
    let no = nilext(&["iso", "B5_06", "B5_07"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).starts_with("no"));
}

#[test]
fn iso_over_prime_field_with_bindings() {
    let out = nilext(&[
        "iso", "B5_02", "B5_03", "--field", "GF(7)", "--set", "lambda=2", "--set2", "lambda=4", "--set2", "mu=2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn autos_counts() {
    let out = nilext(&["autos", "B4_03", "--field", "GF(3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("54 automorphisms"));
}

#[test]
fn decompose_round_trip() {
    let out = nilext(&["decompose", "B5_06"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cocycle D(1,2) + D(4,1)"), "{text}");
}

#[test]
fn catalog_list_and_export() {
    let out = nilext(&["catalog", "list", "--dim", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 12);
    let export = nilext(&["catalog", "export", "B5_06"]);
    assert_eq!(stdout(&export), std::fs::read_to_string(data("b5_06.alg")).unwrap());
    assert_eq!(nilext(&["catalog", "show", "B9_99"]).status.code(), Some(2));
}

#[test]
fn constraint_violation_is_an_error() {
    assert_eq!(nilext(&["check", "B6_16", "--set", "lambda=0"]).status.code(), Some(2));
}

#[test]
fn oracle_dim_2() {
    let out = nilext(&["oracle", "--dim", "2", "--cross-validate"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_scopes() {
    let out = nilext(&["verify-paper", "--scope", "catalog,provenance"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().last().unwrap().contains("0 failed"));
    assert_eq!(nilext(&["verify-paper", "--scope", "bogus"]).status.code(), Some(2));
    assert_eq!(nilext(&["verify-paper", "--scope", "catalog", "--primes", "8"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_threads() {
    let one = nilext(&["verify-paper", "--scope", "cohomology", "--threads", "1"]);
    let two = nilext(&["verify-paper", "--scope", "cohomology", "--threads", "2"]);
    assert_eq!(stdout(&one), stdout(&two));
    assert_eq!(one.status.code(), Some(1));
}
