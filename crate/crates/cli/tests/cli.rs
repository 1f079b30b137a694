//! Golden-file and exit-code tests for the `kleinscc` binary.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;
use serde_json::Value;

pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("classify", &["classify", "ab^3ab^3"]),
    ("classify_nonmember", &["classify", "abAB"]),
    ("classify_table", &["--format", "table", "classify", "b^-1a^2b"]),
    ("act", &["act", "tb", "a"]),
    ("act_composite", &["act", "y tb-", "ab^2"]),
    ("canonicalize", &["canonicalize", "ab^3"]),
    ("canonicalize_nonmember", &["canonicalize", "abab^2"]),
    ("rep", &["rep", "aBAB", "--symbolic"]),
    ("rep_rational", &["rep", "ab^2", "--alpha", "-3/2", "--beta", "5"]),
    ("enumerate", &["enumerate", "--max-len", "3"]),
    ("enumerate_table", &["enumerate", "--max-len", "4", "--format", "table"]),
    ("kernel_witness", &["kernel-witness"]),
    ("verify", &["verify", "--max-n", "10", "--max-len", "10", "--max-power", "5", "--alpha", "2", "--beta", "3"]),
];

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("kleinscc").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN_CASES {
        let (code, first, _) = run(args);
        assert_eq!(code, 0, "{name} exited with {code}");
        let (_, second, _) = run(args);
        assert_eq!(first, second, "{name}: output differs between runs");
        let path = golden_path(name);
        if update {
            fs::write(&path, &first).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {path:?}"));
        assert_eq!(first, expected, "{name}: output differs from {path:?}");
    }
}

#[test]
fn classify_json_shape() {
    let (_, out, _) = run(&["classify", "aBAB"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["family"], "boundary");
    assert_eq!(v["n"], Value::Null);
    assert_eq!(v["topo"]["separating"], true);
    let pieces = v["topo"]["pieces"].as_array().unwrap();
    assert_eq!(pieces.iter().map(|p| p["euler"].as_i64().unwrap()).sum::<i64>(), -1);

    let (code, out, _) = run(&["classify", "abAB"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["family"], Value::Null);
    assert_eq!(v["topo"], Value::Null);
}

#[test]
fn act_applies_rightmost_first() {
    let (_, out, _) = run(&["act", "tb", "a"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"], "ab");
    let (_, out, _) = run(&["--format", "table", "act", "tb y", "a"]);
    assert_eq!(out, "b^-1a^-1\n");
}

#[test]
fn rep_terms_are_triples() {
    let (_, out, _) = run(&["rep", "ab", "--symbolic"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["symbolic"]["d1"], serde_json::json!([[1, 1, "1"]]));
    assert_eq!(v["numeric"]["d1"], "6/1");
    assert_eq!(v["projective_identity"], false);

    let (_, out, _) = run(&["rep", "abABabbABaBAbbaBBA", "--symbolic"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["projective_identity"], true);
    assert_eq!(v["symbolic"]["u"], serde_json::json!([]));
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["classify", "abx"][..],
        &["act", "tb foo", "a"],
        &["rep", "a", "--alpha", "0"],
        &["rep", "a", "--beta", "1/0"],
        &["enumerate", "--max-len", "13"],
        &["enumerate"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = run(&["classify", "ab^x"]);
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn verify_rejects_dependent_parameters() {
    let (code, _, err) =
        run(&["verify", "--max-n", "2", "--max-len", "4", "--max-power", "2", "--alpha", "4", "--beta", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("alpha"), "{err}");
}
