use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tfds::cli::corpus::{compare, entries, presentation, presentation_invariants};
use tfds::cli::report::sha256_hex;
use tfds::cli::{EXIT_ERROR, EXIT_OK, EXIT_UNSUPPORTED};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn path(rel: &str) -> String {
    root().join(rel).to_str().unwrap().to_string()
}

fn tfds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfds")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_reports_ranks_and_input_digest() {
    let file = path("corpus/trefoil.pres");
    let out = tfds(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v = json(&out);
    assert_eq!(v["schema"], "tfds-report/1");
    assert_eq!(v["input"]["sha256"], sha256_hex(&std::fs::read(&file).unwrap()));
    assert!(out.stdout.ends_with(b"}\n"));
    let claims = v["payload"]["claims"].as_array().unwrap();
    assert!(claims.iter().any(|c| c["statement"] == "trefoil/trefoil^(n)_H = Z"));
}

#[test]
fn level_above_cap_is_unsupported() {
    let out = tfds(&["analyze", &path("corpus/free2.pres"), "--level", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_UNSUPPORTED));
}

#[test]
fn errors_exit_one() {
    assert_eq!(tfds(&["analyze", &path("corpus/missing.pres")]).status.code(), Some(EXIT_ERROR));
    assert_eq!(tfds(&["check-map", &path("corpus/broken.map")]).status.code(), Some(EXIT_ERROR));
    let bad_ring = tfds(&["rank", &path("examples/data/int.mat"), "--ring", "reals"]);
    assert_eq!(bad_ring.status.code(), Some(EXIT_ERROR));
    assert_eq!(tfds(&["frobnicate"]).status.code(), Some(EXIT_ERROR));
}

#[test]
fn check_map_certifies_corpus_maps() {
    for name in ["noniso", "trefoil-ab", "doubling"] {
        let out = tfds(&["check-map", &path(&format!("corpus/{name}.map"))]);
        assert_eq!(out.status.code(), Some(EXIT_OK), "{name}");
        let v = json(&out);
        assert_eq!(v["payload"]["consequences"]["hypotheses_certified"], true, "{name}");
    }
}

#[test]
fn rank_over_each_ring() {
    let cases = [
        ("examples/data/int.mat", "int".to_string(), 3),
        ("examples/data/koszul.mat", "laurent:2".to_string(), 1),
        ("examples/data/fig8.mat", "laurent:1".to_string(), 1),
        ("examples/data/skew.mat", format!("skew:{}", path("examples/data/f2.tower")), 1),
    ];
    for (file, ring, rank) in cases {
        let out = tfds(&["rank", &path(file), "--ring", &ring]);
        assert_eq!(out.status.code(), Some(EXIT_OK), "{file}");
        assert_eq!(json(&out)["payload"]["rank"], rank, "{file}");
    }
    let v = json(&tfds(&["rank", &path("examples/data/int.mat"), "--ring", "int"]));
    assert_eq!(v["payload"]["invariant_factors"], serde_json::json!(["2", "6", "12"]));
}

#[test]
fn json_flag_writes_the_printed_document() {
    let dir = std::env::temp_dir().join(format!("tfds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let file = path("corpus/figure8.pres");
    let out = tfds(&["analyze", &file, "--json", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(std::fs::read(&target).unwrap(), tfds(&["analyze", &file]).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn corpus_run_passes_and_is_thread_independent() {
    let one = tfds(&["corpus", "run", "--threads", "1"]);
    let four = tfds(&["corpus", "run", "--threads", "4"]);
    assert_eq!(one.status.code(), Some(EXIT_OK));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(json(&one)["payload"]["mismatches"], serde_json::json!([]));
    let list = tfds(&["corpus", "list"]);
    assert_eq!(list.status.code(), Some(EXIT_OK));
}

#[test]
fn wrong_expectation_is_a_mismatch() {
    let entry = entries().into_iter().find(|e| e.name == "trefoil").unwrap();
    let actual = presentation_invariants(&presentation("trefoil").unwrap());
    assert!(compare(entry.name, "presentation", &entry.expected, &actual).pass);
    let mut tampered: BTreeMap<&str, String> = actual.clone();
    tampered.insert("r1", "1".to_string());
    let r = compare(entry.name, "presentation", &entry.expected, &tampered);
    assert!(!r.pass);
    assert_eq!(r.checks.iter().filter(|c| !c.pass).count(), 1);
}
