use std::process::{Command, Output};

use serde_json::{json, Value};

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn payload(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn analyze_reports_every_key() {
    let out = finring(&["analyze", "Z/4"]);
    assert!(out.status.success());
    let v = payload(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "caps",
            "convention_note",
            "ideals_count",
            "is_A",
            "is_local",
            "is_reduced",
            "is_strong_A",
            "ring",
            "size",
            "units_count",
            "zero_divisors"
        ]
    );
    assert_eq!(v["is_A"]["verdict"], true);
    assert_eq!(v["is_strong_A"]["verdict"], true);
    assert_eq!(v["is_local"], true);
    assert_eq!(
        v["zero_divisors"],
        json!({ "count": 2, "list": ["0", "2"] })
    );
    assert_eq!(v["convention_note"], "0 counted as zero-divisor");
    assert_eq!(v["ideals_count"], 3);
}

#[test]
fn analyze_methods_agree() {
    for expr in [
        "product(Z/2, Z/2)",
        "dup(Z/4, ideal(2))",
        "idealize(Z/6, free(1))",
    ] {
        let fast = payload(&finring(&["analyze", expr, "--method", "fast"]));
        let oracle = payload(&finring(&["analyze", expr, "--method", "oracle"]));
        for key in ["is_A", "is_strong_A"] {
            assert_eq!(fast[key]["verdict"], oracle[key]["verdict"], "{expr} {key}");
            assert_eq!(fast[key]["witness"], oracle[key]["witness"], "{expr} {key}");
        }
    }
}

#[test]
fn canonical_ring_descriptor() {
    let v = payload(&finring(&["analyze", "dup( Z/4,ideal(2) )"]));
    assert_eq!(v["ring"], "dup(Z/4, ideal(2))");
    assert_eq!(v["size"], 8);
}

#[test]
fn large_rings_list_no_zero_divisors() {
    let v = payload(&finring(&["analyze", "product(Z/16, Z/16)"]));
    assert_eq!(v["zero_divisors"]["count"], 256 - 64);
    assert!(v["zero_divisors"].get("list").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(
        finring(&["analyze", "product(Z/2 Z/2)"]).status.code(),
        Some(2)
    );
    assert_eq!(finring(&["analyze", "Z/1"]).status.code(), Some(4));
    assert_eq!(
        finring(&["analyze", "dup(Z/4, ideal((1,1)))"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(finring(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(
        finring(&["search", "converse-3.1", "--max-size", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        finring(&["analyze", "Z/4", "--method", "magic"])
            .status
            .code(),
        Some(2)
    );
    // 2^13 elements: the ideal lattice cap is 4096
    let big = finring(&["analyze", "idealize(Z/2, free(12))"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&big.stderr).contains("cap"));
}

#[test]
fn parse_errors_are_positioned() {
    let out = finring(&["analyze", "product(Z/2 Z/2)"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:13"));
}

#[test]
fn batch_mode() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("batch.txt");
    std::fs::write(&path, "Z/4\n\n# comment\nproduct(Z/2, Z/2)\nZ/1\n").unwrap();
    let out = finring(&["analyze", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let v = payload(&out);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(results[1]["is_strong_A"]["verdict"], false);
    assert_eq!(results[2]["exit_code"], 4);
}

#[test]
fn axiom_check() {
    let out = finring(&["check", "polyquot(Z/2, [1,1,1])"]);
    assert!(out.status.success());
    let v = payload(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["mode"], "full");
    let sampled = payload(&finring(&[
        "check",
        "Z/6",
        "--samples",
        "50",
        "--seed",
        "3",
    ]));
    assert_eq!(sampled["mode"], json!({ "sampled": 50 }));
}

#[test]
fn verify_single_checks() {
    for id in [
        "thm2.2",
        "lem2.6",
        "thm3.1",
        "ex2.1",
        "coincidence",
        "reduced",
        "lem3.2",
    ] {
        let out = finring(&["verify", id, "--max-size", "8"]);
        assert!(out.status.success(), "{id}");
        let v = payload(&out);
        assert_eq!(v["summary"]["holds"], true);
        assert!(v["results"]
            .as_array()
            .unwrap()
            .iter()
            .all(|r| r["theorem"] == id));
        assert!(v["finite_analogs"][id].is_string());
    }
}

#[test]
fn verify_example_products() {
    let v = payload(&finring(&["verify", "ex2.1", "--max-size", "4"]));
    let f2 = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["instance"] == "product(Z/2, Z/2)")
        .unwrap();
    assert_eq!(f2["observations"]["A(product)"], true);
    assert_eq!(f2["observations"]["strong_A(product)"], false);
}

#[test]
fn verify_free_extensions_up_to_64() {
    let out = finring(&["verify", "thm2.2", "--max-size", "64"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn list_corpus() {
    let v = payload(&finring(&["verify", "--list-corpus", "--max-size", "8"]));
    let rings: Vec<&str> = v["rings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["ring"].as_str().unwrap())
        .collect();
    assert_eq!(v["count"], rings.len());
    assert!(rings.contains(&"dup(Z/4, ideal(2))"));
    assert!(rings.contains(&"product(Z/2, Z/2)"));
}

#[test]
fn search_smaller_bound_examines_fewer_pairs() {
    let small = finring(&["search", "converse-3.1", "--max-size", "8"]);
    assert_eq!(small.status.code(), Some(0));
    let small = payload(&small);
    let big = payload(&finring(&["search", "converse-3.1", "--max-size", "32"]));
    assert_eq!(small["outcome"], "none found");
    assert_eq!(big["outcome"], "none found");
    assert!(small["instances_examined"].as_u64() < big["instances_examined"].as_u64());
}

#[test]
fn text_output() {
    let out = finring(&["analyze", "product(Z/2, Z/2)", "--text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("strong (A): false"));
    assert!(s.contains("fails on ideal((0,1), (1,0))"));
    let out = finring(&["search", "converse-3.1", "--max-size", "8", "--text"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("none found"));
}
