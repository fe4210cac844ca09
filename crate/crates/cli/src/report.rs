//! JSON payloads and their text renderings.
//!
//! Payloads are `serde_json::Value`s, whose maps keep keys sorted, so the
//! same input always prints the same bytes.

use std::fmt::Write;

use finring::axioms::{check_ring_axioms, AxiomMode};
use finring::classify::{is_local, is_reduced, units};
use finring::decide::{
    is_a_ring, is_strong_a_ring, zero_divisor_set, Method, PropertyReport, Witness,
};
use finring::expr::{elaborate, parse_ring_expr};
use finring::harness::{
    generate_corpus, run_verification, search_duplication_converse, CorpusSpec, TheoremId,
};
use finring::ideal::all_ideals;
use finring::{Caps, Error, Ring};
use serde_json::{json, Value};

/// Element lists longer than this are reported by count only.
const LIST_LIMIT: usize = 64;

pub const CONVENTION_NOTE: &str = "0 counted as zero-divisor";

fn build(expr: &str) -> Result<Ring, Error> {
    let ring = elaborate(&parse_ring_expr(expr)?)?;
    if ring.is_zero_ring() {
        return Err(Error::ZeroRing);
    }
    Ok(ring)
}

fn witness_json(ring: &Ring, report: &PropertyReport) -> Value {
    match &report.witness {
        Witness::Failure { generators } => {
            let mut shown: Vec<String> = generators.iter().map(|&g| ring.display(g)).collect();
            shown.sort();
            json!({ "kind": "failure", "generators": shown })
        }
        Witness::Success { annihilated } => {
            let entries: Vec<Value> = annihilated
                .iter()
                .map(|a| {
                    json!({
                        "ideal": a.ideal.to_expr(ring).to_string(),
                        "ideal_size": a.ideal.len(),
                        "annihilator": ring.display(a.annihilator),
                    })
                })
                .collect();
            json!({ "kind": "success", "annihilated": entries })
        }
    }
}

fn property_json(ring: &Ring, report: &PropertyReport) -> Value {
    json!({
        "verdict": report.verdict,
        "method": report.method,
        "witness": witness_json(ring, report),
        "ideals_examined": report.ideals_examined,
    })
}

pub fn analyze(expr: &str, method: Method, caps: &Caps) -> Result<Value, Error> {
    let ring = build(expr)?;
    let zd = zero_divisor_set(&ring)?;
    let mut zero_divisors = json!({ "count": zd.len() });
    if zd.len() <= LIST_LIMIT {
        zero_divisors["list"] = zd.iter().map(|&x| ring.display(x)).collect();
    }
    let a = is_a_ring(&ring, method, caps)?;
    let strong = is_strong_a_ring(&ring, method, caps)?;
    Ok(json!({
        "ring": ring.label(),
        "size": ring.size(),
        "units_count": units(&ring)?.len(),
        "zero_divisors": zero_divisors,
        "ideals_count": all_ideals(&ring, caps)?.len(),
        "is_local": is_local(&ring)?,
        "is_reduced": is_reduced(&ring)?,
        "is_A": property_json(&ring, &a),
        "is_strong_A": property_json(&ring, &strong),
        "convention_note": CONVENTION_NOTE,
        "caps": caps,
    }))
}

fn witness_text(w: &Value) -> String {
    match w["kind"].as_str() {
        Some("failure") => {
            let gens: Vec<&str> = w["generators"]
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(Value::as_str)
                .collect();
            format!("fails on ideal({})", gens.join(", "))
        }
        _ => {
            let parts: Vec<String> = w["annihilated"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|a| {
                    format!(
                        "{} killed by {}",
                        a["ideal"].as_str().unwrap_or(""),
                        a["annihilator"].as_str().unwrap_or("")
                    )
                })
                .collect();
            parts.join("; ")
        }
    }
}

pub fn analysis_text(v: &Value) -> String {
    if let Some(err) = v.get("error") {
        return format!(
            "{}: error: {}\n",
            v["input"].as_str().unwrap_or(""),
            err.as_str().unwrap_or("")
        );
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} ({} elements)",
        v["ring"].as_str().unwrap_or(""),
        v["size"]
    );
    let _ = writeln!(
        s,
        "  units: {}, zero-divisors: {} ({CONVENTION_NOTE})",
        v["units_count"], v["zero_divisors"]["count"]
    );
    let _ = writeln!(
        s,
        "  ideals: {}, local: {}, reduced: {}",
        v["ideals_count"], v["is_local"], v["is_reduced"]
    );
    for (key, name) in [("is_A", "(A)"), ("is_strong_A", "strong (A)")] {
        let p = &v[key];
        let _ = writeln!(
            s,
            "  {name}: {} [{}] {}",
            p["verdict"],
            p["method"].as_str().unwrap_or(""),
            witness_text(&p["witness"])
        );
    }
    s
}

pub fn check(
    expr: &str,
    samples: Option<usize>,
    seed: u64,
    caps: &Caps,
) -> Result<(Value, bool), Error> {
    let ring = build(expr)?;
    let mode = samples.map_or(AxiomMode::Full, AxiomMode::Sampled);
    let report = check_ring_axioms(&ring, mode, caps, seed);
    let passed = report.passed();
    let mut v = serde_json::to_value(&report).expect("axiom reports serialize");
    v["passed"] = json!(passed);
    v["seed"] = json!(seed);
    Ok((v, passed))
}

pub fn check_text(v: &Value) -> String {
    let mut s = format!(
        "{}: axioms {}\n",
        v["ring"].as_str().unwrap_or(""),
        if v["passed"] == true { "hold" } else { "FAIL" }
    );
    for r in v["results"].as_array().into_iter().flatten() {
        let _ = writeln!(
            s,
            "  {:<24} {}",
            r["axiom"].as_str().unwrap_or(""),
            if r["passed"] == true {
                "ok".to_string()
            } else {
                format!("counterexample {}", r["counterexample"])
            }
        );
    }
    s
}

pub fn corpus_listing(spec: &CorpusSpec, caps: &Caps) -> Result<Value, Error> {
    let corpus = generate_corpus(spec, caps)?;
    let rings: Vec<Value> = corpus
        .iter()
        .map(|r| json!({ "ring": r.label(), "size": r.size() }))
        .collect();
    Ok(json!({ "spec": spec, "count": rings.len(), "rings": rings }))
}

pub fn corpus_text(v: &Value) -> String {
    let mut s = String::new();
    for r in v["rings"].as_array().into_iter().flatten() {
        let _ = writeln!(
            s,
            "{:>5}  {}",
            r["size"].as_u64().unwrap_or(0),
            r["ring"].as_str().unwrap_or("")
        );
    }
    let _ = writeln!(s, "{} rings", v["count"]);
    s
}

pub fn verify(
    ids: &[TheoremId],
    spec: &CorpusSpec,
    method: Method,
    caps: &Caps,
) -> Result<(Value, bool), Error> {
    let report = run_verification(ids, spec, method, caps)?;
    let holds = report.holds();
    let failures = report.failures().count();
    let mut v = serde_json::to_value(&report).expect("verification reports serialize");
    v["summary"] = json!({
        "holds": holds,
        "instances": report.results.len(),
        "failures": failures,
    });
    Ok((v, holds))
}

pub fn verify_text(v: &Value) -> String {
    let mut s = String::new();
    let mut per_check = std::collections::BTreeMap::<&str, (usize, usize)>::new();
    for r in v["results"].as_array().into_iter().flatten() {
        let e = per_check
            .entry(r["theorem"].as_str().unwrap_or(""))
            .or_default();
        e.0 += 1;
        if r["holds"] != true {
            e.1 += 1;
            let _ = writeln!(
                s,
                "FAIL {} {}: {}",
                r["theorem"].as_str().unwrap_or(""),
                r["instance"].as_str().unwrap_or(""),
                r["counterexample"]
            );
        }
    }
    for (id, (n, bad)) in &per_check {
        let analog = v["finite_analogs"][*id].as_str().unwrap_or("");
        let _ = writeln!(s, "{id:<12} {n:>5} instances, {bad} failures  ({analog})");
    }
    for ring in v["axiom_failures"].as_array().into_iter().flatten() {
        let _ = writeln!(s, "FAIL axioms {}", ring.as_str().unwrap_or(""));
    }
    let _ = writeln!(
        s,
        "corpus: {} rings; {}",
        v["corpus_size"],
        if v["summary"]["holds"] == true {
            "all hold"
        } else {
            "FAILURES"
        }
    );
    s
}

pub fn search(spec: &CorpusSpec, method: Method, caps: &Caps) -> Result<(Value, bool), Error> {
    let report = search_duplication_converse(spec, method, caps)?;
    let mut v = serde_json::to_value(&report).expect("search reports serialize");
    v["outcome"] = json!(report.outcome());
    v["note"] = json!(
        "corpus observation: finite strong (A) rings are local, and duplicating a local ring along a proper ideal gives a local ring"
    );
    Ok((v, report.found()))
}

pub fn search_text(v: &Value) -> String {
    let mut s = format!(
        "{}: {} pairs (R, I) examined, {} with strong (A) base, {} with I = R excluded\n",
        v["outcome"].as_str().unwrap_or(""),
        v["instances_examined"],
        v["strong_base_instances"],
        v["improper_excluded"]
    );
    for h in v["hits"].as_array().into_iter().flatten() {
        let _ = writeln!(s, "  hit: {}", h.as_str().unwrap_or(""));
    }
    s
}
