use std::process::{Command, Output};

use serde_json::Value;

fn uqpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqpath")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = uqpath(args);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (code, v)
}

fn check<'a>(v: &'a Value, prefix: &str) -> &'a Value {
    v["checks"].as_array().unwrap().iter().find(|c| c["name"].as_str().unwrap().starts_with(prefix)).unwrap_or_else(|| panic!("no check {prefix}"))
}

#[test]
fn quiver_counts() {
    let (code, v) = report(&["quiver", "--type", "A2", "--n", "5"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!((r["vertices"].as_u64(), r["arrows"].as_u64(), r["components"].as_u64()), (Some(25), Some(50), Some(1)));
    assert_eq!(v["config"]["command"]["name"], "quiver");
    assert_eq!(v["instance"]["scalars"]["backend"], "modular");
}

#[test]
fn sl2_dimension_exact() {
    let (code, v) = report(&["dim", "--type", "A1", "--n", "6", "--backend", "exact"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["total"], 18);
    assert_eq!(v["results"][0]["graded"], serde_json::json!([6, 6, 6]));
}

#[test]
fn hopf_and_fourier_suites_pass() {
    let (code, v) = report(&["verify", "--type", "A2", "--n", "5", "--suite", "hopf,fourier"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    assert!(checks.iter().all(|c| c["holds"] == true));
    assert_eq!(v["instance"]["scalars"]["backend"], "exact");
}

#[test]
fn crossed_suite_reports_phi_delta() {
    let (code, v) = report(&["verify", "--type", "A2", "--n", "5", "--suite", "crossed"]);
    assert_eq!(code, 1);
    assert_eq!(check(&v, "crossed: φΔ = Δ^op")["holds"], false);
    let plain = check(&v, "crossed: φΔ = Δ on");
    assert_eq!((plain["holds"].as_bool(), plain["required"].as_bool()), (Some(true), Some(false)));
    assert_eq!(check(&v, "crossed: φ multiplicative")["holds"], true);
}

#[test]
fn complement_for_sl2() {
    let (code, v) = report(&["verify", "--type", "A1", "--n", "6", "--suite", "complement"]);
    assert_eq!(code, 0);
    let c = &v["results"][0]["complement"];
    assert_eq!((c["dim_a"].as_u64(), c["dim_b"].as_u64()), (Some(3), Some(15)));
}

#[test]
fn classification_routes() {
    let (code, v) = report(&["classify", "--type", "A3", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["verdict"], "Wild");
    assert_eq!(v["results"][0]["route"], "SeparatedQuiver");
    let (_, v) = report(&["classify", "--type", "A1", "--n", "7"]);
    assert_eq!(v["results"][0]["verdict"], "Finite");
    let (code, v) = report(&["witness", "--type", "A2", "--n", "6"]);
    assert_eq!(code, 0);
    let dims: Vec<u64> = v["results"][0].as_array().unwrap().iter().map(|w| w["dimension"]["total"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![9, 9, 5]);
}

#[test]
fn blocks_and_ext() {
    // det A2 = 3 divides 6: three blocks
    let (code, v) = report(&["blocks", "--type", "A2", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["count"], 3);
    let (code, v) = report(&["ext", "--type", "A2", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["nonzero_pairs"], 50);
    assert_eq!(check(&v, "dim Ext¹")["checked"], 625);
}

#[test]
fn a2_graded_mismatch_exits_one() {
    let (code, v) = report(&["graded", "--type", "A2", "--n", "5"]);
    assert_eq!(code, 1);
    assert_eq!(check(&v, "graded dimensions")["first_failure"], "degree 10: 325 vs 300");
}

#[test]
fn cartan_files() {
    let dir = tempfile::tempdir().unwrap();
    let named = dir.path().join("named.json");
    std::fs::write(&named, r#"{"type": "A1xA1"}"#).unwrap();
    let (code, v) = report(&["quiver", "--cartan-file", named.to_str().unwrap(), "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["components"], 4);

    let matrix = dir.path().join("matrix.json");
    std::fs::write(&matrix, r#"{"matrix": [[2, -1], [-1, 2]]}"#).unwrap();
    let (_, v) = report(&["quiver", "--cartan-file", matrix.to_str().unwrap(), "--n", "5"]);
    assert_eq!(v["instance"]["cartan"], serde_json::json!([[2, -1], [-1, 2]]));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"matrix": [[2, -1], [-1, 1]]}"#).unwrap();
    let out = uqpath(&["quiver", "--cartan-file", bad.to_str().unwrap(), "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid cartan matrix"));
}

#[test]
fn errors_are_distinct() {
    let budget = uqpath(&["quiver", "--type", "E8", "--n", "7", "--vertex-budget", "1000"]);
    let prime = uqpath(&["dim", "--type", "A1", "--n", "5", "--prime-floor", "18446744073709551000"]);
    let unknown = uqpath(&["quiver", "--type", "Q3", "--n", "5"]);
    for (out, needle) in [(budget, "budget"), (prime, "no prime"), (unknown, "unknown cartan type")] {
        assert_eq!(out.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&out.stderr).contains(needle));
    }
}

#[test]
fn reports_are_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let graph = dir.path().join("q.dot");
    for p in [&a, &b] {
        let out = uqpath(&["quiver", "--type", "A2", "--n", "6", "--out", p.to_str().unwrap(), "--emit-graph", graph.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    // the output path is part of the config, so compare with it blanked
    assert_eq!(ta.replace(a.to_str().unwrap(), ""), tb.replace(b.to_str().unwrap(), ""));
    let dot = std::fs::read_to_string(&graph).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 72);
}
