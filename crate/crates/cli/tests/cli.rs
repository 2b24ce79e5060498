use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn kitaev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kitaev"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = kitaev(&all);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), doc)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn torus_info() {
    let (code, doc) = json(&["graph", "info", "std:1,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["genus"], 1);
    assert_eq!(doc["result"]["boundary"], 1);
    assert_eq!(doc["seed"], 2024);
}

#[test]
fn graph_files_round_trip() {
    let (_, doc) = json(&["graph", "info", "std:2,1"]);
    let path = scratch("phi21.json", &doc["result"]["graph"].to_string());
    let (code, again) = json(&["graph", "info", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(again["result"], doc["result"]);
}

#[test]
fn invalid_graph_is_a_verification_failure() {
    let path = scratch("bad_graph.json", r#"{"rho": [[1, 2, 3, 4]], "cilia": [1, 3], "pt": 1}"#);
    let (code, doc) = json(&["graph", "info", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(doc["result"]["valid"], false);
}

#[test]
fn connected_sum_adds_genus() {
    let (code, doc) = json(&["graph", "sum", "std:1,0", "std:1,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["genus"], 2);
    assert_eq!(doc["result"]["boundary"], 2);
}

#[test]
fn same_seed_same_bytes() {
    let run = |seed: &str| kitaev(&["graph", "reduce", "std:2,0", "--scramble", "25", "--seed", seed]).stdout;
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
    let (code, doc) = json(&["graph", "reduce", "std:2,0", "--scramble", "25", "--seed", "7"]);
    assert_eq!(code, 0);
    let (_, standard) = json(&["graph", "info", "std:2,0"]);
    assert_eq!(doc["result"]["reduced"], standard["result"]["graph"]);
}

#[test]
fn sweedler_pairs_are_modular() {
    let (code, doc) = json(&["hopf", "pairs", "builtin:sweedler"]);
    assert_eq!(code, 0);
    let pairs = doc["result"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    assert!(pairs.iter().all(|p| p["modular"] == true));
}

#[test]
fn hopf_check_and_integrals() {
    let (code, doc) = json(&["hopf", "check", "builtin:taft:3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["axioms"], "ok");
    let (code, doc) = json(&["hopf", "integrals", "builtin:group:S3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["semisimple"], true);
    assert_eq!(doc["result"]["unimodular"], true);
}

#[test]
fn hopf_files_are_accepted() {
    let h = kitaev::hopf::builtin("sweedler").unwrap();
    let path = scratch("sweedler.json", &serde_json::to_string(&h.to_json()).unwrap());
    let (code, doc) = json(&["hopf", "pairs", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn sweedler_torus_table() {
    // The exact computation finds five trivial coinvariants on the torus, one more than the
    // reference table used by the acceptance suite; the sign row agrees.
    for pair in ["0", "1"] {
        let (code, doc) = json(&["protect", "table", "--hopf", "builtin:sweedler", "--graph", "std:1,0", "--pair", pair]);
        assert_eq!(code, 0);
        let dims: Vec<u64> = doc["result"]["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["dim"].as_u64().unwrap())
            .collect();
        assert_eq!(dims, [5, 0, 0, 2]);
    }
}

#[test]
fn compute_reports_stage_dimensions() {
    let (code, doc) = json(&[
        "protect", "compute", "--hopf", "builtin:sweedler", "--pair", "1", "--graph", "std:1,0", "--coeff", "unit-U",
    ]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["dim_bitensor"], 16);
    assert!(r["dim_cotensor"].as_u64().unwrap() >= 16);
    assert!(r["dim_tensor_over"].as_u64().unwrap() >= 16);

    let one_shot = json(&[
        "protect", "compute", "--hopf", "builtin:sweedler", "--pair", "1", "--graph", "std:1,1", "--coeff", "one-dim:h,triv",
        "--one-shot",
    ]);
    let sequential = json(&[
        "protect", "compute", "--hopf", "builtin:sweedler", "--pair", "1", "--graph", "std:1,1", "--coeff", "one-dim:h,triv",
    ]);
    assert_eq!(one_shot.1["result"]["dim_bitensor"], sequential.1["result"]["dim_bitensor"]);
}

#[test]
fn group_oracle_agrees_with_the_lattice() {
    let (_, oracle) = json(&["protect", "oracle-group", "--group", "Z2", "--genus", "1"]);
    assert_eq!(oracle["result"]["dim"], 4);
    let (_, lattice) = json(&["protect", "compute", "--hopf", "builtin:group:Z2", "--graph", "std:1,0"]);
    assert_eq!(lattice["result"]["dim_bitensor"], 4);
    let (_, s3) = json(&["protect", "oracle-group", "--group", "S3", "--genus", "2"]);
    assert_eq!(s3["result"]["dim"], 116);
}

#[test]
fn excision_of_two_tori() {
    let (code, doc) = json(&[
        "protect", "excision", "--hopf", "builtin:sweedler", "--pair", "1", "--gamma", "std:1,0", "--delta", "std:1,0",
    ]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["holds"], true);
    assert_eq!(r["dim_sum"], 25 + r["dim_cbit"].as_u64().unwrap());
}

#[test]
fn bosonisation_reduction() {
    let (code, doc) = json(&["protect", "reduce-bosonisation", "--hopf", "builtin:sweedler", "--pair", "1", "--graph", "std:1,0"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!((r["dim_coinvariant"].as_u64(), r["dim_intersection"].as_u64()), (Some(10), Some(3)));
    assert!(r["reduction"].as_array().unwrap().iter().all(|x| x["holds"] == true));
}

#[test]
fn lattice_checks_pass() {
    let (code, doc) = json(&["lattice", "verify", "--hopf", "builtin:sweedler", "--pair", "1", "--graph", "std:1,1"]);
    assert_eq!(code, 0);
    assert!(doc["result"]["checks"].as_u64().unwrap() > 0);
    let word = r#"[{"edge_reversal": 1}, {"slide": [1, 3]}, {"edge_permutation": 1}]"#;
    let (code, doc) = json(&["lattice", "move", "--hopf", "builtin:group:S3", "--graph", "std:1,1", "--word", word]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["passed"], true);
}

#[test]
fn acceptance_subset() {
    let (code, doc) = json(&["acceptance", "--only", "3,6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["passed"], 2);
    let out = kitaev(&["acceptance", "--only", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("criterion  1 FAIL"));
}

#[test]
fn input_errors_exit_with_2() {
    for args in [
        &["graph", "info", "missing.json"][..],
        &["graph", "info", "std:x,0"],
        &["hopf", "pairs", "builtin:quaternion"],
        &["protect", "compute", "--hopf", "builtin:group:Z2", "--pair", "9", "--graph", "std:1,0"],
        &["protect", "compute", "--hopf", "builtin:group:Z2", "--graph", "std:1,0", "--coeff", "one-dim:q,triv"],
        &["lattice", "move", "--hopf", "builtin:group:Z2", "--graph", "std:1,0", "--word", "[{\"jump\": 1}]"],
        &["protect", "reduce-bosonisation", "--hopf", "builtin:group:S3", "--graph", "std:1,0"],
        &["frobnicate"],
    ] {
        assert_eq!(kitaev(args).status.code(), Some(2), "{args:?}");
    }
}
