use std::rc::Rc;

use anyhow::Result;
use kitaev::lattice::{ExtendedSpace, Report};
use kitaev::reps::induced_bimodule;
use serde_json::json;

use crate::inputs;
use crate::output::{fields, Output};

/// How many failures to list before summarising.
const SHOWN_FAILURES: usize = 10;

fn space(hopf: &str, pair: usize, graph: &str) -> Result<ExtendedSpace> {
    let h = inputs::hopf(hopf)?;
    let m = induced_bimodule(&h, &inputs::pair(&h, pair)?)?;
    Ok(ExtendedSpace::new(inputs::graph(graph)?, h, Rc::new(m))?)
}

fn failures_text(report: &Report) -> String {
    let mut out: String = report
        .failures
        .iter()
        .take(SHOWN_FAILURES)
        .map(|f| format!("  {f}\n"))
        .collect();
    if report.failures.len() > SHOWN_FAILURES {
        out.push_str(&format!("  … and {} more\n", report.failures.len() - SHOWN_FAILURES));
    }
    out
}

pub fn verify(hopf: &str, pair: usize, graph: &str) -> Result<Output> {
    let space = space(hopf, pair, graph)?;
    let report = space.verify_all()?;
    let json = json!({
        "total_dim": space.total_dim(),
        "edges": space.graph().num_edges(),
        "cilia": space.cilia(),
        "checks": report.checks,
        "failures": report.failures,
        "passed": report.passed(),
    });
    let rows = [
        ("extended space dim", space.total_dim().to_string()),
        ("edges", space.graph().num_edges().to_string()),
        ("checks", report.checks.to_string()),
        ("failures", report.failures.len().to_string()),
        ("result", if report.passed() { "PASS" } else { "FAIL" }.to_string()),
    ];
    Ok(Output::new(report.passed(), json, fields(&rows) + &failures_text(&report)))
}

pub fn apply_move(hopf: &str, pair: usize, graph: &str, word: &str) -> Result<Output> {
    let space = space(hopf, pair, graph)?;
    let word = inputs::word(word)?;
    let t = space.mu_word(&word)?;
    let report = space.check_intertwining(&t)?;
    let target = t.space.graph().to_json();
    let json = json!({
        "word": word,
        "target": target,
        "cilium_map": t.cilium_map,
        "checks": report.checks,
        "failures": report.failures,
        "passed": report.passed(),
    });
    let rows = [
        ("moves", word.len().to_string()),
        ("target rho", format!("{:?}", target.rho)),
        ("target cilia", format!("{:?}", target.cilia)),
        ("intertwining checks", report.checks.to_string()),
        ("failures", report.failures.len().to_string()),
        ("result", if report.passed() { "PASS" } else { "FAIL" }.to_string()),
    ];
    Ok(Output::new(report.passed(), json, fields(&rows) + &failures_text(&report)))
}
