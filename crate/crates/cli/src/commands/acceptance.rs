use anyhow::Result;
use kitaev::acceptance::{run_all, run_criterion};
use serde_json::json;

use crate::output::Output;

pub fn run(seed: u64, only: &[usize]) -> Result<Output> {
    let outcomes = if only.is_empty() {
        run_all(seed)
    } else {
        only.iter().map(|&id| run_criterion(id, seed)).collect::<Result<Vec<_>, _>>()?
    };
    let ok = outcomes.iter().all(|o| o.passed);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut text: String = outcomes.iter().map(|o| o.line() + "\n").collect();
    text.push_str(&format!("{passed} of {} criteria pass\n", outcomes.len()));
    let list: Vec<_> = outcomes
        .iter()
        .map(|o| json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }))
        .collect();
    Ok(Output::new(ok, json!({ "criteria": list, "passed": passed, "total": outcomes.len() }), text))
}
