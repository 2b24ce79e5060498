use anyhow::Result;
use kitaev::graphs::{connected_sum, reduce_to_standard, scramble, KitaevGraph};
use serde_json::{json, Value};

use crate::inputs;
use crate::output::{fields, Output};

fn describe(g: &KitaevGraph) -> Result<(Value, Vec<(&'static str, String)>)> {
    let inv = g.invariants()?;
    let d = g.derive()?;
    let json = json!({
        "genus": inv.genus,
        "boundary": inv.boundary,
        "euler": inv.euler,
        "vertices": d.vertices.len(),
        "edges": d.edges.len(),
        "faces": d.faces.len(),
        "cilia": g.cilia.iter().collect::<Vec<_>>(),
        "pt": g.pt,
        "graph": g.to_json(),
    });
    let rows = vec![
        ("genus", inv.genus.to_string()),
        ("boundary", inv.boundary.to_string()),
        ("euler", inv.euler.to_string()),
        ("vertices", d.vertices.len().to_string()),
        ("edges", d.edges.len().to_string()),
        ("faces", d.faces.len().to_string()),
        ("rho", format!("{:?}", g.to_json().rho)),
        ("cilia", format!("{:?}", g.cilia.iter().collect::<Vec<_>>())),
        ("pt", g.pt.to_string()),
    ];
    Ok((json, rows))
}

pub fn info(spec: &str) -> Result<Output> {
    let g = inputs::graph(spec)?;
    if let Err(violations) = g.validate() {
        let msgs: Vec<String> = violations.iter().map(ToString::to_string).collect();
        let table = format!("not a Kitaev graph:\n{}\n", msgs.join("\n"));
        return Ok(Output::new(false, json!({ "valid": false, "violations": msgs }), table));
    }
    let (json, rows) = describe(&g)?;
    Ok(Output::new(true, json, fields(&rows)))
}

pub fn reduce(spec: &str, scramble_steps: usize, seed: u64) -> Result<Output> {
    let mut g = inputs::graph(spec)?;
    let mut scrambled = None;
    if scramble_steps > 0 {
        let (moved, word) = scramble(&g, scramble_steps, seed)?;
        g = moved;
        scrambled = Some(word);
    }
    let (reduced, word) = reduce_to_standard(&g)?;
    let inv = reduced.invariants()?;
    let json = json!({
        "input": g.to_json(),
        "scramble": scrambled,
        "word": word,
        "reduced": reduced.to_json(),
        "genus": inv.genus,
        "boundary": inv.boundary,
    });
    let mut rows = Vec::new();
    if let Some(w) = &scrambled {
        rows.push(("scramble moves", w.len().to_string()));
        rows.push(("scrambled rho", format!("{:?}", g.to_json().rho)));
    }
    rows.push(("reduction moves", word.len().to_string()));
    rows.push(("reduced rho", format!("{:?}", reduced.to_json().rho)));
    rows.push(("cilia", format!("{:?}", reduced.cilia.iter().collect::<Vec<_>>())));
    rows.push(("genus", inv.genus.to_string()));
    rows.push(("boundary", inv.boundary.to_string()));
    Ok(Output::new(true, json, fields(&rows)))
}

pub fn sum(first: &str, second: &str) -> Result<Output> {
    let s = connected_sum(&inputs::graph(first)?, &inputs::graph(second)?)?;
    let (mut json, mut rows) = describe(&s.graph)?;
    json["shift"] = json!(s.shift);
    rows.push(("shift", s.shift.to_string()));
    Ok(Output::new(true, json, fields(&rows)))
}
