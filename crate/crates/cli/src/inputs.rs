//! Parsing of the selectors accepted on the command line.

use std::fs;
use std::rc::Rc;

use anyhow::{anyhow, bail, Context, Result};
use kitaev::graphs::{standard_graph, KitaevGraph, Move};
use kitaev::hopf::{builtin, characters, group_likes, pairs_in_involution, Character, GroupLike, HopfAlgebra, PairInInvolution};
use kitaev::protect::unit_coefficient;
use kitaev::reps::{ModComod, Side};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
}

/// `builtin:NAME` or a path to a Hopf algebra JSON file.
pub fn hopf(spec: &str) -> Result<Rc<HopfAlgebra>> {
    let h = match spec.strip_prefix("builtin:") {
        Some(name) => builtin(name)?,
        None => HopfAlgebra::parse_json(&read(spec)?).with_context(|| format!("in {spec}"))?,
    };
    Ok(Rc::new(h))
}

/// `std:g,a` or a path to a graph JSON file.
pub fn graph(spec: &str) -> Result<KitaevGraph> {
    if let Some(rest) = spec.strip_prefix("std:") {
        let (g, a) = rest
            .split_once(',')
            .ok_or_else(|| anyhow!("expected std:g,a, got {spec}"))?;
        let g = g.trim().parse().with_context(|| format!("bad genus in {spec}"))?;
        let a = a.trim().parse().with_context(|| format!("bad annulus count in {spec}"))?;
        return Ok(standard_graph(g, a)?);
    }
    KitaevGraph::parse_json(&read(spec)?).with_context(|| format!("in {spec}"))
}

pub fn pair(h: &HopfAlgebra, index: usize) -> Result<PairInInvolution> {
    let pairs = pairs_in_involution(h);
    let count = pairs.len();
    let p = pairs
        .into_iter()
        .nth(index)
        .ok_or_else(|| anyhow!("{} has {count} pairs in involution, index {index} is out of range", h.name))?;
    if let Some(why) = p.diagnostic() {
        bail!("pair {index} has no induced bimodule: {why}");
    }
    Ok(p)
}

/// A group-like by basis label (`h`, `1`) or by position in the list of group-likes; `e`
/// and `1` always name the unit.
pub fn group_like(h: &HopfAlgebra, label: &str) -> Result<GroupLike> {
    let all = group_likes(h);
    if let Some(g) = all.iter().find(|g| h.format_element(&g.element) == label) {
        return Ok(g.clone());
    }
    if matches!(label, "e" | "1") {
        return Ok(GroupLike { element: h.one().clone() });
    }
    label
        .parse::<usize>()
        .ok()
        .and_then(|i| all.get(i).cloned())
        .ok_or_else(|| anyhow!("{label} is not a group-like of {}", h.name))
}

/// `triv`/`eps` for the counit, otherwise a position in the list of characters.
pub fn character(h: &HopfAlgebra, label: &str) -> Result<Character> {
    if matches!(label, "triv" | "eps" | "ε") {
        return Ok(Character::counit(h));
    }
    label
        .parse::<usize>()
        .ok()
        .and_then(|i| characters(h).into_iter().nth(i))
        .ok_or_else(|| anyhow!("{label} is not a character of {}", h.name))
}

/// `unit-U`, `trivial`, `one-dim:g,chi`, or a path to a module-comodule JSON file.
/// Coefficients are right-right.
pub fn coefficient(h: &HopfAlgebra, spec: &str) -> Result<ModComod> {
    match spec {
        "unit-U" => return Ok(unit_coefficient(h)),
        "trivial" => return Ok(ModComod::trivial(h, Side::RightRight)),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("one-dim:") {
        let (g, chi) = rest
            .split_once(',')
            .ok_or_else(|| anyhow!("expected one-dim:g,chi, got {spec}"))?;
        let g = group_like(h, g.trim())?;
        let chi = character(h, chi.trim())?;
        return Ok(ModComod::one_dim(h, &g, &chi, Side::RightRight));
    }
    let x = ModComod::parse_json(&read(spec)?, h).with_context(|| format!("in {spec}"))?;
    if x.side != Side::RightRight {
        bail!("{spec}: coefficients must be right-right");
    }
    Ok(x)
}

/// A JSON move word, inline or from a file.
pub fn word(spec: &str) -> Result<Vec<Move>> {
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        read(spec)?
    };
    serde_json::from_str(&text).context("a move word is a JSON list such as [{\"slide\": [1, 2]}, {\"edge_reversal\": 1}]")
}

/// `ε` for the counit, otherwise `χk` with `k` the position in the list of characters.
pub fn character_label(h: &HopfAlgebra, chi: &Character) -> String {
    if chi.is_counit(h) {
        return "ε".into();
    }
    let k = characters(h).iter().position(|c| c == chi).unwrap_or(usize::MAX);
    format!("χ{k}")
}
