use anyhow::Result;
use kitaev::hopf::{
    characters, check_s4, distinguished, group_likes, is_cosemisimple, is_semisimple, left_integrals,
    pairs_in_involution,
};
use serde_json::json;

use crate::inputs;
use crate::output::{fields, table, Output};

pub fn check(spec: &str) -> Result<Output> {
    let h = inputs::hopf(spec)?;
    let axioms = h.check_axioms();
    let s4 = check_s4(&h);
    let ok = axioms.is_ok() && matches!(s4, Ok(true));
    let verdict = |r: &Result<(), kitaev::hopf::HopfError>| match r {
        Ok(()) => "ok".to_string(),
        Err(e) => e.to_string(),
    };
    let s4_text = match &s4 {
        Ok(true) => "ok".to_string(),
        Ok(false) => "S⁴ differs from the conjugation by (a, α)".to_string(),
        Err(e) => e.to_string(),
    };
    let json = json!({
        "name": h.name,
        "dim": h.dim(),
        "cyclotomic_order": h.order(),
        "axioms": verdict(&axioms),
        "radford_s4": s4_text,
        "group_likes": group_likes(&h).len(),
        "characters": characters(&h).len(),
    });
    let rows = [
        ("name", h.name.clone()),
        ("dim", h.dim().to_string()),
        ("cyclotomic order", h.order().to_string()),
        ("Hopf axioms", verdict(&axioms)),
        ("Radford S⁴ formula", s4_text),
        ("group-likes", group_likes(&h).len().to_string()),
        ("characters", characters(&h).len().to_string()),
    ];
    Ok(Output::new(ok, json, fields(&rows)))
}

pub fn pairs(spec: &str) -> Result<Output> {
    let h = inputs::hopf(spec)?;
    let pairs = pairs_in_involution(&h);
    let mut rows = Vec::new();
    let mut list = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        let g = h.format_element(&p.p.element);
        let chi = inputs::character_label(&h, &p.chi);
        let zeta = p.zeta.as_ref().map(ToString::to_string);
        rows.push(vec![
            i.to_string(),
            g.clone(),
            chi.clone(),
            p.modular.to_string(),
            zeta.clone().unwrap_or_else(|| "none in field".into()),
        ]);
        list.push(json!({
            "index": i,
            "p": g,
            "chi": chi,
            "chi_values": p.chi.format(&h),
            "modular": p.modular,
            "zeta": zeta,
        }));
    }
    let text = format!(
        "{} pairs in involution for {}\n{}",
        pairs.len(),
        h.name,
        table(&["index", "p", "χ", "modular", "√χ(p)"], &rows)
    );
    Ok(Output::new(true, json!({ "name": h.name, "pairs": list }), text))
}

pub fn integrals(spec: &str) -> Result<Output> {
    let h = inputs::hopf(spec)?;
    let lambdas = left_integrals(&h);
    let d = distinguished(&h)?;
    let semisimple = is_semisimple(&h)?;
    let cosemisimple = is_cosemisimple(&h)?;
    let alpha = inputs::character_label(&h, &d.alpha);
    let json = json!({
        "left_integrals": lambdas.iter().map(|l| h.format_element(l)).collect::<Vec<_>>(),
        "distinguished_group_like": h.format_element(&d.a.element),
        "distinguished_character": alpha,
        "distinguished_character_values": d.alpha.format(&h),
        "unimodular": d.alpha.is_counit(&h),
        "semisimple": semisimple,
        "cosemisimple": cosemisimple,
    });
    let rows = [
        ("left integral Λ", h.format_element(&d.integral)),
        ("distinguished group-like a", h.format_element(&d.a.element)),
        ("distinguished character α", format!("{alpha} {}", d.alpha.format(&h))),
        ("unimodular", d.alpha.is_counit(&h).to_string()),
        ("semisimple", semisimple.to_string()),
        ("cosemisimple", cosemisimple.to_string()),
    ];
    Ok(Output::new(true, json, fields(&rows)))
}
