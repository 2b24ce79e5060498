use std::rc::Rc;

use anyhow::{bail, Result};
use kitaev::hopf::{builtin, characters, group_likes, HopfAlgebra};
use kitaev::lattice::ExtendedSpace;
use kitaev::protect::{
    bosonisation_reduce, coinvariant_pair, distinguished_residual, excision_check, filler, group_oracle, inflate,
    isotypic_dim, protected_space, protected_space_with, reduction_check, ProtectedSpec, SplitProjection, Strategy,
};
use kitaev::reps::{induced_bimodule, HopfBimodule, ModComod, Side};
use serde_json::json;

use crate::inputs;
use crate::output::{fields, table, Output};

fn bimodule(h: &HopfAlgebra, pair: usize) -> Result<Rc<HopfBimodule>> {
    Ok(Rc::new(induced_bimodule(h, &inputs::pair(h, pair)?)?))
}

/// The group algebra a Taft-shaped algebra projects onto: `kZ_N` when the dimension is `N²`.
fn default_quotient(a: &HopfAlgebra) -> Option<HopfAlgebra> {
    let n = (1..=a.dim()).find(|n| n * n == a.dim())?;
    let h = builtin(&format!("group:Z{n}")).ok()?;
    SplitProjection::taft(a, &h).ok().map(|_| h)
}

fn split(a: &HopfAlgebra, quotient: Option<&str>) -> Result<(Rc<HopfAlgebra>, SplitProjection)> {
    let h = match quotient {
        Some(spec) => inputs::hopf(spec)?,
        None => match default_quotient(a) {
            Some(h) => Rc::new(h),
            None => bail!("{} has no built-in projection; pass --quotient", a.name),
        },
    };
    let s = SplitProjection::taft(a, &h)?;
    Ok((h, s))
}

/// All one-dimensional objects `k^g_χ` of the given side, labelled `(g,χ)`.
fn one_dims(h: &HopfAlgebra, side: Side) -> Vec<(String, ModComod)> {
    let mut out = Vec::new();
    for g in group_likes(h) {
        for chi in characters(h) {
            let label = format!("({},{})", h.format_element(&g.element), inputs::character_label(h, &chi));
            out.push((label, ModComod::one_dim(h, &g, &chi, side)));
        }
    }
    out
}

pub struct ComputeArgs<'a> {
    pub hopf: &'a str,
    pub pair: usize,
    pub graph: &'a str,
    pub coeff: &'a str,
    pub one_shot: bool,
}

pub fn compute(args: ComputeArgs) -> Result<Output> {
    let h = inputs::hopf(args.hopf)?;
    let spec = ProtectedSpec {
        hopf: h.clone(),
        bimodule: bimodule(&h, args.pair)?,
        graph: inputs::graph(args.graph)?,
        coefficient: inputs::coefficient(&h, args.coeff)?,
    };
    let p = if args.one_shot {
        protected_space_with(&spec, &Strategy::OneShot)?
    } else {
        protected_space(&spec)?
    };
    let last = &p.multi.last;
    let stages: Vec<_> = p
        .multi
        .stages
        .iter()
        .map(|s| {
            json!({
                "cilia": s.cilia,
                "dim_cotensor": s.dim_cotensor,
                "dim_tensor_over": s.dim_tensor_over,
                "dim_bitensor": s.dim_bitensor,
            })
        })
        .collect();
    let json = json!({
        "dim_cotensor": last.dim_cotensor,
        "dim_tensor_over": last.dim_tensor_over,
        "dim_bitensor": p.dim,
        "p": h.format_element(&p.p.element),
        "chi": inputs::character_label(&h, &p.chi),
        "strategy": if args.one_shot { "one-shot" } else { "sequential" },
        "stages": stages,
    });
    let rows: Vec<Vec<String>> = p
        .multi
        .stages
        .iter()
        .map(|s| {
            vec![
                format!("{:?}", s.cilia),
                s.dim_cotensor.to_string(),
                s.dim_tensor_over.to_string(),
                s.dim_bitensor.to_string(),
            ]
        })
        .collect();
    let text = fields(&[
        ("coinvariant pair", format!("({}, {})", h.format_element(&p.p.element), inputs::character_label(&h, &p.chi))),
        ("dim Prot", p.dim.to_string()),
    ]) + &table(&["cilia", "cotensor", "tensor over H", "bitensor"], &rows);
    Ok(Output::new(true, json, text))
}

pub fn table_cmd(hopf: &str, pair: usize, graph: &str, quotient: Option<&str>) -> Result<Output> {
    let a = inputs::hopf(hopf)?;
    let m = bimodule(&a, pair)?;
    let graph = inputs::graph(graph)?;
    let project = quotient.is_some() || default_quotient(&a).is_some();
    let (over, s) = if project {
        let (h, s) = split(&a, quotient)?;
        (h, Some(s))
    } else {
        (a.clone(), None)
    };
    let mut rows = Vec::new();
    let mut list = Vec::new();
    for (label, x) in one_dims(&over, Side::RightRight) {
        let x = match &s {
            Some(s) => inflate(&x, s)?,
            None => x,
        };
        let spec = ProtectedSpec {
            hopf: a.clone(),
            bimodule: m.clone(),
            graph: graph.clone(),
            coefficient: x,
        };
        let dim = protected_space(&spec)?.dim;
        rows.push(vec![label.clone(), dim.to_string()]);
        list.push(json!({ "x": label, "dim": dim }));
    }
    let heading = if s.is_some() {
        format!("Prot with coefficients Inf(k^g_χ) from {}\n", over.name)
    } else {
        format!("Prot with coefficients k^g_χ over {}\n", over.name)
    };
    Ok(Output::new(
        true,
        json!({ "hopf": a.name, "coefficients_over": over.name, "inflated": s.is_some(), "rows": list }),
        heading + &table(&["X", "dim"], &rows),
    ))
}

pub fn oracle(group: &str, genus: usize, p: &str, chi: &str) -> Result<Output> {
    let h = if group.contains(':') {
        inputs::hopf(group)?
    } else {
        Rc::new(builtin(&format!("group:{group}"))?)
    };
    let g = inputs::group_like(&h, p)?;
    let c = inputs::character(&h, chi)?;
    let dim = group_oracle(&h, &g, &c, genus)?;
    Ok(Output::new(
        true,
        json!({ "group": h.name, "genus": genus, "p": p, "chi": inputs::character_label(&h, &c), "dim": dim }),
        fields(&[("group", h.name.clone()), ("genus", genus.to_string()), ("dim Prot", dim.to_string())]),
    ))
}

pub struct ExcisionArgs<'a> {
    pub hopf: &'a str,
    pub pair: usize,
    pub gamma: &'a str,
    pub x: &'a str,
    pub delta: &'a str,
    pub y: &'a str,
}

pub fn excision(args: ExcisionArgs) -> Result<Output> {
    let h = inputs::hopf(args.hopf)?;
    let m = bimodule(&h, args.pair)?;
    let x = inputs::coefficient(&h, args.x)?;
    let y = inputs::coefficient(&h, args.y)?;
    let r = excision_check(h, m, &inputs::graph(args.gamma)?, &x, &inputs::graph(args.delta)?, &y)?;
    let json = json!({
        "dim_gamma": r.dim_gamma,
        "dim_delta": r.dim_delta,
        "dim_sum": r.dim_direct,
        "dim_cbit": r.dim_cbit,
        "dim_aux": r.dim_aux,
        "nu_surjective": r.nu_surjective(),
        "kappa_injective": r.kappa_injective(),
        "exact": r.exact(),
        "dimension_identity": r.dimension_identity(),
        "holds": r.holds(),
    });
    let rows = [
        ("dim Prot(Γ)", r.dim_gamma.to_string()),
        ("dim Prot(Δ)", r.dim_delta.to_string()),
        ("dim Prot(Γ # Δ)", r.dim_direct.to_string()),
        ("dim CBit", r.dim_cbit.to_string()),
        ("dim Aux", r.dim_aux.to_string()),
        ("ν surjective", r.nu_surjective().to_string()),
        ("κ injective", r.kappa_injective().to_string()),
        ("sequence exact", r.exact().to_string()),
        ("dimension identity", r.dimension_identity().to_string()),
        ("result", if r.holds() { "PASS" } else { "FAIL" }.to_string()),
    ];
    Ok(Output::new(r.holds(), json, fields(&rows)))
}

pub fn reduce_bosonisation(hopf: &str, pair: usize, graph: &str, quotient: Option<&str>) -> Result<Output> {
    let a = inputs::hopf(hopf)?;
    let m = bimodule(&a, pair)?;
    let (h, s) = split(&a, quotient)?;
    let space = ExtendedSpace::new(inputs::graph(graph)?, a.clone(), m.clone())?;
    let (p, chi) = coinvariant_pair(&a, &m)?;
    let n = distinguished_residual(&a, &space, &filler(&a, &p, &chi))?;
    let red = bosonisation_reduce(&a, &h, &s, &n)?;

    let mut iso_rows = Vec::new();
    let mut iso = Vec::new();
    for g in group_likes(&h) {
        for c in characters(&h) {
            let d = isotypic_dim(&h, &red.module, &g, &c);
            let label = format!("({},{})", h.format_element(&g.element), inputs::character_label(&h, &c));
            if d > 0 {
                iso_rows.push(vec![label.clone(), d.to_string()]);
            }
            iso.push(json!({ "object": label, "multiplicity": d }));
        }
    }
    let mut ok = red.yd_verified;
    let mut check_rows = Vec::new();
    let mut checks = Vec::new();
    for (label, x) in one_dims(&h, Side::RightRight) {
        let r = reduction_check(&a, &h, &s, &x, &n)?;
        ok &= r.holds();
        check_rows.push(vec![label.clone(), r.lhs.to_string(), r.rhs.to_string()]);
        checks.push(json!({ "x": label, "over_a": r.lhs, "over_h": r.rhs, "holds": r.holds() }));
    }
    let json = json!({
        "dim_module": n.dim,
        "dim_coinvariant": red.dim_coinvariant,
        "dim_intersection": red.dim_intersection,
        "dim_b_plus": red.dim_b_plus,
        "dim_reduced": red.module.dim,
        "yd_verified": red.yd_verified,
        "isotypic": iso,
        "reduction": checks,
    });
    let text = fields(&[
        ("dim N", n.dim.to_string()),
        ("dim N^coH", red.dim_coinvariant.to_string()),
        ("dim(N^coH ∩ B⁺N)", red.dim_intersection.to_string()),
        ("dim ⟨N⟩", red.module.dim.to_string()),
        ("⟨N⟩ Yetter–Drinfeld", red.yd_verified.to_string()),
    ]) + "\n"
        + &table(&["one-dim summand of ⟨N⟩", "multiplicity"], &iso_rows)
        + "\n"
        + &table(&["X", "Bit over A", "Bit over H"], &check_rows);
    Ok(Output::new(ok, json, text))
}
