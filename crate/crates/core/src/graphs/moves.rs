use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::graph::KitaevGraph;
use super::perm::{kappa, Permutation};
use super::GraphError;

/// A generator of the structure group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    /// `τ_i = (2i−1 2i)`: reverse edge `i`.
    EdgeReversal(u32),
    /// `(2i−1 2i+1)(2i 2i+2)`: swap edges `i` and `i+1`.
    EdgePermutation(u32),
    /// The edge slide `𝔰_{a,b}`.
    Slide(u32, u32),
}

pub type MoveWord = Vec<Move>;

impl Move {
    /// The permutation of half-edges for the two reordering generators.
    pub fn reordering(&self) -> Option<Permutation> {
        match *self {
            Move::EdgeReversal(i) if i > 0 => Some(Permutation::transposition(2 * i - 1, 2 * i)),
            Move::EdgePermutation(i) if i > 0 => Some(
                Permutation::transposition(2 * i - 1, 2 * i + 1)
                    .compose(&Permutation::transposition(2 * i, 2 * i + 2)),
            ),
            _ => None,
        }
    }
}

/// Which of the two slide conditions holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideCase {
    /// `ρ(a) = b`, `b ∉ C`: `b` moves to just before `κ(a)`.
    Forward,
    /// `ρ(b) = κ(a)`, `κ(a) ∉ C`: `b` moves to just after `a`.
    Backward,
}

pub fn slide_case(graph: &KitaevGraph, a: u32, b: u32) -> Option<SlideCase> {
    if a == 0 || b == 0 {
        return None;
    }
    let gamma = graph.half_edges();
    if !gamma.contains(&a) || !gamma.contains(&b) {
        return None;
    }
    slide_case_in(graph, a, b)
}

fn slide_case_in(graph: &KitaevGraph, a: u32, b: u32) -> Option<SlideCase> {
    let rho = &graph.rho;
    let ka = kappa(a);
    let distinct = |x: u32, y: u32, z: u32| x != y && y != z && x != z;
    if rho.apply(a) == b && !graph.cilia.contains(&b) && distinct(b, rho.apply(b), ka) {
        return Some(SlideCase::Forward);
    }
    if rho.apply(b) == ka && !graph.cilia.contains(&ka) && distinct(b, ka, rho.apply(a)) {
        return Some(SlideCase::Backward);
    }
    None
}

/// `𝔰_{a,b} ▶ Γ`; the graph is returned unchanged when neither condition holds.
pub fn apply_slide(graph: &KitaevGraph, a: u32, b: u32) -> KitaevGraph {
    let Some(case) = slide_case(graph, a, b) else {
        return graph.clone();
    };
    let rho = &graph.rho;
    let ka = kappa(a);
    let s = match case {
        SlideCase::Forward => Permutation::cycle(&[b, rho.apply(b), ka]),
        SlideCase::Backward => Permutation::cycle(&[b, ka, rho.apply(a)]),
    };
    let tau = Permutation::transposition(ka, b);
    KitaevGraph {
        rho: s.compose(rho),
        cilia: graph.cilia.iter().map(|&c| tau.apply(c)).collect(),
        pt: tau.apply(graph.pt),
    }
}

/// `σ ▷ (ρ, C, pt) = (σρσ⁻¹, σ(C), σ(pt))` for `σ` commuting with `κ`.
pub fn apply_reordering(graph: &KitaevGraph, sigma: &Permutation) -> Result<KitaevGraph, GraphError> {
    let pts: BTreeSet<u32> = sigma.support().chain(graph.half_edges()).collect();
    if pts.iter().any(|&x| sigma.apply(kappa(x)) != kappa(sigma.apply(x))) {
        return Err(GraphError::NotAReordering);
    }
    Ok(KitaevGraph {
        rho: graph.rho.conjugate_by(sigma),
        cilia: graph.cilia.iter().map(|&c| sigma.apply(c)).collect(),
        pt: sigma.apply(graph.pt),
    })
}

pub fn apply_move(graph: &KitaevGraph, m: Move) -> Result<KitaevGraph, GraphError> {
    match m {
        Move::Slide(a, b) => Ok(apply_slide(graph, a, b)),
        _ => {
            let sigma = m
                .reordering()
                .ok_or_else(|| GraphError::Format(format!("edge index 0 in {m:?}")))?;
            apply_reordering(graph, &sigma)
        }
    }
}

pub fn apply_word(graph: &KitaevGraph, word: &[Move]) -> Result<KitaevGraph, GraphError> {
    word.iter().try_fold(graph.clone(), |g, &m| apply_move(&g, m))
}

/// All pairs `(a, b)` for which `𝔰_{a,b}` acts nontrivially.
pub fn valid_slides(graph: &KitaevGraph) -> Vec<(u32, u32)> {
    let gamma = graph.half_edges();
    let mut out = Vec::new();
    for &a in &gamma {
        for &b in &gamma {
            if slide_case_in(graph, a, b).is_some() {
                out.push((a, b));
            }
        }
    }
    out
}

/// Result of gluing two graphs at their distinguished cilia.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedSum {
    pub graph: KitaevGraph,
    /// Half-edge `h` of the second summand is `h + shift` in the sum.
    pub shift: u32,
}

/// `G # D`. The second summand is relabelled by `h ↦ h + max(Γ_G)`; the shift is even,
/// so edges stay parity pairs, and the labels of the sum are contiguous when both inputs are.
pub fn connected_sum(g: &KitaevGraph, d: &KitaevGraph) -> Result<ConnectedSum, GraphError> {
    g.validate().map_err(GraphError::Invalid)?;
    d.validate().map_err(GraphError::Invalid)?;
    let shift = *g.half_edges().iter().next_back().expect("nonempty graph");
    let d_rho = Permutation::from_map(
        d.half_edges()
            .into_iter()
            .map(|h| (h + shift, d.rho.apply(h) + shift)),
    )?;
    let (cg, cd) = (g.pt, d.pt + shift);
    let pre_g = g.rho.inverse().apply(cg);
    let pre_d = d_rho.inverse().apply(cd);
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for h in g.half_edges() {
        pairs.push((h, if h == pre_g { cd } else { g.rho.apply(h) }));
    }
    for h in d.half_edges() {
        let h = h + shift;
        pairs.push((h, if h == pre_d { cg } else { d_rho.apply(h) }));
    }
    let rho = Permutation::from_map(pairs)?;
    let mut cilia = g.cilia.clone();
    cilia.extend(d.cilia.iter().map(|c| c + shift).filter(|&c| c != cd));
    Ok(ConnectedSum {
        graph: KitaevGraph { rho, cilia, pt: g.pt },
        shift,
    })
}

/// Applies `steps` random nontrivial generators, seeded deterministically. Slides are
/// chosen with probability 3/4, the rest are edge reversals or swaps among the
/// existing edges.
pub fn scramble(graph: &KitaevGraph, steps: usize, seed: u64) -> Result<(KitaevGraph, MoveWord), GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = graph.clone();
    let mut word = Vec::with_capacity(steps);
    let edges: Vec<u32> = graph
        .half_edges()
        .into_iter()
        .filter(|h| h % 2 == 1)
        .map(|h| h.div_ceil(2))
        .collect();
    let contiguous = edges.iter().enumerate().all(|(i, &e)| e == i as u32 + 1);
    for _ in 0..steps {
        let slides = valid_slides(&cur);
        let m = if !slides.is_empty() && rng.gen_bool(0.75) {
            let (a, b) = slides[rng.gen_range(0..slides.len())];
            Move::Slide(a, b)
        } else if contiguous && edges.len() >= 2 && rng.gen_bool(0.5) {
            Move::EdgePermutation(rng.gen_range(1..edges.len() as u32))
        } else {
            let e = edges[rng.gen_range(0..edges.len())];
            Move::EdgeReversal(e)
        };
        cur = apply_move(&cur, m)?;
        word.push(m);
    }
    Ok((cur, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::standard_graph;
    use proptest::prelude::*;
    use rand::Rng;

    #[test]
    fn reversal_on_torus() {
        let t = standard_graph(1, 0).unwrap();
        let r = apply_move(&t, Move::EdgeReversal(1)).unwrap();
        assert_eq!(r.rho, Permutation::cycle(&[2, 3, 1, 4]));
        assert_eq!(r.cilia, BTreeSet::from([2]));
        assert_eq!(r.pt, 2);
        assert_eq!(apply_reordering(&t, &Permutation::identity()).unwrap(), t);
    }

    #[test]
    fn swapping_annulus_edges() {
        let a = standard_graph(0, 1).unwrap();
        let s = apply_move(&a, Move::EdgePermutation(1)).unwrap();
        assert_eq!(s.rho, Permutation::cycle(&[3, 2, 4]));
        assert_eq!(s.cilia, BTreeSet::from([3, 1]));
        assert!(s.is_valid());
        assert_eq!(s.invariants().unwrap(), a.invariants().unwrap());
        assert!(apply_reordering(&a, &Permutation::cycle(&[1, 3])).is_err());
    }

    #[test]
    fn invalid_slide_is_noop() {
        let t = standard_graph(1, 0).unwrap();
        // ρ(1) = 3 but {3, ρ(3) = 2, κ(1) = 2} is not three distinct half-edges.
        assert_eq!(apply_slide(&t, 1, 3), t);
        assert_eq!(apply_slide(&t, 1, 1), t);
        assert_eq!(apply_slide(&t, 9, 1), t);
    }

    #[test]
    fn slides_are_involutions_on_standard_graphs() {
        for (g, a) in [(1, 1), (2, 0), (0, 3), (2, 2)] {
            let s = standard_graph(g, a).unwrap();
            let inv = s.invariants().unwrap();
            let slides = valid_slides(&s);
            assert!(!slides.is_empty());
            for (x, y) in slides {
                let once = apply_slide(&s, x, y);
                assert_ne!(once, s);
                assert!(once.is_valid());
                assert_eq!(once.invariants().unwrap(), inv);
                assert_eq!(apply_slide(&once, x, y), s, "slide ({x},{y}) on Φ_{g},{a}");
            }
        }
    }

    #[test]
    fn connected_sums() {
        let t = standard_graph(1, 0).unwrap();
        let a = standard_graph(0, 1).unwrap();
        let ta = connected_sum(&t, &a).unwrap();
        assert_eq!(ta.shift, 4);
        assert_eq!(ta.graph, standard_graph(1, 1).unwrap());
        let tt = connected_sum(&t, &t).unwrap().graph;
        assert_eq!(tt, standard_graph(2, 0).unwrap());
        let aa = connected_sum(&a, &a).unwrap().graph;
        let inv = aa.invariants().unwrap();
        assert_eq!((inv.genus, inv.boundary, inv.euler), (0, 3, 2));
        let d1 = t.derive().unwrap();
        let d2 = a.derive().unwrap();
        let d = ta.graph.derive().unwrap();
        assert_eq!(d.vertices.len(), d1.vertices.len() + d2.vertices.len() - 1);
        assert_eq!(d.faces.len(), d1.faces.len() + d2.faces.len() - 1);
        assert_eq!(d.edges.len(), d1.edges.len() + d2.edges.len());
    }

    #[test]
    fn move_json() {
        let w = vec![Move::Slide(1, 3), Move::EdgeReversal(2), Move::EdgePermutation(1)];
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"[{"slide":[1,3]},{"edge_reversal":2},{"edge_permutation":1}]"#);
        let back: MoveWord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }

    fn small_standard() -> impl Strategy<Value = KitaevGraph> {
        (0u32..3, 0u32..3)
            .prop_filter("nonempty", |(g, a)| g + a > 0)
            .prop_map(|(g, a)| standard_graph(g, a).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn invariants_constant_along_words(g in small_standard(), seed in any::<u64>(), steps in 1usize..25) {
            let inv = g.invariants().unwrap();
            let (_, word) = scramble(&g, steps, seed).unwrap();
            let mut cur = g.clone();
            for m in &word {
                cur = apply_move(&cur, *m).unwrap();
                prop_assert!(cur.is_valid());
                prop_assert_eq!(cur.invariants().unwrap(), inv);
            }
            // every generator is an involution, so the reversed word undoes the scramble
            let mut back = word.clone();
            back.reverse();
            prop_assert_eq!(apply_word(&cur, &back).unwrap(), g);
        }

        #[test]
        fn reorderings_form_a_group_action(g in small_standard(), seed in any::<u64>()) {
            let n = g.num_edges() as u32;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut gens = Vec::new();
            for _ in 0..6 {
                let i = rng.gen_range(1..=n);
                gens.push(if i < n && rng.gen_bool(0.5) { Move::EdgePermutation(i) } else { Move::EdgeReversal(i) });
            }
            let mut total = Permutation::identity();
            let mut stepwise = g.clone();
            for m in &gens {
                let s = m.reordering().unwrap();
                stepwise = apply_reordering(&stepwise, &s).unwrap();
                total = s.compose(&total);
            }
            prop_assert_eq!(apply_reordering(&g, &total).unwrap(), stepwise);
        }
    }
}
