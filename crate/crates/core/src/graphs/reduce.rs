//! Reduction of a Kitaev graph to its standard form.
//!
//! The vertex of `pt` is read as a linear word starting at `pt`; a forward slide
//! `𝔰_{a,b}` with `ρ(a) = b` moves `b` to just before `κ(a)`, and a backward slide moves
//! the letter just before `κ(a)` to just after `a`. The reduction runs in three phases:
//!
//! 1. Empty every other vertex into the distinguished one until each is monovalent.
//!    Progress: the sum of `valence − 1` over non-distinguished vertices drops by one
//!    with each slide.
//! 2. For each monovalent vertex `x` (largest first, so that blocks end up in
//!    increasing order), shrink its face to `x, u, κ(x)`,
//!    which makes `u κ(x) κ(u)` a contiguous block, and push that block to the end of
//!    the word. Progress: the length of the face of `x`, then the number of letters
//!    between the block and the already finished blocks.
//! 3. The remaining prefix consists of chords forming a single face; each step
//!    normalises the leading chord pair into `a b κ(a) κ(b)`.
//!
//! A final reordering fixes edge directions and sorts edges. Every phase issues
//! `O(|Γ|²)` slides.

use std::collections::{BTreeMap, BTreeSet};

use super::graph::{standard_graph, KitaevGraph};
use super::moves::{apply_move, apply_slide, valid_slides, Move, MoveWord};
use super::perm::kappa;
use super::GraphError;

struct Reducer {
    g: KitaevGraph,
    word: MoveWord,
}

fn bug(msg: impl Into<String>) -> GraphError {
    GraphError::Inconsistent(msg.into())
}

impl Reducer {
    fn slide(&mut self, a: u32, b: u32) -> Result<(), GraphError> {
        let next = apply_slide(&self.g, a, b);
        if next == self.g {
            return Err(bug(format!("slide ({a},{b}) does not apply")));
        }
        self.g = next;
        self.word.push(Move::Slide(a, b));
        Ok(())
    }

    fn reorder(&mut self, m: Move) -> Result<(), GraphError> {
        self.g = apply_move(&self.g, m)?;
        self.word.push(m);
        Ok(())
    }

    fn rho(&self, h: u32) -> u32 {
        self.g.rho.apply(h)
    }

    fn rho_inv(&self, h: u32) -> u32 {
        self.g.rho.inverse().apply(h)
    }

    fn main_word(&self) -> Vec<u32> {
        self.g.vertex_word(self.g.pt)
    }

    /// Phase 1: slide every half-edge of other vertices into the distinguished vertex.
    fn collapse_vertices(&mut self) -> Result<(), GraphError> {
        loop {
            let v0: BTreeSet<u32> = self.main_word().into_iter().collect();
            let mut pick = None;
            for &c in self.g.cilia.iter().filter(|&&c| c != self.g.pt) {
                let w = self.g.vertex_word(c);
                if w.len() < 2 {
                    continue;
                }
                for &a in &w {
                    if v0.contains(&kappa(a)) && pick.is_none_or(|(x, _)| a < x) {
                        pick = Some((a, c));
                    }
                }
            }
            let Some((a, c)) = pick else { break };
            let ka = kappa(a);
            // successors of a go to just before κ(a)
            while self.rho(a) != c && self.rho(a) != a {
                let b = self.rho(a);
                self.slide(a, b)?;
            }
            // predecessors of a, down to the cilium, go to just after κ(a)
            while self.rho(a) != a {
                let x = self.rho_inv(a);
                self.slide(ka, x)?;
            }
        }
        let others = self.g.cilia.iter().filter(|&&c| c != self.g.pt);
        for &c in others {
            if self.rho(c) != c {
                return Err(bug(format!("vertex of {c} not monovalent after phase 1")));
            }
        }
        Ok(())
    }

    fn finished_intact(&self, tail: &[u32]) -> bool {
        let w = self.main_word();
        w.len() >= tail.len() && w[w.len() - tail.len()..] == *tail
    }

    /// Phase 2: turn each monovalent vertex into an annulus block at the end of the word.
    fn gather_annuli(&mut self) -> Result<Vec<u32>, GraphError> {
        let pendants: Vec<u32> = self
            .g
            .cilia
            .iter()
            .copied()
            .filter(|&c| c != self.g.pt)
            .rev()
            .collect();
        let mut tail: Vec<u32> = Vec::new();
        for &x in &pendants {
            let p = kappa(x);
            loop {
                let face = self.g.face_word(x);
                if face.len() < 3 {
                    return Err(bug(format!("face of pendant {x} too short")));
                }
                if face.len() == 3 {
                    break;
                }
                let (y1, y2) = (face[1], face[2]);
                let before = self.g.clone();
                let next = apply_slide(&self.g, y2, kappa(y1));
                if next != before
                    && next.face_word(x).len() < face.len()
                    && self.pendants_ok(&next, &pendants)
                {
                    self.g = next;
                    self.word.push(Move::Slide(y2, kappa(y1)));
                    if !self.finished_intact(&tail) {
                        return Err(bug("phase 2 disturbed a finished block"));
                    }
                } else {
                    self.fallback_shrink(x, face.len(), &pendants, &tail)?;
                }
            }
            let u = self.g.face_word(x)[1];
            let ku = kappa(u);
            if self.rho(u) != p || self.rho(p) != ku {
                return Err(bug(format!("block of pendant {x} not contiguous")));
            }
            let stop_at = tail.first().copied();
            loop {
                let z = self.rho(ku);
                if z == self.g.pt || Some(z) == stop_at {
                    break;
                }
                self.slide(ku, z)?;
            }
            let mut block = vec![u, p, ku];
            block.extend(tail);
            tail = block;
            if !self.finished_intact(&tail) {
                return Err(bug("finished blocks not at the end of the word"));
            }
        }
        Ok(tail)
    }

    fn pendants_ok(&self, g: &KitaevGraph, pendants: &[u32]) -> bool {
        pendants
            .iter()
            .all(|&c| g.cilia.contains(&c) && g.rho.apply(c) == c)
    }

    /// Slide search used when the direct face-shrinking slide does not apply.
    fn fallback_shrink(
        &mut self,
        x: u32,
        len: usize,
        pendants: &[u32],
        tail: &[u32],
    ) -> Result<(), GraphError> {
        for (a, b) in valid_slides(&self.g) {
            let next = apply_slide(&self.g, a, b);
            if next.face_word(x).len() < len && self.pendants_ok(&next, pendants) {
                let w = next.vertex_word(next.pt);
                if w.len() >= tail.len() && w[w.len() - tail.len()..] == *tail {
                    self.g = next;
                    self.word.push(Move::Slide(a, b));
                    return Ok(());
                }
            }
        }
        Err(bug(format!("no slide shrinks the face of pendant {x}")))
    }

    /// Phase 3: normalise the chord prefix into handles `a b κ(a) κ(b)`.
    fn form_handles(&mut self, tail_len: usize) -> Result<(), GraphError> {
        let mut pos = 0;
        loop {
            let w = self.main_word();
            let h = w.len() - tail_len;
            if pos >= h {
                break;
            }
            let region = &w[..h];
            let at: BTreeMap<u32, usize> = region.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let a = region[pos];
            let ka = kappa(a);
            let j = *at.get(&ka).ok_or_else(|| bug("chord leaves the handle region"))?;
            if j <= pos + 1 {
                return Err(bug(format!("chord {a} has empty interior")));
            }
            let interior = &region[pos + 1..j];
            let idx = interior
                .iter()
                .position(|&y| at.get(&kappa(y)).is_some_and(|&k| k > j))
                .ok_or_else(|| bug(format!("chord {a} is not interlaced")))?;
            let b = interior[idx];
            let kb = kappa(b);
            // rotate the interior until b sits just before κ(a)
            for _ in 0..=idx {
                if self.rho(b) == ka {
                    break;
                }
                let y = self.rho(a);
                self.slide(a, y)?;
            }
            // letters between a and b go to just after κ(b)
            while self.rho(a) != b {
                let x = self.rho_inv(b);
                self.slide(kb, x)?;
            }
            // letters between κ(a) and κ(b) go to just after κ(b)
            while self.rho(ka) != kb {
                let x = self.rho_inv(kb);
                self.slide(b, x)?;
                self.slide(a, x)?;
                self.slide(kb, x)?;
            }
            if self.rho(b) != ka {
                return Err(bug("handle not formed"));
            }
            pos += 4;
        }
        Ok(())
    }

    /// Target label of every half-edge, read off the normalised word.
    fn target_labels(&self, g: u32, tail_len: usize) -> BTreeMap<u32, u32> {
        let w = self.main_word();
        let mut map = BTreeMap::new();
        let h = w.len() - tail_len;
        for (i, chunk) in w[..h].chunks(4).enumerate() {
            let base = 4 * i as u32;
            for (x, t) in chunk.iter().zip([1, 3, 2, 4]) {
                map.insert(*x, base + t);
            }
        }
        for (j, chunk) in w[h..].chunks(3).enumerate() {
            let base = 4 * g + 4 * j as u32;
            for (x, t) in chunk.iter().zip([1, 4, 2]) {
                map.insert(*x, base + t);
            }
            map.insert(kappa(chunk[1]), base + 3);
        }
        map
    }

    /// Edge reversals and adjacent swaps carrying the normal form to `Φ_{g,a}` exactly.
    fn relabel(&mut self, g: u32, tail_len: usize) -> Result<(), GraphError> {
        let targets = self.target_labels(g, tail_len);
        let flips: Vec<u32> = targets
            .iter()
            .filter(|(h, t)| *h % 2 == 1 && *t % 2 == 0)
            .map(|(h, _)| h.div_ceil(2))
            .collect();
        for e in flips {
            self.reorder(Move::EdgeReversal(e))?;
        }
        let targets = self.target_labels(g, tail_len);
        // edge index -> target edge index; absent edges sort last
        let max_edge = targets.keys().max().map_or(0, |m| m.div_ceil(2));
        let mut t: Vec<Option<u32>> = vec![None; max_edge as usize + 2];
        for (h, tl) in &targets {
            if h % 2 == 1 {
                if tl % 2 == 0 {
                    return Err(bug("edge direction not fixed"));
                }
                t[h.div_ceil(2) as usize] = Some(tl.div_ceil(2));
            }
        }
        let key = |v: Option<u32>| v.unwrap_or(u32::MAX);
        loop {
            let swap = (1..max_edge as usize)
                .find(|&i| t[i + 1].is_some() && key(t[i]) > key(t[i + 1]));
            let Some(i) = swap else { break };
            self.reorder(Move::EdgePermutation(i as u32))?;
            t.swap(i, i + 1);
        }
        Ok(())
    }
}

/// Returns `(Φ_{g,a}, word)` where replaying `word` on `graph` yields `Φ_{g,a}` exactly.
pub fn reduce_to_standard(graph: &KitaevGraph) -> Result<(KitaevGraph, MoveWord), GraphError> {
    graph.validate().map_err(GraphError::Invalid)?;
    let (g, a) = graph.genus_and_annuli()?;
    let mut r = Reducer {
        g: graph.clone(),
        word: Vec::new(),
    };
    r.collapse_vertices()?;
    let tail = r.gather_annuli()?;
    r.form_handles(tail.len())?;
    r.relabel(g, tail.len())?;
    let target = standard_graph(g, a)?;
    if r.g != target {
        return Err(bug(format!(
            "reduction ended at {:?} instead of Φ_{{{g},{a}}}",
            r.g.to_json()
        )));
    }
    Ok((target, r.word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{apply_word, connected_sum, scramble};
    use proptest::prelude::*;

    #[test]
    fn standard_graphs_need_no_moves() {
        for (g, a) in [(1, 0), (0, 1), (2, 3), (3, 0), (0, 4)] {
            let s = standard_graph(g, a).unwrap();
            let (t, w) = reduce_to_standard(&s).unwrap();
            assert_eq!(t, s);
            assert!(w.is_empty(), "Φ_{g},{a} gave {w:?}");
        }
    }

    #[test]
    fn sum_of_torus_and_annulus() {
        let t = standard_graph(1, 0).unwrap();
        let a = standard_graph(0, 1).unwrap();
        let at = connected_sum(&a, &t).unwrap().graph;
        let (s, w) = reduce_to_standard(&at).unwrap();
        assert_eq!(s, standard_graph(1, 1).unwrap());
        assert_eq!(apply_word(&at, &w).unwrap(), s);
    }

    #[test]
    fn scrambled_round_trip() {
        let base = standard_graph(2, 1).unwrap();
        for seed in 0..40 {
            let (x, _) = scramble(&base, 5, seed).unwrap();
            let (s, w) = reduce_to_standard(&x).unwrap();
            assert_eq!(s, base);
            assert_eq!(apply_word(&x, &w).unwrap(), base);
        }
    }

    #[test]
    fn vertex_collapse_from_several_vertices() {
        // two vertices joined by three edges: a theta graph, genus 1 with one boundary
        let g = KitaevGraph::from_cycles(&[vec![1, 3, 5], vec![2, 6, 4]], &[1, 2], 1).unwrap();
        if g.is_valid() {
            let (s, w) = reduce_to_standard(&g).unwrap();
            assert_eq!(apply_word(&g, &w).unwrap(), s);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reduction_recovers_scrambled_standard(g in 0u32..3, a in 0u32..3, steps in 0usize..30, seed in any::<u64>()) {
            prop_assume!(g + a > 0);
            let base = standard_graph(g, a).unwrap();
            let (x, _) = scramble(&base, steps, seed).unwrap();
            let (s, w) = reduce_to_standard(&x).unwrap();
            prop_assert_eq!(&s, &base);
            prop_assert_eq!(apply_word(&x, &w).unwrap(), base);
            let n = x.half_edges().len();
            prop_assert!(w.len() <= 4 * n * n + 16);
        }
    }
}
