use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::{kappa, Permutation};
use super::GraphError;

/// A Kitaev graph `(ρ, C, pt)`. Edges are the pairs `{2i−1, 2i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KitaevGraph {
    pub rho: Permutation,
    pub cilia: BTreeSet<u32>,
    pub pt: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    PtNotInCilia,
    ZeroLabel,
    /// ρ moves a half-edge that is not reachable from the cilia.
    StrayHalfEdges(Vec<u32>),
    NotConnected,
    /// Some vertex carries a number of cilia other than one.
    VerticesNotCiliated,
    /// Some face is not `f_{ρ⁻¹(c)}` for exactly one cilium `c`.
    FacesNotCiliated,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PtNotInCilia => write!(f, "pt not in C"),
            Violation::ZeroLabel => write!(f, "half-edge label 0"),
            Violation::StrayHalfEdges(h) => write!(f, "ρ moves half-edges outside Γ: {h:?}"),
            Violation::NotConnected => write!(f, "not connected"),
            Violation::VerticesNotCiliated => write!(f, "not well-ciliated (vertices)"),
            Violation::FacesNotCiliated => write!(f, "not well-ciliated (faces)"),
        }
    }
}

/// Vertices, edges and faces, each sorted by cilium (edges by source).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derived {
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<(u32, u32)>,
    pub faces: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub genus: u32,
    pub boundary: u32,
    pub euler: i64,
}

/// On-disk format: `{"rho": [[cycle], ...], "cilia": [...], "pt": n}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub rho: Vec<Vec<u32>>,
    pub cilia: Vec<u32>,
    pub pt: u32,
}

impl KitaevGraph {
    pub fn new(rho: Permutation, cilia: impl IntoIterator<Item = u32>, pt: u32) -> Self {
        KitaevGraph {
            rho,
            cilia: cilia.into_iter().collect(),
            pt,
        }
    }

    pub fn from_cycles(cycles: &[Vec<u32>], cilia: &[u32], pt: u32) -> Result<Self, GraphError> {
        Ok(KitaevGraph::new(
            Permutation::from_cycles(cycles)?,
            cilia.iter().copied(),
            pt,
        ))
    }

    /// Orbit of the cilia under `⟨ρ, κ⟩`.
    pub fn half_edges(&self) -> BTreeSet<u32> {
        let starts: Vec<u32> = self.cilia.iter().copied().filter(|&c| c > 0).collect();
        self.orbit(&starts)
    }

    fn orbit(&self, starts: &[u32]) -> BTreeSet<u32> {
        let mut seen: BTreeSet<u32> = starts.iter().copied().collect();
        let mut queue: VecDeque<u32> = starts.iter().copied().collect();
        let rho_inv = self.rho.inverse();
        while let Some(h) = queue.pop_front() {
            for n in [self.rho.apply(h), rho_inv.apply(h), kappa(h)] {
                if seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen
    }

    pub fn num_edges(&self) -> usize {
        self.half_edges().len() / 2
    }

    /// Half-edges of the vertex of `c`, read from `c` along ρ.
    pub fn vertex_word(&self, c: u32) -> Vec<u32> {
        let mut w = vec![c];
        let mut h = self.rho.apply(c);
        while h != c {
            w.push(h);
            h = self.rho.apply(h);
        }
        w
    }

    /// The face cycle of `ρ⁻¹κ` through `h`, starting at `h`.
    pub fn face_word(&self, h: u32) -> Vec<u32> {
        let rho_inv = self.rho.inverse();
        let mut w = vec![h];
        let mut x = rho_inv.apply(kappa(h));
        while x != h {
            w.push(x);
            x = rho_inv.apply(kappa(x));
        }
        w
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if !self.cilia.contains(&self.pt) {
            out.push(Violation::PtNotInCilia);
        }
        if self.cilia.contains(&0) || self.rho.support().any(|h| h == 0) {
            out.push(Violation::ZeroLabel);
            return Err(out);
        }
        if self.cilia.is_empty() {
            return Err(out);
        }
        let gamma = self.half_edges();
        let stray: Vec<u32> = self.rho.support().filter(|h| !gamma.contains(h)).collect();
        if !stray.is_empty() {
            out.push(Violation::StrayHalfEdges(stray));
        }
        let first = *self.cilia.iter().next().unwrap();
        if self.orbit(&[first]) != gamma {
            out.push(Violation::NotConnected);
        }
        let vertices = self.rho.cycles_on(&gamma);
        if vertices
            .iter()
            .any(|v| v.iter().filter(|h| self.cilia.contains(h)).count() != 1)
        {
            out.push(Violation::VerticesNotCiliated);
        }
        let face_perm = self.rho.inverse().compose(&kappa_on(&gamma));
        let faces = face_perm.cycles_on(&gamma);
        let rho_inv = self.rho.inverse();
        let marks: BTreeSet<u32> = self.cilia.iter().map(|&c| rho_inv.apply(c)).collect();
        if faces
            .iter()
            .any(|f| f.iter().filter(|h| marks.contains(h)).count() != 1)
        {
            out.push(Violation::FacesNotCiliated);
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn derive(&self) -> Result<Derived, GraphError> {
        self.validate().map_err(GraphError::Invalid)?;
        let gamma = self.half_edges();
        let rho_inv = self.rho.inverse();
        let vertices = self.cilia.iter().map(|&c| self.vertex_word(c)).collect();
        let faces = self
            .cilia
            .iter()
            .map(|&c| self.face_word(rho_inv.apply(c)))
            .collect();
        let edges = gamma
            .iter()
            .filter(|h| *h % 2 == 1)
            .map(|&h| (h, h + 1))
            .collect();
        Ok(Derived {
            vertices,
            edges,
            faces,
        })
    }

    pub fn invariants(&self) -> Result<Invariants, GraphError> {
        let d = self.derive()?;
        let euler = d.vertices.len() as i64 - d.edges.len() as i64 + d.faces.len() as i64;
        if euler % 2 != 0 || euler > 2 {
            return Err(GraphError::Inconsistent(format!("Euler characteristic {euler}")));
        }
        Ok(Invariants {
            genus: (1 - euler / 2) as u32,
            boundary: d.faces.len() as u32,
            euler,
        })
    }

    /// The standard pair `(g, a)` with `a = |C| − 1`.
    pub fn genus_and_annuli(&self) -> Result<(u32, u32), GraphError> {
        let inv = self.invariants()?;
        Ok((inv.genus, inv.boundary - 1))
    }

    pub fn to_json(&self) -> GraphJson {
        let gamma = self.half_edges();
        let rho = if self.is_valid() {
            self.cilia.iter().map(|&c| self.vertex_word(c)).collect()
        } else {
            self.rho.cycles_on(&gamma)
        };
        GraphJson {
            rho,
            cilia: self.cilia.iter().copied().collect(),
            pt: self.pt,
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, GraphError> {
        KitaevGraph::from_cycles(&j.rho, &j.cilia, j.pt)
    }

    pub fn parse_json(s: &str) -> Result<Self, GraphError> {
        let j: GraphJson =
            serde_json::from_str(s).map_err(|e| GraphError::Format(e.to_string()))?;
        KitaevGraph::from_json(&j)
    }
}

fn kappa_on(gamma: &BTreeSet<u32>) -> Permutation {
    Permutation::from_map(gamma.iter().map(|&h| (h, kappa(h)))).expect("κ is an involution")
}

/// `Φ_{g,a}`: one vertex word `(1 3 2 4)(5 7 6 8)… (4g+1 4g+4 4g+2)…` plus the
/// monovalent vertices `4g+4j+3`.
pub fn standard_graph(g: u32, a: u32) -> Result<KitaevGraph, GraphError> {
    if g + a == 0 {
        return Err(GraphError::EmptyStandard);
    }
    let mut word = Vec::new();
    for k in 0..g {
        let b = 4 * k;
        word.extend([b + 1, b + 3, b + 2, b + 4]);
    }
    let mut cilia = vec![1];
    for j in 0..a {
        let b = 4 * g + 4 * j;
        word.extend([b + 1, b + 4, b + 2]);
        cilia.push(b + 3);
    }
    Ok(KitaevGraph::new(Permutation::cycle(&word), cilia, 1))
}
