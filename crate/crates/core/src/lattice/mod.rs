//! The extended space `M^{⊗E}` of a Kitaev graph and the operators living on it.
//!
//! Every edge `e = (2i−1, 2i)` carries one copy of the bimodule `M`; the legs are
//! ordered by source half-edge, the first leg being the most significant digit of the
//! mixed-radix basis index. An `L`-operator acts through the left action on a target
//! half-edge and through the right action twisted by `S` on a source half-edge; a
//! `T`-operator uses the left coaction on a source and the right coaction twisted by `S`
//! on a target. Composing them around a vertex and a face gives, for every cilium, a
//! left-left Yetter–Drinfeld structure over `H`; [`moves`] transports these structures
//! along edge reversals, edge permutations and edge slides.

mod moves;
mod verify;

pub use moves::Transport;
pub use verify::Report;

use std::collections::BTreeMap;
use std::rc::Rc;

use thiserror::Error;

use crate::exact::{Acc, SVec, Scalar, SparseMat};
use crate::graphs::{kappa, GraphError, KitaevGraph, Move};
use crate::hopf::HopfAlgebra;
use crate::reps::{HopfBimodule, ModComod, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is not a half-edge of the graph")]
    NotAHalfEdge(u32),
    #[error("{0} is not a cilium of the graph")]
    NotACilium(u32),
    #[error("the bimodule has no involution ψ, so edge reversals cannot act")]
    NoInvolution,
    #[error("bimodule and Hopf algebra do not match: {0}")]
    Mismatch(String),
    #[error("move {position} ({generator:?}) is invalid: {reason}")]
    InvalidMove {
        position: usize,
        generator: Move,
        reason: String,
    },
}

/// Leg-local matrices of the `L`- and `T`-operators, indexed by the basis of `H` (for
/// `L`) or the dual basis of `H*` (for `T`). They depend only on whether the half-edge
/// is the source or the target of its edge.
#[derive(Clone, Debug)]
pub(crate) struct LocalOps {
    pub(crate) l_source: Vec<SparseMat>,
    pub(crate) l_target: Vec<SparseMat>,
    pub(crate) t_source: Vec<SparseMat>,
    pub(crate) t_target: Vec<SparseMat>,
}

impl LocalOps {
    fn new(h: &HopfAlgebra, m: &HopfBimodule) -> Self {
        let n = h.dim();
        let s = h.antipode_matrix();
        let l_source = (0..n).map(|k| crate::reps::combine(&m.right_action, s.column(k), m.dim)).collect();
        // α(S(m₍₁₎))m₍₀₎ for α = ζ_k is Σ_j ζ_k(S e_j) C_j
        let t_target = (0..n)
            .map(|k| {
                let mut out = SparseMat::zero(m.dim, m.dim);
                for j in 0..n {
                    let c = s.get(k, j);
                    if !c.is_zero() {
                        out = out.add_scaled(&c, &m.right_coaction[j]);
                    }
                }
                out
            })
            .collect();
        LocalOps {
            l_source,
            l_target: m.left_action.clone(),
            t_source: m.left_coaction.clone(),
            t_target,
        }
    }
}

/// `M_Γ = ⊗_{e ∈ E} M_e` over a Kitaev graph.
#[derive(Clone, Debug)]
pub struct ExtendedSpace {
    graph: KitaevGraph,
    hopf: Rc<HopfAlgebra>,
    bimodule: Rc<HopfBimodule>,
    sources: Vec<u32>,
    strides: Vec<usize>,
    total_dim: usize,
    pub(crate) local: Rc<LocalOps>,
}

impl ExtendedSpace {
    pub fn new(graph: KitaevGraph, hopf: Rc<HopfAlgebra>, bimodule: Rc<HopfBimodule>) -> Result<Self, LatticeError> {
        let n = hopf.dim();
        if bimodule.left_action.len() != n || bimodule.right_coaction.len() != n {
            return Err(LatticeError::Mismatch(format!(
                "bimodule structure maps are indexed by {} elements, the algebra has dimension {n}",
                bimodule.left_action.len()
            )));
        }
        let local = Rc::new(LocalOps::new(&hopf, &bimodule));
        Self::with_local(graph, hopf, bimodule, local)
    }

    fn with_local(
        graph: KitaevGraph,
        hopf: Rc<HopfAlgebra>,
        bimodule: Rc<HopfBimodule>,
        local: Rc<LocalOps>,
    ) -> Result<Self, LatticeError> {
        graph.validate().map_err(GraphError::Invalid)?;
        let sources: Vec<u32> = graph.half_edges().into_iter().filter(|h| h % 2 == 1).collect();
        let d = bimodule.dim;
        let e = sources.len();
        let strides: Vec<usize> = (0..e).map(|p| d.pow((e - 1 - p) as u32)).collect();
        let total_dim = d.pow(e as u32);
        Ok(ExtendedSpace { graph, hopf, bimodule, sources, strides, total_dim, local })
    }

    /// The same bimodule over another graph, sharing the local operator tables.
    pub(crate) fn rebuild(&self, graph: KitaevGraph) -> Result<Self, LatticeError> {
        Self::with_local(graph, self.hopf.clone(), self.bimodule.clone(), self.local.clone())
    }

    pub fn graph(&self) -> &KitaevGraph {
        &self.graph
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn hopf_rc(&self) -> Rc<HopfAlgebra> {
        self.hopf.clone()
    }

    pub fn bimodule(&self) -> &HopfBimodule {
        &self.bimodule
    }

    pub fn bimodule_rc(&self) -> Rc<HopfBimodule> {
        self.bimodule.clone()
    }

    /// Source half-edges in leg order.
    pub fn edge_order(&self) -> &[u32] {
        &self.sources
    }

    pub fn num_legs(&self) -> usize {
        self.sources.len()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// Cilia in increasing order; this is the order of the tensor factors of `H_Γ`.
    pub fn cilia(&self) -> Vec<u32> {
        self.graph.cilia.iter().copied().collect()
    }

    /// Position of the edge of `h` in the leg order.
    pub fn leg_of(&self, h: u32) -> Result<usize, LatticeError> {
        let s = if h % 2 == 1 { h } else { kappa(h) };
        self.sources.binary_search(&s).map_err(|_| LatticeError::NotAHalfEdge(h))
    }

    fn check_cilium(&self, c: u32) -> Result<(), LatticeError> {
        if self.graph.cilia.contains(&c) {
            Ok(())
        } else {
            Err(LatticeError::NotACilium(c))
        }
    }

    /// Mixed-radix digits of a basis index, one per leg.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        let d = self.bimodule.dim;
        self.strides.iter().map(|s| (index / s) % d).collect()
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.strides).map(|(x, s)| x * s).sum()
    }

    pub(crate) fn apply_local_into(&self, acc: &mut Acc, leg: usize, mat: &SparseMat, v: &SVec, scale: &Scalar) {
        let d = self.bimodule.dim;
        let stride = self.strides[leg];
        for (i, c) in v.iter() {
            let digit = (i / stride) % d;
            let base = i - digit * stride;
            let c = scale * c;
            for (r, x) in mat.column(digit).iter() {
                acc.add(base + r * stride, &(&c * x));
            }
        }
    }

    /// `(id ⊗ ⋯ ⊗ mat ⊗ ⋯ ⊗ id) ∘ m` with `mat` on the given leg.
    pub(crate) fn local_times(&self, leg: usize, mat: &SparseMat, m: &SparseMat) -> SparseMat {
        let mut acc = Acc::new(self.total_dim);
        let one = Scalar::one();
        let cols = m
            .columns()
            .iter()
            .map(|col| {
                self.apply_local_into(&mut acc, leg, mat, col, &one);
                acc.drain()
            })
            .collect();
        SparseMat::from_columns(self.total_dim, cols)
    }

    /// `mat` placed on one leg of the full space.
    pub(crate) fn embed(&self, leg: usize, mat: &SparseMat) -> SparseMat {
        self.local_times(leg, mat, &SparseMat::identity(self.total_dim))
    }

    fn l_family(&self, h: u32) -> &[SparseMat] {
        if h % 2 == 1 {
            &self.local.l_source
        } else {
            &self.local.l_target
        }
    }

    fn t_family(&self, h: u32) -> &[SparseMat] {
        if h % 2 == 1 {
            &self.local.t_source
        } else {
            &self.local.t_target
        }
    }

    /// Leg-local matrix of `L_h(a)`.
    pub fn l_local(&self, h: u32, a: &SVec) -> Result<SparseMat, LatticeError> {
        self.leg_of(h)?;
        Ok(crate::reps::combine(self.l_family(h), a, self.bimodule.dim))
    }

    /// Leg-local matrix of `T_h(α)`, with `α` in coordinates of the dual basis.
    pub fn t_local(&self, h: u32, alpha: &SVec) -> Result<SparseMat, LatticeError> {
        self.leg_of(h)?;
        Ok(crate::reps::combine(self.t_family(h), alpha, self.bimodule.dim))
    }

    /// `L_h(a)` on the full space.
    pub fn l_operator(&self, h: u32, a: &SVec) -> Result<SparseMat, LatticeError> {
        let leg = self.leg_of(h)?;
        Ok(self.embed(leg, &self.l_local(h, a)?))
    }

    /// `T_h(α)` on the full space, `α = Σ α_k ζ_k`.
    pub fn t_operator(&self, h: u32, alpha: &SVec) -> Result<SparseMat, LatticeError> {
        let leg = self.leg_of(h)?;
        Ok(self.embed(leg, &self.t_local(h, alpha)?))
    }

    /// `A_v(a)` for the vertex `v` of the cilium `c`: `L_{h_i}(a₍ᵢ₎) ∘ ⋯ ∘ L_{h₁}(a₍₁₎)`
    /// along the vertex word read from `c`.
    pub fn vertex_action(&self, c: u32, a: &SVec) -> Result<SparseMat, LatticeError> {
        self.check_cilium(c)?;
        let n = self.hopf.dim();
        let word = self.graph.vertex_word(c);
        // state[y]: the operator built so far, with e_y still to be distributed
        let mut state: Vec<Option<SparseMat>> = vec![None; n];
        for (y, v) in a.iter() {
            state[*y] = Some(SparseMat::identity(self.total_dim).scale(v));
        }
        let (last, init) = word.split_last().expect("vertex words are nonempty");
        for &h in init {
            let leg = self.leg_of(h)?;
            let fam = self.l_family(h);
            let mut next: Vec<Option<SparseMat>> = vec![None; n];
            for (y, w) in state.iter().enumerate() {
                let Some(w) = w else { continue };
                for (p, q, c) in self.hopf.comul_basis(y) {
                    let term = self.local_times(leg, &fam[*p], w).scale(c);
                    next[*q] = Some(match next[*q].take() {
                        None => term,
                        Some(acc) => acc.add(&term),
                    });
                }
            }
            state = next;
        }
        let leg = self.leg_of(*last)?;
        let fam = self.l_family(*last);
        let mut out = SparseMat::zero(self.total_dim, self.total_dim);
        for (y, w) in state.iter().enumerate() {
            if let Some(w) = w {
                out = out.add(&self.local_times(leg, &fam[y], w));
            }
        }
        Ok(out)
    }

    /// The face of the cilium `c`, read from `ρ⁻¹(c)`.
    pub fn face_of(&self, c: u32) -> Result<Vec<u32>, LatticeError> {
        self.check_cilium(c)?;
        Ok(self.graph.face_word(self.graph.rho.inverse().apply(c)))
    }

    /// Components of the face coaction `δ_f(m) = Σ_y e_y ⊗ C_y m` for the face
    /// `f = [k₁, …, k_j]` of `c`.
    ///
    /// If `T_{k_i}` reads off the element `xᵢ` of `H`, the coaction records the product
    /// `x_j ⋯ x₁`, so `C_y = B_f(ζ_y) = T_{k₁}(ζ_y₍ⱼ₎) ∘ ⋯ ∘ T_{k_j}(ζ_y₍₁₎)`. With the
    /// opposite product `x₁ ⋯ x_j` the face coaction is still a comodule, but it fails
    /// the Yetter–Drinfeld law with the vertex action, already for `kS₃` on the annulus.
    pub fn face_coaction(&self, c: u32) -> Result<Vec<SparseMat>, LatticeError> {
        let word = self.face_of(c)?;
        let h = &self.hopf;
        let n = h.dim();
        let mut state: Vec<Option<SparseMat>> = vec![None; n];
        for (u, v) in h.one().iter() {
            state[*u] = Some(SparseMat::identity(self.total_dim).scale(v));
        }
        for &k in &word {
            let leg = self.leg_of(k)?;
            let fam = self.t_family(k);
            let mut next: Vec<Option<SparseMat>> = vec![None; n];
            for (x, w) in state.iter().enumerate() {
                let Some(w) = w else { continue };
                // the new factor multiplies the product read so far from the left
                for (i, t) in fam.iter().enumerate() {
                    let prod = h.mul_basis(i, x);
                    if prod.is_zero() || t.is_zero() {
                        continue;
                    }
                    let moved = self.local_times(leg, t, w);
                    for (y, coef) in prod.iter() {
                        let term = moved.scale(coef);
                        next[*y] = Some(match next[*y].take() {
                            None => term,
                            Some(acc) => acc.add(&term),
                        });
                    }
                }
            }
            state = next;
        }
        Ok(state
            .into_iter()
            .map(|w| w.unwrap_or_else(|| SparseMat::zero(self.total_dim, self.total_dim)))
            .collect())
    }

    /// `B_f(α)` for `α = Σ α_k ζ_k`.
    pub fn face_operator(&self, c: u32, alpha: &SVec) -> Result<SparseMat, LatticeError> {
        let comps = self.face_coaction(c)?;
        Ok(crate::reps::combine(&comps, alpha, self.total_dim))
    }

    /// The left-left module-comodule over `H` at one cilium.
    pub fn cilium_module(&self, c: u32) -> Result<ModComod, LatticeError> {
        let n = self.hopf.dim();
        let action = (0..n)
            .map(|x| self.vertex_action(c, &SVec::unit(x)))
            .collect::<Result<Vec<_>, _>>()?;
        let coaction = self.face_coaction(c)?;
        Ok(ModComod { dim: self.total_dim, side: Side::LeftLeft, action, coaction })
    }

    /// All cilium modules, keyed by cilium.
    pub fn cilium_modules(&self) -> Result<BTreeMap<u32, ModComod>, LatticeError> {
        self.cilia().into_iter().map(|c| Ok((c, self.cilium_module(c)?))).collect()
    }

    /// `M_Γ` as a left-left Yetter–Drinfeld module over `H_Γ = H^{⊗C}`, the first cilium
    /// being the most significant tensor factor.
    pub fn global_module(&self) -> Result<(HopfAlgebra, ModComod), LatticeError> {
        let cilia = self.cilia();
        let hg = self.hopf.tensor_power(cilia.len());
        let mods = cilia.iter().map(|&c| self.cilium_module(c)).collect::<Result<Vec<_>, _>>()?;
        let n = self.hopf.dim();
        let product = |pick: &dyn Fn(&ModComod, usize) -> SparseMat, idx: usize| {
            let mut rest = idx;
            let mut factors = Vec::with_capacity(mods.len());
            for m in mods.iter().rev() {
                factors.push(pick(m, rest % n));
                rest /= n;
            }
            factors
                .into_iter()
                .reduce(|acc, f| acc.mul(&f))
                .expect("graphs have at least one cilium")
        };
        let action = (0..hg.dim()).map(|i| product(&|m, k| m.action[k].clone(), i)).collect();
        let coaction = (0..hg.dim()).map(|i| product(&|m, k| m.coaction[k].clone(), i)).collect();
        Ok((hg, ModComod { dim: self.total_dim, side: Side::LeftLeft, action, coaction }))
    }
}

#[cfg(test)]
mod tests;
