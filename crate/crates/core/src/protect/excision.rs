//! The excision sequence `0 → Prot(Γ) ⊗ Prot(Δ) → Prot(Γ # Δ) → CBit → 0`.
//!
//! Everything is computed on the distinguished cilia. After the bitensor products over the
//! other cilia of `Γ` and `Δ` have been taken, what is left are left-left objects `P` and
//! `Q`, and `R = Bit_H(X ⊗ Y, P ⊗ Q)` is the protected space of the connected sum. The
//! auxiliary space `Aux` is the image of the diagonal cotensor product `(X⊗Y) □_H (P⊗Q)`
//! in `(X ⊗_H P) ⊗ (Y ⊗_H Q)`. It receives `R` through `ν` and `S = Bit(X, P) ⊗ Bit(Y, Q)`
//! through `κ`, and `CBit = ker ν ⊕ coker κ`.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::exact::{Echelon, Frame, SVec, SparseMat};
use crate::graphs::{connected_sum, KitaevGraph};
use crate::hopf::HopfAlgebra;
use crate::lattice::ExtendedSpace;
use crate::reps::{tensor, HopfBimodule, ModComod};

use super::bitensor::{algebra_generators, bitensor, bitensor_multi, subquotient, BitensorResult, Strategy, YdFamily};
use super::protected::{coefficient_system, coinvariant_pair, filler, protected_space, ProtectedSpec};
use super::ProtectError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcisionReport {
    pub dim_gamma: usize,
    pub dim_delta: usize,
    /// `Prot(Γ # Δ)` computed directly on the glued graph.
    pub dim_direct: usize,
    pub dim_r: usize,
    pub dim_aux: usize,
    pub dim_s: usize,
    pub rank_nu: usize,
    pub rank_kappa: usize,
    /// Whether `κ` lands in `Aux`.
    pub kappa_contained: bool,
    pub dim_cbit: usize,
    pub f_injective: bool,
    pub g_surjective: bool,
    pub composite_zero: bool,
}

impl ExcisionReport {
    pub fn nu_surjective(&self) -> bool {
        self.rank_nu == self.dim_aux
    }

    pub fn kappa_injective(&self) -> bool {
        self.kappa_contained && self.rank_kappa == self.dim_s
    }

    pub fn exact(&self) -> bool {
        self.f_injective && self.g_surjective && self.composite_zero && self.dim_r == self.dim_s + self.dim_cbit
    }

    pub fn dimension_identity(&self) -> bool {
        self.dim_direct == self.dim_gamma * self.dim_delta + self.dim_cbit
    }

    pub fn holds(&self) -> bool {
        self.dim_r == self.dim_direct
            && self.dim_s == self.dim_gamma * self.dim_delta
            && self.nu_surjective()
            && self.kappa_injective()
            && self.exact()
            && self.dimension_identity()
    }
}

/// The left-left structure left at the distinguished cilium once every other cilium has
/// been paired with the filler. For a graph with a single cilium this is its cilium module.
pub fn distinguished_residual(
    h: &HopfAlgebra,
    space: &ExtendedSpace,
    fill: &ModComod,
) -> Result<ModComod, ProtectError> {
    let graph = space.graph();
    let family = YdFamily::from_space(space)?;
    let mut xs: BTreeMap<u32, ModComod> = coefficient_system(graph, fill, fill);
    xs.remove(&graph.pt);
    if xs.is_empty() {
        return Ok(family.modules[&graph.pt].clone());
    }
    let order = xs.keys().copied().collect();
    let multi = bitensor_multi(h, &xs, &family, &Strategy::Sequential(order))?;
    Ok(multi.residual.modules[&graph.pt].clone())
}

/// Rank of the map whose columns are `cols`, with a frame over its image.
fn frame_of(dim: usize, cols: &[SVec]) -> (Frame, Vec<usize>) {
    let mut frame = Frame::new(dim);
    let mut members = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if frame.push(c) {
            members.push(j);
        }
    }
    (frame, members)
}

/// Reindexes `(x, p, y, q)` to `(x, y, p, q)`.
fn interleave(v: &SVec, dy: usize, dp: usize, dq: usize) -> SVec {
    SVec::from_pairs(v.iter().map(|(idx, c)| {
        let q = idx % dq;
        let y = (idx / dq) % dy;
        let p = (idx / (dq * dy)) % dp;
        let x = idx / (dq * dy * dp);
        (((x * dy + y) * dp + p) * dq + q, c.clone())
    }))
}

fn aux_space(h: &HopfAlgebra, x: &ModComod, y: &ModComod, p: &ModComod, q: &ModComod) -> BitensorResult {
    let xy = x.tensor(y, h).expect("both right-right");
    let pq = p.tensor(q, h).expect("both left-left");
    let (dxy, dpq) = (xy.dim, pq.dim);
    let constraints: Vec<SparseMat> = (0..h.dim())
        .map(|i| {
            xy.coaction[i]
                .kron(&SparseMat::identity(dpq))
                .sub(&SparseMat::identity(dxy).kron(&pq.coaction[i]))
        })
        .collect();
    let id = SparseMat::identity;
    let (dx, dy, dp, dq) = (x.dim, y.dim, p.dim, q.dim);
    let mut relations = Vec::new();
    for a in algebra_generators(h) {
        let on_x = x.action[a].kron(&id(dy * dp * dq));
        let on_p = id(dx * dy).kron(&p.action[a]).kron(&id(dq));
        let on_y = id(dx).kron(&y.action[a]).kron(&id(dp * dq));
        let on_q = id(dx * dy * dp).kron(&q.action[a]);
        relations.extend(on_x.sub(&on_p).columns().iter().cloned());
        relations.extend(on_y.sub(&on_q).columns().iter().cloned());
    }
    subquotient(dxy * dpq, &constraints, relations)
}

/// Runs the excision sequence for `Γ # Δ` with `X` at the distinguished cilium of `Γ`
/// and `Y` at that of `Δ`.
pub fn excision_check(
    hopf: Rc<HopfAlgebra>,
    bimodule: Rc<HopfBimodule>,
    gamma: &KitaevGraph,
    x: &ModComod,
    delta: &KitaevGraph,
    y: &ModComod,
) -> Result<ExcisionReport, ProtectError> {
    let h = hopf.as_ref();
    let (pg, chi) = coinvariant_pair(h, &bimodule)?;
    let fill = filler(h, &pg, &chi);
    let space_g = ExtendedSpace::new(gamma.clone(), hopf.clone(), bimodule.clone())?;
    let space_d = ExtendedSpace::new(delta.clone(), hopf.clone(), bimodule.clone())?;
    let p = distinguished_residual(h, &space_g, &fill)?;
    let q = distinguished_residual(h, &space_d, &fill)?;

    let xy = x.tensor(y, h)?;
    let pq = p.tensor(&q, h)?;
    let r = bitensor(h, &xy, &pq)?;
    let direct = protected_space(&ProtectedSpec {
        hopf: hopf.clone(),
        bimodule: bimodule.clone(),
        graph: connected_sum(gamma, delta)?.graph,
        coefficient: xy.clone(),
    })?
    .dim;

    let bit_g = bitensor(h, x, &p)?;
    let bit_d = bitensor(h, y, &q)?;
    let aux = aux_space(h, x, y, &p, &q);
    let (dy, dp, dq) = (y.dim, p.dim, q.dim);

    let to_aux = |w: &SVec| aux.bit_coords(&aux.project(w));
    let nu_cols: Vec<SVec> = r
        .lifts
        .iter()
        .map(|w| to_aux(w).ok_or_else(|| ProtectError::NotStable("ν leaves Aux".into())))
        .collect::<Result<_, _>>()?;
    let mut kappa_cols = Vec::new();
    let mut kappa_contained = true;
    for u in &bit_g.lifts {
        for v in &bit_d.lifts {
            let w = interleave(&tensor(u, v, dy * dq), dy, dp, dq);
            match to_aux(&w) {
                Some(c) => kappa_cols.push(c),
                None => {
                    kappa_contained = false;
                    kappa_cols.push(SVec::new());
                }
            }
        }
    }
    let dim_aux = aux.dim_bitensor;
    let (dim_r, dim_s) = (r.dim_bitensor, kappa_cols.len());
    let nu = SparseMat::from_columns(dim_aux, nu_cols.clone());
    let (nu_frame, nu_members) = frame_of(dim_aux, &nu_cols);
    let (_, kappa_members) = frame_of(dim_aux, &kappa_cols);
    let (rank_nu, rank_kappa) = (nu_members.len(), kappa_members.len());

    // a section of ν on its image: each Aux basis vector goes to a combination of R basis vectors
    let section = |a: &SVec| -> Option<SVec> {
        nu_frame
            .coords(a)
            .map(|c| SVec::from_pairs(c.iter().map(|(k, v)| (nu_members[*k], v.clone()))))
    };
    let f_cols: Vec<SVec> = kappa_cols.iter().filter_map(&section).collect();
    let f_injective = f_cols.len() == dim_s && frame_of(dim_r, &f_cols).1.len() == dim_s;

    let ker_nu = nu.kernel();
    let (ker_frame, _) = frame_of(dim_r, &ker_nu);
    let coker = Echelon::from_vectors(dim_aux, &kappa_cols);
    let coker_map = coker.quotient_map();
    let (dk, dc) = (ker_nu.len(), coker_map.dim());
    let dim_cbit = (dim_r - rank_nu) + (dim_aux - rank_kappa);

    // g(r) = (r − s̃ν(r), [ν(r)]) in ker ν ⊕ coker κ
    let g_of = |rv: &SVec| -> Option<SVec> {
        let image = nu.apply(rv);
        let back = section(&image)?;
        let k = ker_frame.coords(&rv.sub(&back))?;
        let c = coker_map.coords(&coker.reduce(&image));
        Some(k.add(&c.map_indices(|i| i + dk)))
    };
    let g_cols: Vec<Option<SVec>> = (0..dim_r).map(|i| g_of(&SVec::unit(i))).collect();
    let g_defined = g_cols.iter().all(Option::is_some);
    let g_cols: Vec<SVec> = g_cols.into_iter().flatten().collect();
    let g_surjective = g_defined && frame_of(dk + dc, &g_cols).1.len() == dim_cbit;
    let composite_zero = g_defined
        && f_cols
            .iter()
            .all(|fv| SparseMat::from_columns(dk + dc, g_cols.clone()).apply(fv).is_zero());

    Ok(ExcisionReport {
        dim_gamma: bit_g.dim_bitensor,
        dim_delta: bit_d.dim_bitensor,
        dim_direct: direct,
        dim_r,
        dim_aux,
        dim_s,
        rank_nu,
        rank_kappa,
        kappa_contained,
        dim_cbit,
        f_injective,
        g_surjective,
        composite_zero,
    })
}
