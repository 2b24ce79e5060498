use std::collections::BTreeMap;
use std::rc::Rc;

use crate::exact::{SVec, SparseMat};
use crate::graphs::KitaevGraph;
use crate::hopf::{Character, GroupLike, HopfAlgebra};
use crate::lattice::ExtendedSpace;
use crate::reps::{coinvariants, unit_bimodule, HopfBimodule, ModComod, Side};

use super::bitensor::{bitensor_multi, MultiResult, Strategy, YdFamily};
use super::bosonisation::{isotypic_dim, SplitProjection};
use super::ProtectError;

/// Input of a protected space computation. The coefficient sits at the distinguished
/// cilium; every other cilium receives the filler `k^{p⁻²}_{χ²}` determined by the
/// coinvariants of the bimodule.
#[derive(Clone, Debug)]
pub struct ProtectedSpec {
    pub hopf: Rc<HopfAlgebra>,
    pub bimodule: Rc<HopfBimodule>,
    pub graph: KitaevGraph,
    pub coefficient: ModComod,
}

#[derive(Clone, Debug)]
pub struct Protected {
    pub dim: usize,
    pub p: GroupLike,
    pub chi: Character,
    pub multi: MultiResult,
}

/// Reads `(p, χ)` off the coinvariants `M^coinv ≅ k^p_{χ⁻¹}`.
pub fn coinvariant_pair(h: &HopfAlgebra, m: &HopfBimodule) -> Result<(GroupLike, Character), ProtectError> {
    let co = coinvariants(h, m)?;
    if co.module.dim != 1 {
        return Err(ProtectError::NotInduced(format!("the coinvariants have dimension {}", co.module.dim)));
    }
    let entry = |f: &SparseMat| f.get(0, 0);
    let p = GroupLike {
        element: SVec::from_pairs(co.module.coaction.iter().enumerate().map(|(i, f)| (i, entry(f)))),
    };
    if h.comul(&p.element) != crate::reps::tensor(&p.element, &p.element, h.dim()) || !h.counit(&p.element).is_one() {
        return Err(ProtectError::NotInduced("the coinvariants are not graded by a group-like element".into()));
    }
    let chi_inv = Character {
        values: co.module.action.iter().map(entry).collect(),
    };
    Ok((p, chi_inv.inverse(h)))
}

/// `k^{p⁻²}_{χ²}` as a right-right module-comodule.
pub fn filler(h: &HopfAlgebra, p: &GroupLike, chi: &Character) -> ModComod {
    let p_inv = p.inverse(h);
    let g = GroupLike {
        element: h.mul(&p_inv.element, &p_inv.element),
    };
    ModComod::one_dim(h, &g, &chi.convolve(chi, h), Side::RightRight)
}

/// The unit object `U = H ⊗ H` as a right-right module-comodule.
pub fn unit_coefficient(h: &HopfAlgebra) -> ModComod {
    unit_bimodule(h).right_right()
}

/// `Inf_H^A(X)`: the action pulled back along `π`, the coaction pushed forward along `ι`.
pub fn inflate(x: &ModComod, split: &SplitProjection) -> Result<ModComod, ProtectError> {
    if x.side != Side::RightRight || x.hopf_dim() != split.pi.nrows() {
        return Err(ProtectError::Mismatch("inflation needs a right-right object over the quotient".into()));
    }
    let na = split.pi.ncols();
    let action = (0..na).map(|k| x.action_of(split.pi.column(k))).collect();
    let mut coaction = vec![SparseMat::zero(x.dim, x.dim); na];
    for i in 0..x.hopf_dim() {
        for (j, c) in split.iota.column(i).iter() {
            coaction[*j] = coaction[*j].add_scaled(c, &x.coaction[i]);
        }
    }
    Ok(ModComod {
        dim: x.dim,
        side: Side::RightRight,
        action,
        coaction,
    })
}

/// Dimension of `{m : δ(m) = 1 ⊗ m, h ▷ m = ε(h) m}`.
pub fn invariant_dim(h: &HopfAlgebra, m: &ModComod) -> usize {
    let one = GroupLike { element: h.one().clone() };
    isotypic_dim(h, m, &one, &Character::counit(h))
}

/// The coefficient system of a graph: `x` at the distinguished cilium, `fill` elsewhere.
pub(crate) fn coefficient_system(graph: &KitaevGraph, x: &ModComod, fill: &ModComod) -> BTreeMap<u32, ModComod> {
    graph
        .cilia
        .iter()
        .map(|&c| (c, if c == graph.pt { x.clone() } else { fill.clone() }))
        .collect()
}

/// Fillers first, in increasing order, then the distinguished cilium.
pub(crate) fn default_order(graph: &KitaevGraph) -> Vec<u32> {
    let mut order: Vec<u32> = graph.cilia.iter().copied().filter(|&c| c != graph.pt).collect();
    order.push(graph.pt);
    order
}

/// `Prot(Γ, X) = Bit_{H_Γ}^{H_Γ}(X_Γ, M_Γ)`, computed cilium by cilium.
pub fn protected_space(spec: &ProtectedSpec) -> Result<Protected, ProtectError> {
    protected_space_with(spec, &Strategy::Sequential(default_order(&spec.graph)))
}

pub fn protected_space_with(spec: &ProtectedSpec, strategy: &Strategy) -> Result<Protected, ProtectError> {
    let h = spec.hopf.as_ref();
    let (p, chi) = coinvariant_pair(h, &spec.bimodule)?;
    let space = ExtendedSpace::new(spec.graph.clone(), spec.hopf.clone(), spec.bimodule.clone())?;
    let family = YdFamily::from_space(&space)?;
    let xs = coefficient_system(&spec.graph, &spec.coefficient, &filler(h, &p, &chi));
    let multi = bitensor_multi(h, &xs, &family, strategy)?;
    Ok(Protected {
        dim: multi.dim_bitensor,
        p,
        chi,
        multi,
    })
}
