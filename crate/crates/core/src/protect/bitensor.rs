use std::collections::BTreeMap;

use crate::exact::{kernel_of_rows, Acc, Echelon, Frame, QuotientMap, SVec, SparseMat};
use crate::hopf::HopfAlgebra;
use crate::lattice::ExtendedSpace;
use crate::reps::{ModComod, Side};

use super::ProtectError;

/// A vector space with one left-left module-comodule structure over `H` per cilium,
/// the structures for distinct cilia commuting with each other.
#[derive(Clone, Debug)]
pub struct YdFamily {
    pub dim: usize,
    pub modules: BTreeMap<u32, ModComod>,
}

impl YdFamily {
    pub fn from_space(space: &ExtendedSpace) -> Result<YdFamily, ProtectError> {
        Ok(YdFamily {
            dim: space.total_dim(),
            modules: space.cilium_modules()?,
        })
    }

    pub fn single(key: u32, m: ModComod) -> YdFamily {
        YdFamily {
            dim: m.dim,
            modules: BTreeMap::from([(key, m)]),
        }
    }

    pub fn cilia(&self) -> Vec<u32> {
        self.modules.keys().copied().collect()
    }
}

/// Outcome of a bitensor computation inside an ambient space `X ⊗ M`, indexed by
/// `x · dim M + m`.
#[derive(Clone, Debug)]
pub struct BitensorResult {
    pub dim_ambient: usize,
    pub dim_cotensor: usize,
    pub dim_tensor_over: usize,
    pub dim_bitensor: usize,
    /// Basis of the bitensor product in the coordinates of the tensor product.
    pub basis_bitensor: Vec<SVec>,
    /// `ι`: columns are a basis of the cotensor product inside the ambient space.
    pub iota: SparseMat,
    /// `pr`: cotensor coordinates to bitensor coordinates.
    pub pr: SparseMat,
    /// `i`: bitensor coordinates to tensor product coordinates.
    pub incl: SparseMat,
    /// One preimage in the cotensor product for every basis vector of the bitensor product.
    pub lifts: Vec<SVec>,
    relations: Echelon,
    quotient: QuotientMap,
    frame: Frame,
}

impl BitensorResult {
    /// Image of an ambient vector in the tensor product.
    pub fn project(&self, v: &SVec) -> SVec {
        self.quotient.coords(&self.relations.reduce(v))
    }

    /// `π` as a matrix. This is dense in general, so it is built on request.
    pub fn pi_matrix(&self) -> SparseMat {
        SparseMat::from_fn(self.dim_tensor_over, self.dim_ambient, |j| self.project(&SVec::unit(j)))
    }

    /// Coordinates of a tensor product vector in the bitensor basis, if it lies in the
    /// bitensor product.
    pub fn bit_coords(&self, q: &SVec) -> Option<SVec> {
        self.frame.coords(q)
    }

    /// The map induced on the bitensor product by an operator on the ambient space that
    /// preserves both the cotensor product and the relations.
    pub fn induced(&self, op: impl Fn(&SVec) -> SVec) -> Result<SparseMat, ProtectError> {
        let cols = self
            .lifts
            .iter()
            .map(|w| {
                self.bit_coords(&self.project(&op(w)))
                    .ok_or_else(|| ProtectError::NotStable("operator leaves the bitensor product".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMat::from_columns(self.dim_bitensor, cols))
    }
}

/// Image of the cotensor product (the common kernel of `constraints`) modulo the span of
/// `relations`.
pub(crate) fn subquotient(ambient: usize, constraints: &[SparseMat], relations: impl IntoIterator<Item = SVec>) -> BitensorResult {
    let rows: Vec<SVec> = constraints.iter().flat_map(|d| d.transpose().columns().to_vec()).collect();
    let cot = if rows.is_empty() {
        (0..ambient).map(SVec::unit).collect()
    } else {
        kernel_of_rows(&rows, ambient)
    };
    let mut rel = Echelon::new(ambient);
    for r in relations {
        rel.insert(&r);
    }
    let quotient = rel.quotient_map();
    let mut frame = Frame::new(quotient.dim());
    let mut lifts = Vec::new();
    let mut basis = Vec::new();
    let images: Vec<SVec> = cot.iter().map(|w| quotient.coords(&rel.reduce(w))).collect();
    for (w, q) in cot.iter().zip(&images) {
        if frame.push(q) {
            lifts.push(w.clone());
            basis.push(q.clone());
        }
    }
    let b = basis.len();
    let pr_cols = images
        .iter()
        .map(|q| frame.coords(q).expect("cotensor images span the bitensor product"))
        .collect();
    BitensorResult {
        dim_ambient: ambient,
        dim_cotensor: cot.len(),
        dim_tensor_over: quotient.dim(),
        dim_bitensor: b,
        incl: SparseMat::from_columns(quotient.dim(), basis.clone()),
        basis_bitensor: basis,
        iota: SparseMat::from_columns(ambient, cot),
        pr: SparseMat::from_columns(b, pr_cols),
        lifts,
        relations: rel,
        quotient,
        frame,
    }
}

/// Generators of `H` as an algebra, chosen greedily among the basis elements.
pub fn algebra_generators(h: &HopfAlgebra) -> Vec<usize> {
    let closure = |gens: &[usize]| {
        let mut span = Echelon::new(h.dim());
        span.insert(h.one());
        let mut queue = vec![h.one().clone()];
        while let Some(v) = queue.pop() {
            for &g in gens {
                let w = h.mul(&v, &SVec::unit(g));
                if span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    };
    let mut gens = Vec::new();
    let mut span = closure(&gens);
    for i in 0..h.dim() {
        if !span.contains(&SVec::unit(i)) {
            gens.push(i);
            span = closure(&gens);
        }
    }
    gens
}

fn check_pair(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Result<(), ProtectError> {
    if x.side != Side::RightRight || m.side != Side::LeftLeft {
        return Err(ProtectError::Mismatch("expected a right-right and a left-left object".into()));
    }
    if x.hopf_dim() != h.dim() || m.hopf_dim() != h.dim() {
        return Err(ProtectError::Mismatch(format!(
            "structures over algebras of dimension {} and {}, expected {}",
            x.hopf_dim(),
            m.hopf_dim(),
            h.dim()
        )));
    }
    Ok(())
}

/// `I_a ⊗ F ⊗ I_b`.
fn sandwich(before: usize, f: &SparseMat, after: usize) -> SparseMat {
    SparseMat::identity(before).kron(f).kron(&SparseMat::identity(after))
}

/// `X ⊗_H M`: its dimension and the projection `π` from `X ⊗ M`.
pub fn tensor_over(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Result<(usize, SparseMat), ProtectError> {
    check_pair(h, x, m)?;
    let r = subquotient(x.dim * m.dim, &[], relation_vectors(h, x, m));
    Ok((r.dim_tensor_over, r.pi_matrix()))
}

/// `X □_H M`: its dimension and the inclusion `ι` into `X ⊗ M`.
pub fn cotensor(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Result<(usize, SparseMat), ProtectError> {
    check_pair(h, x, m)?;
    let r = subquotient(x.dim * m.dim, &coaction_constraints(h, x, m), []);
    Ok((r.dim_cotensor, r.iota))
}

/// `Bit_H^H(X, M)`.
pub fn bitensor(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Result<BitensorResult, ProtectError> {
    check_pair(h, x, m)?;
    Ok(subquotient(
        x.dim * m.dim,
        &coaction_constraints(h, x, m),
        relation_vectors(h, x, m),
    ))
}

fn coaction_constraints(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Vec<SparseMat> {
    (0..h.dim())
        .map(|i| {
            x.coaction[i]
                .kron(&SparseMat::identity(m.dim))
                .sub(&SparseMat::identity(x.dim).kron(&m.coaction[i]))
        })
        .collect()
}

fn relation_vectors(h: &HopfAlgebra, x: &ModComod, m: &ModComod) -> Vec<SVec> {
    algebra_generators(h)
        .into_iter()
        .flat_map(|a| {
            x.action[a]
                .kron(&SparseMat::identity(m.dim))
                .sub(&SparseMat::identity(x.dim).kron(&m.action[a]))
                .columns()
                .to_vec()
        })
        .collect()
}

/// `(I_X ⊗ F) w` for `w ∈ X ⊗ M`.
pub(crate) fn apply_right(dim_m: usize, f: &SparseMat, w: &SVec) -> SVec {
    let mut acc = Acc::new(w.max_index().map_or(0, |i| (i / dim_m + 1) * dim_m));
    for (idx, c) in w.iter() {
        let (xi, mi) = (idx / dim_m, idx % dim_m);
        for (r, v) in f.column(mi).iter() {
            acc.add(xi * dim_m + r, &(c * v));
        }
    }
    acc.drain()
}

/// How [`bitensor_multi`] runs through the cilia.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// All cilia at once, over `H^{⊗|S|}`.
    OneShot,
    /// One cilium per stage, in the given order; each stage takes the bitensor product
    /// with the residual structure left by the previous one.
    Sequential(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageSummary {
    pub cilia: Vec<u32>,
    pub dim_cotensor: usize,
    pub dim_tensor_over: usize,
    pub dim_bitensor: usize,
}

#[derive(Clone, Debug)]
pub struct MultiResult {
    pub dim_bitensor: usize,
    pub stages: Vec<StageSummary>,
    /// The last stage.
    pub last: BitensorResult,
    /// Structures induced on the result by the cilia that were not used.
    pub residual: YdFamily,
}

/// Bitensor product over the cilia `S` carrying the coefficients `xs`, with the remaining
/// cilia of `family` acting on the result.
fn stage(h: &HopfAlgebra, xs: &[(u32, &ModComod)], family: &YdFamily) -> Result<(BitensorResult, YdFamily), ProtectError> {
    let dm = family.dim;
    let dims: Vec<usize> = xs.iter().map(|(_, x)| x.dim).collect();
    let dx: usize = dims.iter().product();
    let mut constraints = Vec::new();
    let mut relations = Vec::new();
    let gens = algebra_generators(h);
    for (p, (c, x)) in xs.iter().enumerate() {
        let m = family
            .modules
            .get(c)
            .ok_or_else(|| ProtectError::Mismatch(format!("no structure for cilium {c}")))?;
        check_pair(h, x, m)?;
        let before: usize = dims[..p].iter().product();
        let after: usize = dims[p + 1..].iter().product();
        let id_x = SparseMat::identity(dx);
        let id_m = SparseMat::identity(dm);
        for i in 0..h.dim() {
            constraints.push(
                sandwich(before, &x.coaction[i], after)
                    .kron(&id_m)
                    .sub(&id_x.kron(&m.coaction[i])),
            );
        }
        for &a in &gens {
            let rel = sandwich(before, &x.action[a], after)
                .kron(&id_m)
                .sub(&id_x.kron(&m.action[a]));
            relations.extend(rel.columns().iter().cloned());
        }
    }
    let result = subquotient(dx * dm, &constraints, relations);
    let mut modules = BTreeMap::new();
    for (d, m) in &family.modules {
        if xs.iter().any(|(c, _)| c == d) {
            continue;
        }
        let induce = |f: &SparseMat| result.induced(|w| apply_right(dm, f, w));
        let action = m.action.iter().map(&induce).collect::<Result<Vec<_>, _>>()?;
        let coaction = m.coaction.iter().map(&induce).collect::<Result<Vec<_>, _>>()?;
        modules.insert(
            *d,
            ModComod {
                dim: result.dim_bitensor,
                side: Side::LeftLeft,
                action,
                coaction,
            },
        );
    }
    let residual = YdFamily {
        dim: result.dim_bitensor,
        modules,
    };
    Ok((result, residual))
}

fn summary(cilia: Vec<u32>, r: &BitensorResult) -> StageSummary {
    StageSummary {
        cilia,
        dim_cotensor: r.dim_cotensor,
        dim_tensor_over: r.dim_tensor_over,
        dim_bitensor: r.dim_bitensor,
    }
}

/// `Bit` over `H_S = ⊗_{c ∈ S} H` of `⊗_c X_c` against `family`, where `S` is the key
/// set of `xs`. Both strategies give isomorphic results.
pub fn bitensor_multi(
    h: &HopfAlgebra,
    xs: &BTreeMap<u32, ModComod>,
    family: &YdFamily,
    strategy: &Strategy,
) -> Result<MultiResult, ProtectError> {
    if xs.is_empty() {
        return Err(ProtectError::Mismatch("no coefficients given".into()));
    }
    match strategy {
        Strategy::OneShot => {
            let list: Vec<(u32, &ModComod)> = xs.iter().map(|(c, x)| (*c, x)).collect();
            let (last, residual) = stage(h, &list, family)?;
            Ok(MultiResult {
                dim_bitensor: last.dim_bitensor,
                stages: vec![summary(xs.keys().copied().collect(), &last)],
                last,
                residual,
            })
        }
        Strategy::Sequential(order) => {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != xs.keys().copied().collect::<Vec<_>>() {
                return Err(ProtectError::Mismatch("the order must list every coefficient cilium once".into()));
            }
            let mut current = family.clone();
            let mut stages = Vec::new();
            let mut last = None;
            for c in order {
                let (r, residual) = stage(h, &[(*c, &xs[c])], &current)?;
                stages.push(summary(vec![*c], &r));
                current = residual;
                last = Some(r);
            }
            let last = last.expect("at least one stage");
            Ok(MultiResult {
                dim_bitensor: last.dim_bitensor,
                stages,
                last,
                residual: current,
            })
        }
    }
}
