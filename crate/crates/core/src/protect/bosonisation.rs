use crate::exact::{kernel_of_rows, Echelon, Frame, SVec, SparseMat};
use crate::hopf::{Character, GroupLike, HopfAlgebra};
use crate::reps::{tensor, ModComod, Side};

use super::bitensor::bitensor;
use super::protected::inflate;
use super::ProtectError;

/// Hopf algebra maps `ι: H → A` and `π: A → H` with `π ∘ ι = id`, as matrices.
#[derive(Clone, Debug)]
pub struct SplitProjection {
    /// `dim H × dim A`
    pub pi: SparseMat,
    /// `dim A × dim H`
    pub iota: SparseMat,
}

fn check_hopf_map(f: &SparseMat, src: &HopfAlgebra, dst: &HopfAlgebra, name: &str) -> Result<(), ProtectError> {
    let bad = |what: &str| Err(ProtectError::BadProjection(format!("{name} {what}")));
    let (n, m) = (src.dim(), dst.dim());
    if f.ncols() != n || f.nrows() != m {
        return bad("has the wrong shape");
    }
    if f.apply(src.one()) != *dst.one() {
        return bad("does not preserve the unit");
    }
    for i in 0..n {
        if dst.counit(f.column(i)) != *src.counit_basis(i) {
            return bad("does not preserve the counit");
        }
        for j in 0..n {
            if f.apply(src.mul_basis(i, j)) != dst.mul(f.column(i), f.column(j)) {
                return bad("is not multiplicative");
            }
        }
        let mut image = SVec::new();
        for (a, b, c) in src.comul_basis(i) {
            image = image.add_scaled(c, &tensor(f.column(*a), f.column(*b), m));
        }
        if image != dst.comul(f.column(i)) {
            return bad("is not comultiplicative");
        }
    }
    Ok(())
}

impl SplitProjection {
    pub fn new(a: &HopfAlgebra, h: &HopfAlgebra, pi: SparseMat, iota: SparseMat) -> Result<Self, ProtectError> {
        let s = SplitProjection { pi, iota };
        s.verify(a, h)?;
        Ok(s)
    }

    pub fn verify(&self, a: &HopfAlgebra, h: &HopfAlgebra) -> Result<(), ProtectError> {
        check_hopf_map(&self.pi, a, h, "π")?;
        check_hopf_map(&self.iota, h, a, "ι")?;
        if !self.pi.mul(&self.iota).is_identity() {
            return Err(ProtectError::BadProjection("π ∘ ι ≠ id".into()));
        }
        Ok(())
    }

    /// The projection of the Taft algebra of order `N` onto `kZ_N`: `y^i h^j ↦ δ_{i0} g^j`,
    /// split by `g^j ↦ h^j`.
    pub fn taft(a: &HopfAlgebra, h: &HopfAlgebra) -> Result<Self, ProtectError> {
        let n = h.dim();
        if a.dim() != n * n {
            return Err(ProtectError::BadProjection(format!(
                "{} does not have dimension {}",
                a.name,
                n * n
            )));
        }
        let pi = SparseMat::from_fn(n, n * n, |k| if k < n { SVec::unit(k) } else { SVec::new() });
        let iota = SparseMat::from_fn(n * n, n, SVec::unit);
        SplitProjection::new(a, h, pi, iota)
    }
}

/// Dimension of `{m : δ(m) = g ⊗ m and a ▷ m = χ(a) m for all a}` for a left-left object.
pub fn isotypic_dim(h: &HopfAlgebra, m: &ModComod, g: &GroupLike, chi: &Character) -> usize {
    let id = SparseMat::identity(m.dim);
    let mut rows = Vec::new();
    for i in 0..h.dim() {
        let c = m.coaction[i].add_scaled(&-g.element.get(i), &id);
        let a = m.action[i].add_scaled(&-chi.values[i].clone(), &id);
        rows.extend(c.transpose().columns().iter().cloned());
        rows.extend(a.transpose().columns().iter().cloned());
    }
    kernel_of_rows(&rows, m.dim).len()
}

/// `⟨N⟩ = N^coH / (N^coH ∩ B⁺N)` with its induced structure over `H`.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub dim_coinvariant: usize,
    pub dim_intersection: usize,
    pub dim_b_plus: usize,
    /// Basis of `N^coH` inside `N`.
    pub coinvariant_basis: Vec<SVec>,
    pub module: ModComod,
    pub yd_verified: bool,
}

pub fn bosonisation_reduce(
    a: &HopfAlgebra,
    h: &HopfAlgebra,
    split: &SplitProjection,
    n: &ModComod,
) -> Result<Reduced, ProtectError> {
    split.verify(a, h)?;
    if n.side != Side::LeftLeft || n.hopf_dim() != a.dim() {
        return Err(ProtectError::Mismatch("expected a left-left object over the bosonisation".into()));
    }
    let d = n.dim;
    // N^coH: the coaction has no component outside ι(H)
    let image = Echelon::from_vectors(a.dim(), split.iota.columns());
    let outside = image.quotient_map();
    let mut constraints = vec![SparseMat::zero(d, d); outside.dim()];
    for i in 0..a.dim() {
        for (r, c) in outside.coords(&image.reduce(&SVec::unit(i))).iter() {
            constraints[*r] = constraints[*r].add_scaled(c, &n.coaction[i]);
        }
    }
    let rows: Vec<SVec> = constraints.iter().flat_map(|c| c.transpose().columns().to_vec()).collect();
    let co_h = if rows.is_empty() {
        (0..d).map(SVec::unit).collect()
    } else {
        kernel_of_rows(&rows, d)
    };
    // B⁺N = (ker π) N
    let ker_pi = split.pi.kernel();
    let mut b_plus = Echelon::new(d);
    for k in &ker_pi {
        for col in n.action_of(k).columns() {
            b_plus.insert(col);
        }
    }
    let quotient = b_plus.quotient_map();
    let project = |v: &SVec| quotient.coords(&b_plus.reduce(v));
    let mut frame = Frame::new(quotient.dim());
    let mut lifts = Vec::new();
    for v in &co_h {
        if frame.push(&project(v)) {
            lifts.push(v.clone());
        }
    }
    let k = lifts.len();
    let induce = |op: &SparseMat| -> Result<SparseMat, ProtectError> {
        let cols = lifts
            .iter()
            .map(|w| {
                frame
                    .coords(&project(&op.apply(w)))
                    .ok_or_else(|| ProtectError::NotStable("⟨N⟩ is not preserved".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMat::from_columns(k, cols))
    };
    let action = (0..h.dim())
        .map(|j| induce(&n.action_of(split.iota.column(j))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pushed = vec![SparseMat::zero(d, d); h.dim()];
    for i in 0..a.dim() {
        for (j, c) in split.pi.column(i).iter() {
            pushed[*j] = pushed[*j].add_scaled(c, &n.coaction[i]);
        }
    }
    let coaction = pushed.iter().map(induce).collect::<Result<Vec<_>, _>>()?;
    let module = ModComod {
        dim: k,
        side: Side::LeftLeft,
        action,
        coaction,
    };
    let yd_verified = module.check_module(h).is_ok() && module.check_comodule(h).is_ok() && module.verify_yd(h);
    Ok(Reduced {
        dim_coinvariant: co_h.len(),
        dim_intersection: co_h.len() - k,
        dim_b_plus: b_plus.rank(),
        coinvariant_basis: co_h,
        module,
        yd_verified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    /// `dim Bit_A^A(Inf(X), N)`
    pub lhs: usize,
    /// `dim Bit_H^H(X, ⟨N⟩)`
    pub rhs: usize,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn reduction_check(
    a: &HopfAlgebra,
    h: &HopfAlgebra,
    split: &SplitProjection,
    x: &ModComod,
    n: &ModComod,
) -> Result<ReductionReport, ProtectError> {
    let reduced = bosonisation_reduce(a, h, split, n)?;
    let lhs = bitensor(a, &inflate(x, split)?, n)?.dim_bitensor;
    let rhs = bitensor(h, x, &reduced.module)?.dim_bitensor;
    Ok(ReductionReport { lhs, rhs })
}
