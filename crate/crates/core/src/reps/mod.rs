//! Modules and comodules over a Hopf algebra, stored as families of matrices.
//!
//! A [`ModComod`] keeps one action matrix per basis element of `H` and one coaction
//! component per basis element: for a left-left object `δ(m) = Σᵢ eᵢ ⊗ Cᵢ m`, for a
//! right-right object `ϱ(m) = Σᵢ Cᵢ m ⊗ eᵢ`. Bimodule-bicomodules such as the induced
//! involutive Hopf bimodule of a pair in involution live in [`HopfBimodule`].

mod bimodule;
mod json;

pub use bimodule::{coinvariants, induced_bimodule, induced_structure, unit_bimodule, Coinvariants, HopfBimodule, LegReading};
pub use json::ModComodJson;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Acc, SVec, Scalar, SparseMat};
use crate::hopf::{Character, GroupLike, HopfAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("malformed module-comodule data: {0}")]
    Format(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("χ(p) = {0} has no square root in the coefficient field, so ψ cannot be normalised")]
    NoSquareRoot(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "ll")]
    LeftLeft,
    #[serde(rename = "rr")]
    RightRight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComod {
    pub dim: usize,
    pub side: Side,
    /// `action[i]` is the matrix of `eᵢ ▷ −` (left) or `− ◁ eᵢ` (right).
    pub action: Vec<SparseMat>,
    /// `coaction[i]` is the component of the coaction along `eᵢ`.
    pub coaction: Vec<SparseMat>,
}

/// `Σ_k x_k F_k` for a family indexed by the basis of `H`.
pub(crate) fn combine(family: &[SparseMat], x: &SVec, dim: usize) -> SparseMat {
    let mut out = SparseMat::zero(dim, dim);
    for (k, c) in x.iter() {
        out = out.add_scaled(c, &family[*k]);
    }
    out
}

/// Index-level tensor product of two sparse vectors; `b` has length `nb`.
pub(crate) fn tensor(a: &SVec, b: &SVec, nb: usize) -> SVec {
    SVec::from_pairs(a.iter().flat_map(|(i, x)| b.iter().map(move |(j, y)| (i * nb + j, x * y))))
}

impl ModComod {
    pub fn new(dim: usize, side: Side, action: Vec<SparseMat>, coaction: Vec<SparseMat>) -> Result<Self, ReprError> {
        if action.len() != coaction.len() {
            return Err(ReprError::Format("action and coaction families differ in length".into()));
        }
        if action.iter().chain(&coaction).any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(ReprError::Format(format!("every matrix must be {dim} × {dim}")));
        }
        Ok(ModComod { dim, side, action, coaction })
    }

    /// The one-dimensional object `k^g_χ` (right-right) or `ᵍ_χk` (left-left).
    pub fn one_dim(h: &HopfAlgebra, g: &GroupLike, chi: &Character, side: Side) -> ModComod {
        let scalar = |s: &Scalar| SparseMat::from_columns(1, vec![SVec::from_pairs([(0, s.clone())])]);
        ModComod {
            dim: 1,
            side,
            action: chi.values.iter().map(scalar).collect(),
            coaction: (0..h.dim()).map(|i| scalar(&g.element.get(i))).collect(),
        }
    }

    pub fn trivial(h: &HopfAlgebra, side: Side) -> ModComod {
        let one = GroupLike { element: h.one().clone() };
        ModComod::one_dim(h, &one, &Character::counit(h), side)
    }

    pub fn hopf_dim(&self) -> usize {
        self.action.len()
    }

    pub fn action_of(&self, x: &SVec) -> SparseMat {
        combine(&self.action, x, self.dim)
    }

    /// The coaction as one matrix into `H ⊗ N` (left-left) or `N ⊗ H` (right-right).
    pub fn coaction_matrix(&self) -> SparseMat {
        let (n, d) = (self.hopf_dim(), self.dim);
        SparseMat::from_fn(n * d, d, |m| {
            let e = SVec::unit(m);
            SVec::from_pairs((0..n).flat_map(|i| {
                let v = self.coaction[i].apply(&e);
                v.iter()
                    .map(|(x, c)| match self.side {
                        Side::LeftLeft => (i * d + x, c.clone()),
                        Side::RightRight => (x * n + i, c.clone()),
                    })
                    .collect::<Vec<_>>()
            }))
        })
    }

    /// Module axioms: `ρ(1) = id` and `ρ(gh) = ρ(g)ρ(h)` (left) or `ρ(h)ρ(g)` (right).
    pub fn check_module(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        check_action(h, &self.action, self.dim, self.side == Side::LeftLeft, "action")
    }

    /// Counitality and coassociativity of the coaction.
    pub fn check_comodule(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        check_coaction(h, &self.coaction, self.dim, self.side == Side::LeftLeft, "coaction")
    }

    /// The untwisted Yetter–Drinfeld law for the object's side.
    pub fn verify_yd(&self, h: &HopfAlgebra) -> bool {
        self.yd_defect(h, &SparseMat::identity(h.dim())).is_none()
    }

    /// The `σ`-twisted Yetter–Drinfeld law. Left-left:
    /// `(h•n)₍₋₁₎ ⊗ (h•n)₍₀₎ = σ(h₁) n₍₋₁₎ S(h₃) ⊗ h₂•n₍₀₎`; right-right:
    /// `(n·h)₍₀₎ ⊗ (n·h)₍₁₎ = n₍₀₎·h₂ ⊗ S(h₁) n₍₁₎ σ(h₃)`.
    pub fn verify_yd_twisted(&self, h: &HopfAlgebra, sigma: &SparseMat) -> bool {
        self.yd_defect(h, sigma).is_none()
    }

    /// The first basis pair `(h-index, m-index)` where the twisted law fails.
    pub fn yd_defect(&self, h: &HopfAlgebra, sigma: &SparseMat) -> Option<(usize, usize)> {
        let (n, d) = (h.dim(), self.dim);
        let s = h.antipode_matrix();
        let mut acc = Acc::new(n * d);
        for t in 0..n {
            let terms = h.comul2_basis(t);
            for m in 0..d {
                let e = SVec::unit(m);
                let moved = self.action[t].apply(&e);
                for i in 0..n {
                    let c = self.coaction[i].apply(&moved);
                    match self.side {
                        Side::LeftLeft => acc.add_scaled(&Scalar::one(), &tensor(&SVec::unit(i), &c, d)),
                        Side::RightRight => acc.add_scaled(&Scalar::one(), &tensor(&c, &SVec::unit(i), n)),
                    }
                }
                let lhs = acc.drain();
                for i in 0..n {
                    let ci = self.coaction[i].apply(&e);
                    if ci.is_zero() {
                        continue;
                    }
                    for (a, b, c, coef) in &terms {
                        let w = self.action[*b].apply(&ci);
                        if w.is_zero() {
                            continue;
                        }
                        match self.side {
                            Side::LeftLeft => {
                                let x = h.mul(&h.mul(sigma.column(*a), &SVec::unit(i)), s.column(*c));
                                acc.add_scaled(coef, &tensor(&x, &w, d));
                            }
                            Side::RightRight => {
                                let x = h.mul(&h.mul(s.column(*a), &SVec::unit(i)), sigma.column(*c));
                                acc.add_scaled(coef, &tensor(&w, &x, n));
                            }
                        }
                    }
                }
                if acc.drain() != lhs {
                    return Some((t, m));
                }
            }
        }
        None
    }

    /// Tensor product of two objects on the same side, with the diagonal action and the
    /// product coaction: `δ(x⊗y) = x₍₋₁₎y₍₋₁₎ ⊗ x₍₀₎⊗y₍₀₎`, `ϱ(x⊗y) = x₍₀₎⊗y₍₀₎ ⊗ x₍₁₎y₍₁₎`.
    pub fn tensor(&self, other: &ModComod, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        if self.side != other.side || self.hopf_dim() != other.hopf_dim() {
            return Err(ReprError::Format("tensor factors must share side and algebra".into()));
        }
        let n = h.dim();
        let dim = self.dim * other.dim;
        let action = (0..n)
            .map(|i| {
                let mut out = SparseMat::zero(dim, dim);
                for (a, b, c) in h.comul_basis(i) {
                    out = out.add_scaled(c, &self.action[*a].kron(&other.action[*b]));
                }
                out
            })
            .collect();
        let mut coaction = vec![SparseMat::zero(dim, dim); n];
        for a in 0..n {
            for b in 0..n {
                let prod = h.mul_basis(a, b);
                if prod.is_zero() {
                    continue;
                }
                let k = self.coaction[a].kron(&other.coaction[b]);
                for (l, c) in prod.iter() {
                    coaction[*l] = coaction[*l].add_scaled(c, &k);
                }
            }
        }
        Ok(ModComod { dim, side: self.side, action, coaction })
    }

    /// `∨N` for a right-right `N`: the left action `h ▷ n = n · S(h)` and the left
    /// coaction `S(n₍₁₎) ⊗ n₍₀₎`.
    pub fn left_vee(&self, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        self.flip_side(h, h.antipode_matrix(), Side::RightRight)
    }

    /// `N∨` for a right-right `N`, built like [`ModComod::left_vee`] with `S⁻¹`.
    pub fn right_vee(&self, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        self.flip_side(h, h.antipode_inv_matrix(), Side::RightRight)
    }

    /// Inverse of [`ModComod::left_vee`]: turns a left-left object into a right-right
    /// one using `S⁻¹`.
    pub fn left_vee_inverse(&self, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        self.flip_side(h, h.antipode_inv_matrix(), Side::LeftLeft)
    }

    /// Inverse of [`ModComod::right_vee`], using `S`.
    pub fn right_vee_inverse(&self, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        self.flip_side(h, h.antipode_matrix(), Side::LeftLeft)
    }

    fn flip_side(&self, h: &HopfAlgebra, anti: &SparseMat, from: Side) -> Result<ModComod, ReprError> {
        if self.side != from {
            return Err(ReprError::Format("object is on the wrong side".into()));
        }
        let n = h.dim();
        let action = (0..n).map(|i| self.action_of(anti.column(i))).collect();
        // component along e_j of Σᵢ anti(eᵢ) ⊗ Cᵢ
        let mut coaction = vec![SparseMat::zero(self.dim, self.dim); n];
        for i in 0..n {
            for (j, c) in anti.column(i).iter() {
                coaction[*j] = coaction[*j].add_scaled(c, &self.coaction[i]);
            }
        }
        let side = match from {
            Side::LeftLeft => Side::RightRight,
            Side::RightRight => Side::LeftLeft,
        };
        Ok(ModComod { dim: self.dim, side, action, coaction })
    }
}

pub(crate) fn check_action(h: &HopfAlgebra, fam: &[SparseMat], d: usize, left: bool, what: &str) -> Result<(), ReprError> {
    let n = h.dim();
    if fam.len() != n {
        return Err(ReprError::Format(format!("{what}: expected {n} matrices")));
    }
    if !combine(fam, h.one(), d).is_identity() {
        return Err(ReprError::Axiom(format!("{what}: the unit does not act as the identity")));
    }
    for i in 0..n {
        for j in 0..n {
            let prod = combine(fam, h.mul_basis(i, j), d);
            let comp = if left { fam[i].mul(&fam[j]) } else { fam[j].mul(&fam[i]) };
            if prod != comp {
                return Err(ReprError::Axiom(format!("{what}: not multiplicative on ({}, {})", h.basis[i], h.basis[j])));
            }
        }
    }
    Ok(())
}

pub(crate) fn check_coaction(h: &HopfAlgebra, fam: &[SparseMat], d: usize, left: bool, what: &str) -> Result<(), ReprError> {
    let n = h.dim();
    if fam.len() != n {
        return Err(ReprError::Format(format!("{what}: expected {n} matrices")));
    }
    let mut counit = SparseMat::zero(d, d);
    for (i, c) in fam.iter().enumerate() {
        counit = counit.add_scaled(h.counit_basis(i), c);
    }
    if !counit.is_identity() {
        return Err(ReprError::Axiom(format!("{what}: not counital")));
    }
    // Σ_l [Δ(e_l) ∋ c eᵢ ⊗ e_j] C_l equals C_j C_i (left) or C_i C_j (right)
    let mut expected = vec![SparseMat::zero(d, d); n * n];
    for (l, f) in fam.iter().enumerate() {
        for (i, j, c) in h.comul_basis(l) {
            expected[i * n + j] = expected[i * n + j].add_scaled(c, f);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let comp = if left { fam[j].mul(&fam[i]) } else { fam[i].mul(&fam[j]) };
            if comp != expected[i * n + j] {
                return Err(ReprError::Axiom(format!("{what}: not coassociative at ({}, {})", h.basis[i], h.basis[j])));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
