use crate::exact::{Acc, Matrix, SVec, Scalar, SparseMat};
use crate::hopf::{Character, GroupLike, HopfAlgebra, PairInInvolution};

use super::{check_action, check_coaction, combine, tensor, ModComod, ReprError, Side};

/// Which Sweedler leg of `h` the twist `σ` is applied to in the twisted Hopf bimodule
/// axiom
///
/// `(g▷m◁h)₍₋₁₎ ⊗ (g▷m◁h)₍₀₎ ⊗ (g▷m◁h)₍₁₎ = g₁m₍₋₁₎h₁ ⊗ g₂▷m₍₀₎◁h_mid ⊗ g₃m₍₁₎σ(h_last)`.
///
/// With `SigmaOnThird` the middle factor uses `h₂` and the last uses `σ(h₃)`; with
/// `SigmaOnSecond` the middle factor uses `h₃` and the last `σ(h₂)`. Only
/// `SigmaOnThird` holds for the induced bimodules of non-cocommutative algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegReading {
    SigmaOnThird,
    SigmaOnSecond,
}

/// A bimodule-bicomodule over `H`, optionally with an involution `ψ`.
#[derive(Clone, Debug)]
pub struct HopfBimodule {
    pub dim: usize,
    pub left_action: Vec<SparseMat>,
    pub right_action: Vec<SparseMat>,
    /// `δ(m) = Σᵢ eᵢ ⊗ left_coaction[i] m`
    pub left_coaction: Vec<SparseMat>,
    /// `ϱ(m) = Σᵢ right_coaction[i] m ⊗ eᵢ`
    pub right_coaction: Vec<SparseMat>,
    pub psi: Option<SparseMat>,
    pub source_pair: Option<PairInInvolution>,
}

impl HopfBimodule {
    pub fn left_left(&self) -> ModComod {
        ModComod {
            dim: self.dim,
            side: Side::LeftLeft,
            action: self.left_action.clone(),
            coaction: self.left_coaction.clone(),
        }
    }

    pub fn right_right(&self) -> ModComod {
        ModComod {
            dim: self.dim,
            side: Side::RightRight,
            action: self.right_action.clone(),
            coaction: self.right_coaction.clone(),
        }
    }

    pub fn check_bimodule(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        check_action(h, &self.left_action, self.dim, true, "left action")?;
        check_action(h, &self.right_action, self.dim, false, "right action")?;
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(ReprError::Axiom(format!(
                        "left action of {} and right action of {} do not commute",
                        h.basis[i], h.basis[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn check_bicomodule(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        check_coaction(h, &self.left_coaction, self.dim, true, "left coaction")?;
        check_coaction(h, &self.right_coaction, self.dim, false, "right coaction")?;
        for l in &self.left_coaction {
            for r in &self.right_coaction {
                if l.mul(r) != r.mul(l) {
                    return Err(ReprError::Axiom("left and right coactions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// `m ↦ m₍₋₁₎ ⊗ m₍₀₎ ⊗ m₍₁₎` in `H ⊗ M ⊗ H`, indexed `(i·d + x)·n + j`.
    pub(crate) fn triple(&self, v: &SVec, n: usize) -> SVec {
        let d = self.dim;
        let mut acc = Acc::new(n * d * n);
        for i in 0..n {
            let l = self.left_coaction[i].apply(v);
            if l.is_zero() {
                continue;
            }
            for j in 0..n {
                for (x, c) in self.right_coaction[j].apply(&l).iter() {
                    acc.add((i * d + x) * n + j, c);
                }
            }
        }
        acc.drain()
    }

    /// The `S⁻²`-twisted Hopf bimodule axiom on all basis pairs `(g, m)` and `(m, h)`.
    ///
    /// Both sides of the axiom are compatible with the actions of `g` and `h`
    /// separately, so together with the bimodule axioms this covers every basis triple.
    pub fn check_twisted_axiom(&self, h: &HopfAlgebra, reading: LegReading) -> Result<(), ReprError> {
        let (n, d) = (h.dim(), self.dim);
        let sinv = h.antipode_inv_matrix();
        let sigma = sinv.mul(sinv);
        let decode = |p: usize| (p / (n * d), (p / n) % d, p % n);
        let mut acc = Acc::new(n * d * n);
        let triples: Vec<SVec> = (0..d).map(|m| self.triple(&SVec::unit(m), n)).collect();
        for t in 0..n {
            let terms = h.comul2_basis(t);
            for m in 0..d {
                // left: Δ²(g) · triple(m)
                let lhs = self.triple(&self.left_action[t].apply(&SVec::unit(m)), n);
                for (p, val) in triples[m].iter() {
                    let (i, x, j) = decode(*p);
                    for (a, b, c, coef) in &terms {
                        let mid = self.left_action[*b].apply(&SVec::unit(x));
                        let s = coef * val;
                        let left = h.mul_basis(*a, i);
                        let right = h.mul_basis(*c, j);
                        add_triple(&mut acc, &s, left, &mid, right, d, n);
                    }
                }
                if acc.drain() != lhs {
                    return Err(ReprError::Axiom(format!(
                        "twisted Hopf bimodule axiom fails for g = {}, m = e{m}",
                        h.basis[t]
                    )));
                }
                // right: triple(m) · Δ²(h) with σ on the chosen leg
                let lhs = self.triple(&self.right_action[t].apply(&SVec::unit(m)), n);
                for (p, val) in triples[m].iter() {
                    let (i, x, j) = decode(*p);
                    for (a, b, c, coef) in &terms {
                        let (mid_leg, last_leg) = match reading {
                            LegReading::SigmaOnThird => (*b, *c),
                            LegReading::SigmaOnSecond => (*c, *b),
                        };
                        let mid = self.right_action[mid_leg].apply(&SVec::unit(x));
                        let s = coef * val;
                        let left = h.mul_basis(i, *a);
                        let right = h.mul(&SVec::unit(j), sigma.column(last_leg));
                        add_triple(&mut acc, &s, left, &mid, &right, d, n);
                    }
                }
                if acc.drain() != lhs {
                    return Err(ReprError::Axiom(format!(
                        "twisted Hopf bimodule axiom fails for m = e{m}, h = {}",
                        h.basis[t]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `ψ² = id`, `ψ(g▷m◁h) = S⁻¹(h)▷ψ(m)◁S(g)` and
    /// `m₍₋₁₎ ⊗ ψ(m₍₀₎) ⊗ m₍₁₎ = S(ψ(m)₍₁₎) ⊗ ψ(m)₍₀₎ ⊗ S⁻¹(ψ(m)₍₋₁₎)`.
    pub fn check_involution(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        let psi = self
            .psi
            .as_ref()
            .ok_or_else(|| ReprError::Format("no involution attached".into()))?;
        let (n, d) = (h.dim(), self.dim);
        if !psi.mul(psi).is_identity() {
            return Err(ReprError::Axiom("ψ² ≠ id".into()));
        }
        let s = h.antipode_matrix();
        let sinv = h.antipode_inv_matrix();
        for t in 0..n {
            if psi.mul(&self.left_action[t]) != combine(&self.right_action, s.column(t), d).mul(psi) {
                return Err(ReprError::Axiom(format!("ψ(g ▷ m) ≠ ψ(m) ◁ S(g) for g = {}", h.basis[t])));
            }
            if psi.mul(&self.right_action[t]) != combine(&self.left_action, sinv.column(t), d).mul(psi) {
                return Err(ReprError::Axiom(format!("ψ(m ◁ h) ≠ S⁻¹(h) ▷ ψ(m) for h = {}", h.basis[t])));
            }
        }
        let mut acc = Acc::new(n * d * n);
        for m in 0..d {
            let mut lhs = Acc::new(n * d * n);
            for (p, c) in self.triple(&SVec::unit(m), n).iter() {
                let (i, x, j) = (p / (n * d), (p / n) % d, p % n);
                for (y, v) in psi.column(x).iter() {
                    lhs.add((i * d + y) * n + j, &(c * v));
                }
            }
            let lhs = lhs.drain();
            let w = psi.column(m);
            for (p, c) in self.triple(w, n).iter() {
                let (i, x, j) = (p / (n * d), (p / n) % d, p % n);
                add_triple(&mut acc, c, s.column(j), &SVec::unit(x), sinv.column(i), d, n);
            }
            if acc.drain() != lhs {
                return Err(ReprError::Axiom(format!("coaction law of ψ fails at e{m}")));
            }
        }
        Ok(())
    }

    /// Bimodule, bicomodule and twisted Hopf bimodule axioms, plus the involution laws
    /// when `ψ` is present.
    pub fn verify(&self, h: &HopfAlgebra) -> Result<(), ReprError> {
        self.check_bimodule(h)?;
        self.check_bicomodule(h)?;
        self.check_twisted_axiom(h, LegReading::SigmaOnThird)?;
        if self.psi.is_some() {
            self.check_involution(h)?;
        }
        Ok(())
    }
}

fn add_triple(acc: &mut Acc, s: &Scalar, left: &SVec, mid: &SVec, right: &SVec, d: usize, n: usize) {
    for (i, u) in left.iter() {
        for (x, v) in mid.iter() {
            let uv = u * v;
            for (j, w) in right.iter() {
                acc.add((i * d + x) * n + j, &(s * &(&uv * w)));
            }
        }
    }
}

/// The bimodule-bicomodule structure on `H` induced by `(p, χ)`:
/// `g ▷ m ◁ h = χ⁻¹(h₂) g m h₁`, `δ(m) = m₁ ⊗ m₂`, `ϱ(m) = m₁ ⊗ m₂p`, together with the
/// unnormalised involution `ψ(m) = χ(m₁) p⁻¹ S(m₂)`, whose square is `χ(p⁻¹) id`.
pub fn induced_structure(h: &HopfAlgebra, p: &GroupLike, chi: &Character) -> HopfBimodule {
    let n = h.dim();
    let chi_inv = chi.inverse(h);
    let p_inv = p.inverse(h);
    let left_action = (0..n).map(|g| h.left_mul_matrix(&SVec::unit(g))).collect();
    let right_action = (0..n)
        .map(|t| {
            let mut out = SparseMat::zero(n, n);
            for (a, b, c) in h.comul_basis(t) {
                let s = c * &chi_inv.values[*b];
                if !s.is_zero() {
                    out = out.add_scaled(&s, &h.right_mul_matrix(&SVec::unit(*a)));
                }
            }
            out
        })
        .collect();
    let mut left_coaction = vec![Vec::new(); n];
    let mut right_coaction = vec![Vec::new(); n];
    for t in 0..n {
        let mut lcols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        let mut rcols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for (a, b, c) in h.comul_basis(t) {
            lcols[*a].push((*b, c.clone()));
            for (k, v) in h.mul(&SVec::unit(*b), &p.element).iter() {
                rcols[*k].push((*a, c * v));
            }
        }
        for i in 0..n {
            left_coaction[i].push(SVec::from_pairs(std::mem::take(&mut lcols[i])));
            right_coaction[i].push(SVec::from_pairs(std::mem::take(&mut rcols[i])));
        }
    }
    let to_mats = |cols: Vec<Vec<SVec>>| cols.into_iter().map(|c| SparseMat::from_columns(n, c)).collect();
    let psi = SparseMat::from_fn(n, n, |t| {
        let mut acc = SVec::new();
        for (a, b, c) in h.comul_basis(t) {
            let s = c * &chi.values[*a];
            if !s.is_zero() {
                acc = acc.add_scaled(&s, &h.mul(&p_inv.element, &h.antipode(&SVec::unit(*b))));
            }
        }
        acc
    });
    HopfBimodule {
        dim: n,
        left_action,
        right_action,
        left_coaction: to_mats(left_coaction),
        right_coaction: to_mats(right_coaction),
        psi: Some(psi),
        source_pair: None,
    }
}

/// The involutive Hopf bimodule induced by a pair in involution, with `ψ = ζ ψ_{(p,χ)}`
/// where `ζ² = χ(p)`.
pub fn induced_bimodule(h: &HopfAlgebra, pair: &PairInInvolution) -> Result<HopfBimodule, ReprError> {
    let zeta = pair
        .zeta
        .as_ref()
        .ok_or_else(|| ReprError::NoSquareRoot(pair.chi.eval(&pair.p.element).to_string()))?;
    let mut m = induced_structure(h, &pair.p, &pair.chi);
    m.psi = m.psi.map(|psi| psi.scale(zeta));
    m.source_pair = Some(pair.clone());
    Ok(m)
}

/// The bimodule-bicomodule `U = H ⊗ H` with
/// `h ▷ (g⊗k) = hg ⊗ k`, `(g⊗k) ◁ h = g h₂ ⊗ S⁻¹(h₁) k S²(h₃)`,
/// `δ(g⊗k) = k₁ ⊗ (g⊗k₂)` and `ϱ(g⊗k) = (g⊗k₁) ⊗ k₂`.
pub fn unit_bimodule(h: &HopfAlgebra) -> HopfBimodule {
    let n = h.dim();
    let d = n * n;
    let s = h.antipode_matrix();
    let s2 = s.mul(s);
    let sinv = h.antipode_inv_matrix();
    let left_action = (0..n)
        .map(|t| h.left_mul_matrix(&SVec::unit(t)).kron(&SparseMat::identity(n)))
        .collect();
    let right_action = (0..n)
        .map(|t| {
            let terms = h.comul2_basis(t);
            SparseMat::from_fn(d, d, |col| {
                let (g, k) = (col / n, col % n);
                let mut acc = Acc::new(d);
                for (a, b, c, coef) in &terms {
                    let left = h.mul_basis(g, *b);
                    let right = h.mul(&h.mul(sinv.column(*a), &SVec::unit(k)), s2.column(*c));
                    acc.add_scaled(coef, &tensor(left, &right, n));
                }
                acc.drain()
            })
        })
        .collect();
    let mut lcols = vec![vec![SVec::new(); d]; n];
    let mut rcols = vec![vec![SVec::new(); d]; n];
    for g in 0..n {
        for k in 0..n {
            let col = g * n + k;
            for (a, b, c) in h.comul_basis(k) {
                lcols[*a][col] = lcols[*a][col].add_scaled(c, &SVec::unit(g * n + b));
                rcols[*b][col] = rcols[*b][col].add_scaled(c, &SVec::unit(g * n + a));
            }
        }
    }
    HopfBimodule {
        dim: d,
        left_action,
        right_action,
        left_coaction: lcols.into_iter().map(|c| SparseMat::from_columns(d, c)).collect(),
        right_coaction: rcols.into_iter().map(|c| SparseMat::from_columns(d, c)).collect(),
        psi: None,
        source_pair: None,
    }
}

/// Left coinvariants of a bimodule-bicomodule with the adjoint action
/// `m • h = S(h₁) ▷ m ◁ h₂` and the restricted right coaction.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    /// Basis of `M^coinv` inside `M`.
    pub basis: Vec<SVec>,
    pub module: ModComod,
}

pub fn coinvariants(h: &HopfAlgebra, m: &HopfBimodule) -> Result<Coinvariants, ReprError> {
    let (n, d) = (h.dim(), m.dim);
    let one = h.one();
    let mut stacked: Option<SparseMat> = None;
    for i in 0..n {
        let row = m.left_coaction[i].add_scaled(&-one.get(i), &SparseMat::identity(d));
        stacked = Some(match stacked {
            None => row,
            Some(s) => s.vstack(&row),
        });
    }
    let basis = stacked.map(|s| s.kernel()).unwrap_or_default();
    let k = basis.len();
    let frame = Matrix::from_columns(d, &basis.iter().map(|b| b.to_dense(d)).collect::<Vec<_>>());
    let coords = |v: &SVec| -> Result<SVec, ReprError> {
        frame
            .solve(&v.to_dense(d))
            .map(|x| SVec::from_dense(&x))
            .ok_or_else(|| ReprError::Axiom("coinvariants are not stable under the structure maps".into()))
    };
    let s = h.antipode_matrix();
    let mut action = Vec::with_capacity(n);
    for t in 0..n {
        let mut op = SparseMat::zero(d, d);
        for (a, b, c) in h.comul_basis(t) {
            op = op.add_scaled(c, &combine(&m.left_action, s.column(*a), d).mul(&m.right_action[*b]));
        }
        let cols = basis.iter().map(|v| coords(&op.apply(v))).collect::<Result<Vec<_>, _>>()?;
        action.push(SparseMat::from_columns(k, cols));
    }
    let mut coaction = Vec::with_capacity(n);
    for i in 0..n {
        let cols = basis
            .iter()
            .map(|v| coords(&m.right_coaction[i].apply(v)))
            .collect::<Result<Vec<_>, _>>()?;
        coaction.push(SparseMat::from_columns(k, cols));
    }
    Ok(Coinvariants {
        basis,
        module: ModComod { dim: k, side: Side::RightRight, action, coaction },
    })
}
