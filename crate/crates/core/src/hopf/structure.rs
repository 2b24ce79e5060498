use crate::exact::{Matrix, SVec, Scalar, SparseMat};

use super::algebra::HopfAlgebra;
use super::HopfError;

/// An algebra map `χ: H → k`, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Scalar>,
}

/// A group-like element `g` with `Δ(g) = g ⊗ g`, `ε(g) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLike {
    pub element: SVec,
}

impl Character {
    pub fn eval(&self, a: &SVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in a.iter() {
            s += &(x * &self.values[*i]);
        }
        s
    }

    /// Convolution inverse `χ ∘ S`.
    pub fn inverse(&self, h: &HopfAlgebra) -> Character {
        Character {
            values: (0..h.dim())
                .map(|i| self.eval(&h.antipode(&SVec::unit(i))))
                .collect(),
        }
    }

    /// Convolution product `(χ * φ)(x) = χ(x₁) φ(x₂)`.
    pub fn convolve(&self, other: &Character, h: &HopfAlgebra) -> Character {
        Character {
            values: (0..h.dim())
                .map(|i| {
                    let mut s = Scalar::zero();
                    for (j, k, c) in h.comul_basis(i) {
                        s += &(c * &(&self.values[*j] * &other.values[*k]));
                    }
                    s
                })
                .collect(),
        }
    }

    pub fn counit(h: &HopfAlgebra) -> Character {
        Character {
            values: (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect(),
        }
    }

    pub fn is_counit(&self, h: &HopfAlgebra) -> bool {
        *self == Character::counit(h)
    }

    pub fn format(&self, h: &HopfAlgebra) -> String {
        let parts: Vec<String> = h
            .basis
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(b, v)| format!("{b}↦{v}"))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl GroupLike {
    pub fn inverse(&self, h: &HopfAlgebra) -> GroupLike {
        GroupLike {
            element: h.antipode(&self.element),
        }
    }

    pub fn is_one(&self, h: &HopfAlgebra) -> bool {
        self.element == *h.one()
    }
}

/// Candidate values of a character on a basis element: zero, the roots of unity of the
/// field, and small integers.
fn candidate_values(h: &HopfAlgebra) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero()];
    out.extend(h.field.roots_of_unity());
    for m in 2..=h.dim() as i64 {
        out.push(Scalar::from_int(m));
        out.push(Scalar::from_int(-m));
    }
    out
}

/// All characters of `H`: common eigenvectors `φ` of the transposed left multiplications,
/// `φ(a x) = φ(a) φ(x)`, normalised by `φ(1) = 1`. Each common eigenspace is at most one
/// dimensional, since a common eigenvector with `φ(1) = 0` vanishes.
pub fn characters(h: &HopfAlgebra) -> Vec<Character> {
    let n = h.dim();
    let ops: Vec<Matrix> = (0..n)
        .map(|i| h.left_mul_matrix(&SVec::unit(i)).to_dense().transpose())
        .collect();
    let cands = candidate_values(h);
    let full: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        })
        .collect();
    let mut found = Vec::new();
    split(h, &ops, &cands, 0, full, &mut found);
    let eps = Character::counit(h);
    found.sort_by_key(|c| if *c == eps { 0 } else { 1 });
    found
}

fn split(
    h: &HopfAlgebra,
    ops: &[Matrix],
    cands: &[Scalar],
    gen: usize,
    space: Vec<Vec<Scalar>>,
    found: &mut Vec<Character>,
) {
    if space.is_empty() {
        return;
    }
    if space.len() == 1 {
        if let Some(c) = as_character(h, &space[0]) {
            found.push(c);
        }
        return;
    }
    if gen == ops.len() {
        return;
    }
    let n = h.dim();
    let images: Vec<Vec<Scalar>> = space.iter().map(|b| ops[gen].mul_vec(b)).collect();
    for lam in cands {
        // kernel of (L − λ) restricted to the span of `space`
        let cols: Vec<Vec<Scalar>> = images
            .iter()
            .zip(&space)
            .map(|(mb, b)| mb.iter().zip(b).map(|(x, y)| x - &(lam * y)).collect())
            .collect();
        let m = Matrix::from_columns(n, &cols);
        let ker = m.kernel_basis();
        if ker.is_empty() {
            continue;
        }
        let sub: Vec<Vec<Scalar>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![Scalar::zero(); n];
                for (coef, b) in c.iter().zip(&space) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += &(coef * bi);
                    }
                }
                v
            })
            .collect();
        split(h, ops, cands, gen + 1, sub, found);
    }
}

fn as_character(h: &HopfAlgebra, phi: &[Scalar]) -> Option<Character> {
    let at_one: Scalar = h
        .one()
        .iter()
        .fold(Scalar::zero(), |s, (i, x)| s + x * &phi[*i]);
    let inv = at_one.inv()?;
    let values: Vec<Scalar> = phi.iter().map(|x| x * &inv).collect();
    let c = Character { values };
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            if c.eval(h.mul_basis(i, j)) != &c.values[i] * &c.values[j] {
                return None;
            }
        }
    }
    Some(c)
}

/// Group-like elements of `H`, found as the characters of `H*`; `1` comes first.
pub fn group_likes(h: &HopfAlgebra) -> Vec<GroupLike> {
    let dual = h.dual();
    let mut out: Vec<GroupLike> = characters(&dual)
        .into_iter()
        .map(|c| GroupLike {
            element: SVec::from_dense(&c.values),
        })
        .collect();
    out.sort_by_key(|g| if g.is_one(h) { 0 } else { 1 });
    out
}

/// Basis of the left integrals `{Λ : xΛ = ε(x)Λ}`.
pub fn left_integrals(h: &HopfAlgebra) -> Vec<SVec> {
    let n = h.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n);
    for i in 0..n {
        let l = h.left_mul_matrix(&SVec::unit(i)).to_dense();
        let eps = h.counit_basis(i);
        for r in 0..n {
            let mut row = l.row(r).to_vec();
            row[r] -= eps;
            rows.push(row);
        }
    }
    Matrix::from_rows(rows)
        .kernel_basis()
        .iter()
        .map(|v| SVec::from_dense(v))
        .collect()
}

/// Integral, distinguished character and distinguished group-like of `H`.
#[derive(Clone, Debug)]
pub struct Distinguished {
    pub integral: SVec,
    /// `Λ x = α(x) Λ`.
    pub alpha: Character,
    /// The distinguished character of `H*`, viewed as an element of `H`.
    pub a: GroupLike,
}

fn right_character_of(h: &HopfAlgebra, lambda: &SVec) -> Result<Character, HopfError> {
    let (p, lp) = lambda
        .leading()
        .cloned()
        .ok_or(HopfError::Integral(0))?;
    let inv = lp.inv().unwrap();
    let mut values = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let prod = h.mul(lambda, &SVec::unit(i));
        let a = &prod.get(p) * &inv;
        if prod != lambda.scale(&a) {
            return Err(HopfError::Axiom(format!(
                "Λ·{} is not a multiple of Λ",
                h.basis[i]
            )));
        }
        values.push(a);
    }
    Ok(Character { values })
}

pub fn distinguished(h: &HopfAlgebra) -> Result<Distinguished, HopfError> {
    let ints = left_integrals(h);
    if ints.len() != 1 {
        return Err(HopfError::Integral(ints.len()));
    }
    let lambda = ints[0].clone();
    let alpha = right_character_of(h, &lambda)?;
    let dual = h.dual();
    let dual_ints = left_integrals(&dual);
    if dual_ints.len() != 1 {
        return Err(HopfError::Integral(dual_ints.len()));
    }
    let alpha_dual = right_character_of(&dual, &dual_ints[0])?;
    let a = GroupLike {
        element: SVec::from_dense(&alpha_dual.values),
    };
    Ok(Distinguished {
        integral: lambda,
        alpha,
        a,
    })
}

/// `ε(Λ) ≠ 0` (Maschke).
pub fn is_semisimple(h: &HopfAlgebra) -> Result<bool, HopfError> {
    let d = distinguished(h)?;
    Ok(!h.counit(&d.integral).is_zero())
}

pub fn is_cosemisimple(h: &HopfAlgebra) -> Result<bool, HopfError> {
    is_semisimple(&h.dual())
}

/// `ad_{(p,χ)}(x) = χ⁻¹(x₁) χ(x₃) p x₂ p⁻¹` as a matrix.
pub fn ad(h: &HopfAlgebra, p: &GroupLike, chi: &Character) -> SparseMat {
    let n = h.dim();
    let chi_inv = chi.inverse(h);
    let p_inv = p.inverse(h);
    SparseMat::from_fn(n, n, |i| {
        let mut acc = SVec::new();
        for (a, b, c, coef) in h.comul2_basis(i) {
            let s = &coef * &(&chi_inv.values[a] * &chi.values[c]);
            if s.is_zero() {
                continue;
            }
            let conj = h.mul(&h.mul(&p.element, &SVec::unit(b)), &p_inv.element);
            acc = acc.add_scaled(&s, &conj);
        }
        acc
    })
}

/// `S⁴ = ad_{(a⁻¹, α)}` on every basis element.
pub fn check_s4(h: &HopfAlgebra) -> Result<bool, HopfError> {
    let d = distinguished(h)?;
    let s = h.antipode_matrix();
    let s4 = s.mul(s).mul(&s.mul(s));
    Ok(s4 == ad(h, &d.a.inverse(h), &d.alpha))
}

#[derive(Clone, Debug)]
pub struct PairInInvolution {
    pub p: GroupLike,
    pub chi: Character,
    pub modular: bool,
    /// A square root of `χ(p)`; `1` for modular pairs, `None` when `χ(p)` has no square
    /// root in the field.
    pub zeta: Option<Scalar>,
}

impl PairInInvolution {
    pub fn diagnostic(&self) -> Option<String> {
        if self.zeta.is_none() {
            Some("χ(p) has no square root in the coefficient field".into())
        } else {
            None
        }
    }
}

/// All `(p, χ) ∈ G(H) × G(H*)` with `S² = ad_{(p,χ)}`.
pub fn pairs_in_involution(h: &HopfAlgebra) -> Vec<PairInInvolution> {
    let s = h.antipode_matrix();
    let s2 = s.mul(s);
    let gl = group_likes(h);
    let chars = characters(h);
    let mut out = Vec::new();
    for p in &gl {
        for chi in &chars {
            if ad(h, p, chi) != s2 {
                continue;
            }
            let chi_p = chi.eval(&p.element);
            let modular = chi_p.is_one();
            let zeta = if modular {
                Some(Scalar::one())
            } else {
                chi_p.sqrt_in_field(h.order())
            };
            out.push(PairInInvolution {
                p: p.clone(),
                chi: chi.clone(),
                modular,
                zeta,
            });
        }
    }
    out
}

/// Checks that `ad_{(p,χ)}` respects product, unit, coproduct and counit, and commutes
/// with `S`.
pub fn ad_is_hopf_automorphism(h: &HopfAlgebra, p: &GroupLike, chi: &Character) -> bool {
    let n = h.dim();
    let m = ad(h, p, chi);
    let s = h.antipode_matrix();
    if m.mul(s) != s.mul(&m) || m.apply(h.one()) != *h.one() {
        return false;
    }
    for i in 0..n {
        let ai = m.column(i);
        if h.counit(ai) != *h.counit_basis(i) {
            return false;
        }
        let lhs = h.comul(ai);
        let rhs = SVec::from_pairs(h.comul_basis(i).iter().flat_map(|(j, k, c)| {
            let mj = m.column(*j).clone();
            let mk = m.column(*k).clone();
            let c = c.clone();
            mj.iter()
                .flat_map(|(a, x)| mk.iter().map(move |(b, y)| (a * n + b, x * y)))
                .map(move |(idx, v)| (idx, &c * &v))
                .collect::<Vec<_>>()
        }));
        if lhs != rhs {
            return false;
        }
        for j in 0..n {
            if m.apply(h.mul_basis(i, j)) != h.mul(ai, m.column(j)) {
                return false;
            }
        }
    }
    true
}
