use crate::exact::{make_field, Acc, FieldSpec, Matrix, SVec, Scalar, SparseMat};

use super::HopfError;

/// One term `c · e_j ⊗ e_k` of a coproduct.
pub type CoTerm = (usize, usize, Scalar);

/// A finite-dimensional Hopf algebra given by structure constants in a fixed basis.
///
/// Elements are sparse coordinate vectors ([`SVec`]); an element of `H ⊗ H` uses the
/// index `j·n + k` for `e_j ⊗ e_k`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub name: String,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    mul: Vec<SVec>,
    unit: SVec,
    comul: Vec<Vec<CoTerm>>,
    counit: Vec<Scalar>,
    antipode: SparseMat,
    antipode_inv: SparseMat,
}

impl HopfAlgebra {
    /// Assembles the structure maps; `S⁻¹` is obtained by inverting `S`.
    pub fn from_parts(
        name: impl Into<String>,
        field: FieldSpec,
        basis: Vec<String>,
        mul: Vec<SVec>,
        unit: SVec,
        comul: Vec<Vec<CoTerm>>,
        counit: Vec<Scalar>,
        antipode: SparseMat,
    ) -> Result<Self, HopfError> {
        let n = basis.len();
        if mul.len() != n * n || comul.len() != n || counit.len() != n || antipode.ncols() != n {
            return Err(HopfError::Format("structure constants have the wrong size".into()));
        }
        let inv = antipode
            .to_dense()
            .inverse()
            .ok_or_else(|| HopfError::Axiom("antipode is not invertible".into()))?;
        Ok(HopfAlgebra {
            name: name.into(),
            field,
            basis,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv: inv.to_sparse(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u32 {
        self.field.cyclotomic_order
    }

    pub fn basis_element(&self, i: usize) -> SVec {
        SVec::unit(i)
    }

    pub fn one(&self) -> &SVec {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SVec {
        &self.mul[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut acc = Acc::new(self.dim());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&(x * y), self.mul_basis(*i, *j));
            }
        }
        acc.drain()
    }

    pub fn pow(&self, a: &SVec, e: u32) -> SVec {
        (0..e).fold(self.unit.clone(), |acc, _| self.mul(&acc, a))
    }

    pub fn comul_basis(&self, i: usize) -> &[CoTerm] {
        &self.comul[i]
    }

    /// `Δ(a)` as a vector of `H ⊗ H`.
    pub fn comul(&self, a: &SVec) -> SVec {
        let n = self.dim();
        SVec::from_pairs(a.iter().flat_map(|(i, x)| {
            self.comul[*i]
                .iter()
                .map(move |(j, k, c)| (j * n + k, x * c))
        }))
    }

    /// `Δ²(e_i) = (Δ ⊗ id)Δ(e_i)` as terms `c · e_a ⊗ e_b ⊗ e_c`.
    pub fn comul2_basis(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (j, k, c) in &self.comul[i] {
            for (a, b, d) in &self.comul[*j] {
                out.push((*a, *b, *k, c * d));
            }
        }
        out
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit(&self, a: &SVec) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in a.iter() {
            s += &(x * &self.counit[*i]);
        }
        s
    }

    pub fn antipode_matrix(&self) -> &SparseMat {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &SparseMat {
        &self.antipode_inv
    }

    pub fn antipode(&self, a: &SVec) -> SVec {
        self.antipode.apply(a)
    }

    pub fn antipode_inv(&self, a: &SVec) -> SVec {
        self.antipode_inv.apply(a)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mul_matrix(&self, a: &SVec) -> SparseMat {
        let n = self.dim();
        SparseMat::from_fn(n, n, |j| self.mul(a, &SVec::unit(j)))
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_matrix(&self, a: &SVec) -> SparseMat {
        let n = self.dim();
        SparseMat::from_fn(n, n, |j| self.mul(&SVec::unit(j), a))
    }

    /// Product in `H ⊗ H`.
    pub fn mul_tensor(&self, x: &SVec, y: &SVec) -> SVec {
        let n = self.dim();
        let mut acc = Acc::new(n * n);
        for (p, u) in x.iter() {
            let (a, b) = (p / n, p % n);
            for (q, v) in y.iter() {
                let (c, d) = (q / n, q % n);
                let uv = u * v;
                for (l, s) in self.mul_basis(a, c).iter() {
                    for (r, t) in self.mul_basis(b, d).iter() {
                        acc.add(l * n + r, &(&uv * &(s * t)));
                    }
                }
            }
        }
        acc.drain()
    }

    fn tensor(&self, a: &SVec, b: &SVec) -> SVec {
        let n = self.dim();
        SVec::from_pairs(
            a.iter()
                .flat_map(|(i, x)| b.iter().map(move |(j, y)| (i * n + j, x * y))),
        )
    }

    /// Checks every Hopf algebra axiom on basis elements; the first failure is reported.
    pub fn check_axioms(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let fail = |what: String| Err(HopfError::Axiom(what));
        let e = |i: usize| SVec::unit(i);
        for i in 0..n {
            if self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i) {
                return fail(format!("unit law fails at {}", self.basis[i]));
            }
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let left = self.mul(ij, &e(k));
                    let right = self.mul(&e(i), self.mul_basis(j, k));
                    if left != right {
                        return fail(format!(
                            "associativity fails at ({}, {}, {})",
                            self.basis[i], self.basis[j], self.basis[k]
                        ));
                    }
                }
            }
        }
        if self.counit(&self.unit) != Scalar::one() {
            return fail("ε(1) ≠ 1".into());
        }
        if self.comul(&self.unit) != self.tensor(&self.unit, &self.unit) {
            return fail("Δ(1) ≠ 1 ⊗ 1".into());
        }
        for i in 0..n {
            // coassociativity
            let mut left: Vec<(usize, Scalar)> = Vec::new();
            let mut right: Vec<(usize, Scalar)> = Vec::new();
            for (j, k, c) in &self.comul[i] {
                for (a, b, d) in &self.comul[*j] {
                    left.push(((a * n + b) * n + k, c * d));
                }
                for (a, b, d) in &self.comul[*k] {
                    right.push(((j * n + a) * n + b, c * d));
                }
            }
            if SVec::from_pairs(left) != SVec::from_pairs(right) {
                return fail(format!("coassociativity fails at {}", self.basis[i]));
            }
            // counit law
            let mut l = Acc::new(n);
            let mut r = Acc::new(n);
            for (j, k, c) in &self.comul[i] {
                l.add(*k, &(c * &self.counit[*j]));
                r.add(*j, &(c * &self.counit[*k]));
            }
            if l.drain() != e(i) || r.drain() != e(i) {
                return fail(format!("counit law fails at {}", self.basis[i]));
            }
            // antipode law
            let eps = self.unit.scale(&self.counit[i]);
            let mut sl = Acc::new(n);
            let mut sr = Acc::new(n);
            for (j, k, c) in &self.comul[i] {
                sl.add_scaled(c, &self.mul(&self.antipode(&e(*j)), &e(*k)));
                sr.add_scaled(c, &self.mul(&e(*j), &self.antipode(&e(*k))));
            }
            if sl.drain() != eps || sr.drain() != eps {
                return fail(format!("antipode law fails at {}", self.basis[i]));
            }
            if self.antipode(&self.antipode_inv(&e(i))) != e(i) {
                return fail(format!("S ∘ S⁻¹ ≠ id at {}", self.basis[i]));
            }
        }
        // bialgebra compatibility
        for i in 0..n {
            let di = self.comul(&e(i));
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                if self.comul(ij) != self.mul_tensor(&di, &self.comul(&e(j))) {
                    return fail(format!(
                        "Δ is not multiplicative at ({}, {})",
                        self.basis[i], self.basis[j]
                    ));
                }
                if self.counit(ij) != &self.counit[i] * &self.counit[j] {
                    return fail(format!(
                        "ε is not multiplicative at ({}, {})",
                        self.basis[i], self.basis[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// The dual Hopf algebra on the dual basis `e^i`: multiplication is the transpose of
    /// `Δ`, comultiplication the transpose of `m`, unit `ε`, counit evaluation at `1`,
    /// antipode `Sᵀ`.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let mut mul = vec![Vec::new(); n * n];
        for (k, terms) in self.comul.iter().enumerate() {
            for (i, j, c) in terms {
                mul[i * n + j].push((k, c.clone()));
            }
        }
        let mul: Vec<SVec> = mul.into_iter().map(SVec::from_pairs).collect();
        let mut comul = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).iter() {
                    comul[*k].push((i, j, c.clone()));
                }
            }
        }
        let unit = SVec::from_pairs(self.counit.iter().cloned().enumerate());
        let counit = (0..n).map(|i| self.unit.get(i)).collect();
        let basis = self.basis.iter().map(|b| format!("{b}*")).collect();
        HopfAlgebra {
            name: format!("dual({})", self.name),
            field: self.field.clone(),
            basis,
            mul,
            unit,
            comul,
            counit,
            antipode: self.antipode.transpose(),
            antipode_inv: self.antipode_inv.transpose(),
        }
    }

    /// The tensor product Hopf algebra `self ⊗ other` on the basis `e_i ⊗ f_j`, indexed
    /// `i·m + j` where `m = dim other`.
    pub fn tensor_product(&self, other: &HopfAlgebra) -> HopfAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let nm = n * m;
        let split = |x: usize| (x / m, x % m);
        let mut mul = Vec::with_capacity(nm * nm);
        for x in 0..nm {
            let (i, j) = split(x);
            for y in 0..nm {
                let (k, l) = split(y);
                mul.push(self.tensor_vec(self.mul_basis(i, k), other.mul_basis(j, l), m));
            }
        }
        let comul = (0..nm)
            .map(|x| {
                let (i, j) = split(x);
                let mut out = Vec::new();
                for (a, b, c) in &self.comul[i] {
                    for (p, q, d) in &other.comul[j] {
                        out.push((a * m + p, b * m + q, c * d));
                    }
                }
                out
            })
            .collect();
        let counit = (0..nm)
            .map(|x| {
                let (i, j) = split(x);
                &self.counit[i] * &other.counit[j]
            })
            .collect();
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        HopfAlgebra {
            name: format!("{}⊗{}", self.name, other.name),
            field: self.field.clone(),
            basis,
            mul,
            unit: self.tensor_vec(&self.unit, &other.unit, m),
            comul,
            counit,
            antipode: self.antipode.kron(&other.antipode),
            antipode_inv: self.antipode_inv.kron(&other.antipode_inv),
        }
    }

    /// `H^{⊗k}` for `k ≥ 1`, with the first factor most significant.
    pub fn tensor_power(&self, k: usize) -> HopfAlgebra {
        assert!(k >= 1, "tensor power needs at least one factor");
        (1..k).fold(self.clone(), |acc, _| acc.tensor_product(self))
    }

    fn tensor_vec(&self, a: &SVec, b: &SVec, m: usize) -> SVec {
        SVec::from_pairs(a.iter().flat_map(|(i, x)| b.iter().map(move |(j, y)| (i * m + j, x * y))))
    }

    /// Dense matrix of a linear endomorphism given by the images of basis vectors.
    pub fn endo_matrix(&self, f: impl Fn(usize) -> SVec) -> Matrix {
        SparseMat::from_fn(self.dim(), self.dim(), f).to_dense()
    }

    pub(crate) fn rational_field() -> FieldSpec {
        make_field(1)
    }

    /// Human-readable form of an element, e.g. `y*h - 2*h`.
    pub fn format_element(&self, a: &SVec) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in a.iter().enumerate() {
            let coef = c.to_string();
            let label = &self.basis[*i];
            let term = if c.is_one() {
                label.clone()
            } else if (-c).is_one() {
                format!("-{label}")
            } else if coef.contains(' ') {
                format!("({coef})*{label}")
            } else {
                format!("{coef}*{label}")
            };
            if k > 0 {
                if let Some(rest) = term.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                    continue;
                }
                out.push_str(" + ");
            }
            out.push_str(&term);
        }
        out
    }
}
