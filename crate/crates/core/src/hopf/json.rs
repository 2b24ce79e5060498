use serde::{Deserialize, Serialize};

use crate::exact::{make_field, Matrix, SVec, Scalar, SparseMat};

use super::algebra::HopfAlgebra;
use super::HopfError;

/// A scalar written either as a JSON integer or as a string such as `"-1/2*z^3 + 1"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

impl Coef {
    pub(crate) fn parse(&self, order: u32) -> Result<Scalar, HopfError> {
        match self {
            Coef::Int(i) => Ok(Scalar::from_int(*i)),
            Coef::Text(s) => Scalar::parse(s, order).map_err(|e| HopfError::Format(e.to_string())),
        }
    }

    pub(crate) fn from_scalar(s: &Scalar) -> Coef {
        match s.as_rational() {
            Some(r) if r.is_integer() => match i64::try_from(r.to_integer()) {
                Ok(i) => Coef::Int(i),
                Err(_) => Coef::Text(s.to_string()),
            },
            _ => Coef::Text(s.to_string()),
        }
    }
}

/// File format for Hopf algebras.
///
/// `mul` holds `[i, j, k, c]` for `e_i e_j ∋ c e_k`, `comul` holds `[i, j, k, c]` for
/// `Δ(e_i) ∋ c e_j ⊗ e_k`, and `antipode[r][c]` is the coefficient of `e_r` in `S(e_c)`.
/// `unit` is optional and solved for when absent.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    pub cyclotomic_order: u32,
    pub basis: Vec<String>,
    pub mul: Vec<(usize, usize, usize, Coef)>,
    pub comul: Vec<(usize, usize, usize, Coef)>,
    pub counit: Vec<Coef>,
    pub antipode: Vec<Vec<Coef>>,
    #[serde(default)]
    pub unit: Option<Vec<Coef>>,
}

impl HopfAlgebra {
    pub fn from_json(j: &HopfJson) -> Result<HopfAlgebra, HopfError> {
        let n = j.dim;
        let ord = j.cyclotomic_order.max(1);
        let bad = |m: String| HopfError::Format(m);
        if j.basis.len() != n || j.counit.len() != n || j.antipode.len() != n {
            return Err(bad("basis, counit and antipode must have length dim".into()));
        }
        let check = |i: usize| if i < n { Ok(i) } else { Err(bad(format!("index {i} ≥ dim"))) };
        let mut mul = vec![Vec::new(); n * n];
        for (i, jj, k, c) in &j.mul {
            mul[check(*i)? * n + check(*jj)?].push((check(*k)?, c.parse(ord)?));
        }
        let mul: Vec<SVec> = mul.into_iter().map(SVec::from_pairs).collect();
        let mut comul = vec![Vec::new(); n];
        for (i, a, b, c) in &j.comul {
            comul[check(*i)?].push((check(*a)?, check(*b)?, c.parse(ord)?));
        }
        let comul = comul
            .into_iter()
            .map(|terms| {
                SVec::from_pairs(terms.into_iter().map(|(a, b, c)| (a * n + b, c)))
                    .iter()
                    .map(|(p, c)| (p / n, p % n, c.clone()))
                    .collect()
            })
            .collect();
        let counit = j
            .counit
            .iter()
            .map(|c| c.parse(ord))
            .collect::<Result<Vec<_>, _>>()?;
        let mut cols = vec![Vec::new(); n];
        for (r, row) in j.antipode.iter().enumerate() {
            if row.len() != n {
                return Err(bad("antipode must be dim × dim".into()));
            }
            for (c, v) in row.iter().enumerate() {
                cols[c].push((r, v.parse(ord)?));
            }
        }
        let antipode = SparseMat::from_columns(n, cols.into_iter().map(SVec::from_pairs).collect());
        let unit = match &j.unit {
            Some(u) => SVec::from_pairs(
                u.iter()
                    .enumerate()
                    .map(|(i, c)| c.parse(ord).map(|s| (i, s)))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            None => solve_unit(n, &mul)?,
        };
        HopfAlgebra::from_parts(
            j.name.clone().unwrap_or_else(|| "custom".into()),
            make_field(ord),
            j.basis.clone(),
            mul,
            unit,
            comul,
            counit,
            antipode,
        )
    }

    pub fn to_json(&self) -> HopfJson {
        let n = self.dim();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).iter() {
                    mul.push((i, j, *k, Coef::from_scalar(c)));
                }
            }
        }
        let comul = (0..n)
            .flat_map(|i| {
                self.comul_basis(i)
                    .iter()
                    .map(move |(a, b, c)| (i, *a, *b, Coef::from_scalar(c)))
            })
            .collect();
        let s = self.antipode_matrix();
        let antipode = (0..n)
            .map(|r| (0..n).map(|c| Coef::from_scalar(&s.get(r, c))).collect())
            .collect();
        HopfJson {
            name: Some(self.name.clone()),
            dim: n,
            cyclotomic_order: self.order(),
            basis: self.basis.clone(),
            mul,
            comul,
            counit: (0..n).map(|i| Coef::from_scalar(self.counit_basis(i))).collect(),
            antipode,
            unit: Some((0..n).map(|i| Coef::from_scalar(&self.one().get(i))).collect()),
        }
    }

    pub fn parse_json(s: &str) -> Result<HopfAlgebra, HopfError> {
        let j: HopfJson = serde_json::from_str(s).map_err(|e| HopfError::Format(e.to_string()))?;
        HopfAlgebra::from_json(&j)
    }
}

/// The unit `u` solves `u e_j = e_j` for all `j`.
fn solve_unit(n: usize, mul: &[SVec]) -> Result<SVec, HopfError> {
    // unknowns u_i; equation (j, k): Σ_i u_i m_{ij}^k = δ_{jk}
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| mul[i * n + j].get(k)).collect::<Vec<_>>());
            rhs.push(if j == k { Scalar::one() } else { Scalar::zero() });
        }
    }
    let u = Matrix::from_rows(rows)
        .solve(&rhs)
        .ok_or_else(|| HopfError::Axiom("multiplication has no unit".into()))?;
    Ok(SVec::from_dense(&u))
}
