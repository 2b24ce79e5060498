use serde::{Deserialize, Serialize};

use crate::exact::{SVec, SparseMat};
use crate::hopf::{Coef, HopfAlgebra};

use super::{ModComod, ReprError, Side};

/// File format for module-comodules. `action` and `coaction` list `[i, r, c, value]` for
/// the entry `(r, c)` of the matrix attached to the basis element `eᵢ`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModComodJson {
    pub dim: usize,
    pub side: Side,
    pub action: Vec<(usize, usize, usize, Coef)>,
    pub coaction: Vec<(usize, usize, usize, Coef)>,
}

fn family(entries: &[(usize, usize, usize, Coef)], n: usize, d: usize, order: u32) -> Result<Vec<SparseMat>, ReprError> {
    let mut cols = vec![vec![Vec::new(); d]; n];
    for (i, r, c, v) in entries {
        if *i >= n || *r >= d || *c >= d {
            return Err(ReprError::Format(format!("entry ({i}, {r}, {c}) out of range")));
        }
        let v = v.parse(order).map_err(|e| ReprError::Format(e.to_string()))?;
        cols[*i][*c].push((*r, v));
    }
    Ok(cols
        .into_iter()
        .map(|cs| SparseMat::from_columns(d, cs.into_iter().map(SVec::from_pairs).collect()))
        .collect())
}

fn entries(fam: &[SparseMat]) -> Vec<(usize, usize, usize, Coef)> {
    let mut out = Vec::new();
    for (i, m) in fam.iter().enumerate() {
        for (c, col) in m.columns().iter().enumerate() {
            for (r, v) in col.iter() {
                out.push((i, *r, c, Coef::from_scalar(v)));
            }
        }
    }
    out
}

impl ModComod {
    pub fn from_json(j: &ModComodJson, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        let (n, d) = (h.dim(), j.dim);
        ModComod::new(
            d,
            j.side,
            family(&j.action, n, d, h.order())?,
            family(&j.coaction, n, d, h.order())?,
        )
    }

    pub fn to_json(&self) -> ModComodJson {
        ModComodJson {
            dim: self.dim,
            side: self.side,
            action: entries(&self.action),
            coaction: entries(&self.coaction),
        }
    }

    pub fn parse_json(s: &str, h: &HopfAlgebra) -> Result<ModComod, ReprError> {
        let j: ModComodJson = serde_json::from_str(s).map_err(|e| ReprError::Format(e.to_string()))?;
        ModComod::from_json(&j, h)
    }
}
