use crate::exact::{Echelon, SVec, Scalar};
use crate::hopf::{Character, GroupLike, HopfAlgebra};

use super::ProtectError;

/// Multiplication table of a group read off a group algebra `kG` whose basis is `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub order: usize,
    pub identity: usize,
    /// `mul[a][b]` is the index of `ab`.
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

fn as_basis_element(v: &SVec) -> Option<usize> {
    match v.iter().as_slice() {
        [(i, c)] if c.is_one() => Some(*i),
        _ => None,
    }
}

impl GroupTable {
    pub fn from_hopf(h: &HopfAlgebra) -> Result<GroupTable, ProtectError> {
        let n = h.dim();
        let identity = as_basis_element(h.one())
            .ok_or_else(|| ProtectError::NotAGroup("the unit is not a basis element".into()))?;
        let mut mul = vec![vec![0; n]; n];
        for (a, row) in mul.iter_mut().enumerate() {
            if h.comul_basis(a) != [(a, a, Scalar::one())] {
                return Err(ProtectError::NotAGroup(format!("{} is not group-like", h.basis[a])));
            }
            for (b, entry) in row.iter_mut().enumerate() {
                *entry = as_basis_element(h.mul_basis(a, b)).ok_or_else(|| {
                    ProtectError::NotAGroup(format!("{} · {} is not a basis element", h.basis[a], h.basis[b]))
                })?;
            }
        }
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a][b] == identity)
                    .ok_or_else(|| ProtectError::NotAGroup(format!("{} has no inverse", h.basis[a])))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupTable {
            order: n,
            identity,
            mul,
            inv,
        })
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul[acc][a])
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let m = &self.mul;
        m[m[m[x][y]][self.inv[x]]][self.inv[y]]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul[self.mul[g][x]][self.inv[g]]
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order).all(|b| self.mul[a][b] == self.mul[b][a])
    }
}

/// Tuples `(a₁, b₁, …, a_g, b_g)` with `[b_g, a_g⁻¹] ⋯ [b₁, a₁⁻¹] = target`.
fn surface_tuples(t: &GroupTable, genus: usize, target: usize) -> Vec<Vec<usize>> {
    let n = t.order;
    let total = n.pow(2 * genus as u32);
    (0..total)
        .map(|mut code| {
            (0..2 * genus)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect::<Vec<_>>()
        })
        .filter(|tuple| {
            let word = tuple
                .chunks(2)
                .fold(t.identity, |acc, ab| t.mul[t.commutator(ab[1], t.inv[ab[0]])][acc]);
            word == target
        })
        .collect()
}

/// The protected space of the closed genus `g` surface over `kG`, for a central `p` and
/// a character `χ`, from the group side alone: the tuples above with `target = p^{2g}`,
/// permuted by simultaneous conjugation, modulo `h • t − χ^{-2g}(h) t`.
pub fn group_oracle(h: &HopfAlgebra, p: &GroupLike, chi: &Character, genus: usize) -> Result<usize, ProtectError> {
    let t = GroupTable::from_hopf(h)?;
    let pi = as_basis_element(&p.element)
        .ok_or_else(|| ProtectError::NotAGroup("p is not a group element".into()))?;
    if !t.is_central(pi) {
        return Err(ProtectError::NotCentral(h.basis[pi].clone()));
    }
    let tuples = surface_tuples(&t, genus, t.pow(pi, 2 * genus));
    let index = |tuple: &Vec<usize>| tuples.binary_search_by(|u| u.iter().rev().cmp(tuple.iter().rev()));
    let twist = |g: usize| chi.values[g].pow(2 * genus as u64).inv().expect("character values are units");
    let mut relations = Echelon::new(tuples.len());
    for g in 0..t.order {
        let c = twist(g);
        for (k, tuple) in tuples.iter().enumerate() {
            let moved: Vec<usize> = tuple.iter().map(|&x| t.conjugate(g, x)).collect();
            let j = index(&moved).expect("conjugation preserves the relation");
            relations.insert(&SVec::unit(j).add_scaled(&-c.clone(), &SVec::unit(k)));
        }
    }
    Ok(tuples.len() - relations.rank())
}
