use std::collections::BTreeMap;

use crate::exact::{Acc, SVec, Scalar, SparseMat};
use crate::graphs::{apply_reordering, apply_slide, kappa, slide_case, Move, Permutation, SlideCase};

use super::{ExtendedSpace, LatticeError};

/// The image of a structure-group element: a linear isomorphism from the extended space
/// of the old graph onto the extended space of the new one.
#[derive(Clone, Debug)]
pub struct Transport {
    pub matrix: SparseMat,
    pub space: ExtendedSpace,
    /// Where each cilium of the old graph ends up.
    pub cilium_map: BTreeMap<u32, u32>,
}

impl Transport {
    pub fn identity(space: &ExtendedSpace) -> Transport {
        Transport {
            matrix: SparseMat::identity(space.total_dim()),
            space: space.clone(),
            cilium_map: space.cilia().into_iter().map(|c| (c, c)).collect(),
        }
    }

    /// `next ∘ self`.
    pub fn then(self, next: Transport) -> Transport {
        let cilium_map = self.cilium_map.iter().map(|(&c, d)| (c, next.cilium_map[d])).collect();
        Transport {
            matrix: next.matrix.mul(&self.matrix),
            space: next.space,
            cilium_map,
        }
    }
}

impl ExtendedSpace {
    /// `μ(σ)` for a reordering `σ`: legs are permuted along `σ`, and `ψ` is applied on
    /// every edge whose source is sent to a target.
    pub fn mu_reordering(&self, sigma: &Permutation) -> Result<Transport, LatticeError> {
        let space = self.rebuild(apply_reordering(self.graph(), sigma)?)?;
        let d = self.bimodule().dim;
        let legs = self.num_legs();
        let mut placement = vec![(0usize, false); legs];
        for (p, &s) in self.edge_order().iter().enumerate() {
            let image = sigma.apply(s);
            placement[p] = (space.leg_of(image)?, image.is_multiple_of(2));
        }
        let psi = if placement.iter().any(|&(_, flip)| flip) {
            Some(self.bimodule().psi.as_ref().ok_or(LatticeError::NoInvolution)?)
        } else {
            None
        };
        let matrix = SparseMat::from_fn(self.total_dim(), self.total_dim(), |index| {
            let digits = self.digits(index);
            let mut per_leg = vec![SVec::new(); legs];
            for (p, &(q, flip)) in placement.iter().enumerate() {
                per_leg[q] = match (flip, psi) {
                    (true, Some(psi)) => psi.column(digits[p]).clone(),
                    _ => SVec::unit(digits[p]),
                };
            }
            per_leg
                .iter()
                .fold(SVec::unit(0), |acc, v| crate::reps::tensor(&acc, v, d))
        });
        let cilium_map = self.cilia().into_iter().map(|c| (c, sigma.apply(c))).collect();
        Ok(Transport { matrix, space, cilium_map })
    }

    /// `μ(τ_i) = Ψ_{(2i−1 2i)}`.
    pub fn mu_reversal(&self, i: u32) -> Result<Transport, LatticeError> {
        self.mu_move(Move::EdgeReversal(i))
    }

    /// The image of the slide `𝔰_{a,b}`: `Σᵢ L_b(eᵢ)T_a(ζᵢ)` when `ρ(a) = b`,
    /// `Σᵢ L_b(S⁻¹eᵢ)T_a(ζᵢ)` when `ρ(b) = κ(a)`, and the identity otherwise.
    pub fn mu_slide(&self, a: u32, b: u32) -> Result<Transport, LatticeError> {
        let Some(case) = slide_case(self.graph(), a, b) else {
            return Ok(Transport::identity(self));
        };
        let h = self.hopf();
        let n = h.dim();
        let (leg_a, leg_b) = (self.leg_of(a)?, self.leg_of(b)?);
        let sinv = h.antipode_inv_matrix();
        let mut acc = Acc::new(self.total_dim());
        let mut cols = Vec::with_capacity(self.total_dim());
        let t_fam = if a % 2 == 1 { &self.local.t_source } else { &self.local.t_target };
        let l_mats: Vec<SparseMat> = (0..n)
            .map(|i| {
                let x = match case {
                    SlideCase::Forward => SVec::unit(i),
                    SlideCase::Backward => sinv.column(i).clone(),
                };
                self.l_local(b, &x)
            })
            .collect::<Result<_, _>>()?;
        let one = Scalar::one();
        for index in 0..self.total_dim() {
            let e = SVec::unit(index);
            for i in 0..n {
                let mut inner = Acc::new(self.total_dim());
                self.apply_local_into(&mut inner, leg_a, &t_fam[i], &e, &one);
                let moved = inner.drain();
                self.apply_local_into(&mut acc, leg_b, &l_mats[i], &moved, &one);
            }
            cols.push(acc.drain());
        }
        let tau = Permutation::transposition(kappa(a), b);
        let space = self.rebuild(apply_slide(self.graph(), a, b))?;
        Ok(Transport {
            matrix: SparseMat::from_columns(self.total_dim(), cols),
            space,
            cilium_map: self.cilia().into_iter().map(|c| (c, tau.apply(c))).collect(),
        })
    }

    pub fn mu_move(&self, m: Move) -> Result<Transport, LatticeError> {
        match m {
            Move::Slide(a, b) => self.mu_slide(a, b),
            _ => {
                let sigma = m.reordering().ok_or_else(|| LatticeError::InvalidMove {
                    position: 0,
                    generator: m,
                    reason: "edge indices start at 1".into(),
                })?;
                self.mu_reordering(&sigma)
            }
        }
    }

    /// The composite of the generator images along a word, applied left to right.
    pub fn mu_word(&self, word: &[Move]) -> Result<Transport, LatticeError> {
        let mut out = Transport::identity(self);
        for (position, &m) in word.iter().enumerate() {
            let step = out.space.mu_move(m).map_err(|e| LatticeError::InvalidMove {
                position,
                generator: m,
                reason: match e {
                    LatticeError::InvalidMove { reason, .. } => reason,
                    other => other.to_string(),
                },
            })?;
            out = out.then(step);
        }
        Ok(out)
    }

    /// Checks `μ ∘ A_c(eₓ) = A'_{c'}(eₓ) ∘ μ` and `μ ∘ C^c_y = C'^{c'}_y ∘ μ` for every
    /// cilium and basis element.
    pub fn check_intertwining(&self, t: &Transport) -> Result<super::Report, LatticeError> {
        let mut report = super::Report::default();
        let n = self.hopf().dim();
        for (&c, &c2) in &t.cilium_map {
            let before = self.cilium_module(c)?;
            let after = t.space.cilium_module(c2)?;
            for x in 0..n {
                report.checks += 2;
                if t.matrix.mul(&before.action[x]) != after.action[x].mul(&t.matrix) {
                    report.failures.push(format!("vertex action at cilium {c} → {c2} is not intertwined for {}", self.hopf().basis[x]));
                }
                if t.matrix.mul(&before.coaction[x]) != after.coaction[x].mul(&t.matrix) {
                    report.failures.push(format!("face coaction at cilium {c} → {c2} is not intertwined for component {x}"));
                }
            }
        }
        Ok(report)
    }
}
