use crate::exact::{SVec, SparseMat};
use crate::graphs::{kappa, valid_slides, Move};

use super::{ExtendedSpace, LatticeError};

/// Outcome of a family of exact identity checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

fn commute(a: &SparseMat, b: &SparseMat) -> bool {
    a.mul(b) == b.mul(a)
}

impl ExtendedSpace {
    /// Module, comodule and untwisted Yetter–Drinfeld laws at every cilium, and the
    /// commutation of vertex actions and face coactions at distinct cilia.
    pub fn verify_extended_yd(&self) -> Result<Report, LatticeError> {
        let h = self.hopf();
        let n = h.dim();
        let mut report = Report::default();
        let mods = self.cilium_modules()?;
        for (c, m) in &mods {
            let r = m.check_module(h);
            report.record(r.is_ok(), || format!("cilium {c}: vertex action: {}", r.unwrap_err()));
            let r = m.check_comodule(h);
            report.record(r.is_ok(), || format!("cilium {c}: face coaction: {}", r.unwrap_err()));
            let defect = m.yd_defect(h, &SparseMat::identity(n));
            report.record(defect.is_none(), || {
                let (t, x) = defect.unwrap();
                format!("cilium {c}: Yetter–Drinfeld law fails for h = {}, basis vector {x}", h.basis[t])
            });
        }
        let cilia: Vec<u32> = mods.keys().copied().collect();
        for (i, c) in cilia.iter().enumerate() {
            for d in &cilia[i + 1..] {
                let (mc, md) = (&mods[c], &mods[d]);
                for x in 0..n {
                    for y in 0..n {
                        let label = |kind: &str| format!("{kind} at cilia {c} and {d} do not commute for ({}, {})", h.basis[x], h.basis[y]);
                        report.record(commute(&mc.action[x], &md.action[y]), || label("vertex actions"));
                        report.record(commute(&mc.coaction[x], &md.coaction[y]), || label("face coactions"));
                        report.record(commute(&mc.action[x], &md.coaction[y]), || label("vertex action and face coaction"));
                        report.record(commute(&md.action[y], &mc.coaction[x]), || label("face coaction and vertex action"));
                    }
                }
            }
        }
        Ok(report)
    }

    /// The interchange relations between `Ψ_e`, `L`- and `T`-operators, together with
    /// the algebra-map properties of `L_h` and `T_h`, on all basis inputs.
    ///
    /// Relations between operators on the same edge are checked on the leg itself;
    /// relations between different edges are checked on the full space for the first
    /// and last leg.
    pub fn check_interchange(&self) -> Report {
        let h = self.hopf();
        let n = h.dim();
        let d = self.bimodule().dim;
        let s = h.antipode_matrix();
        let mut report = Report::default();
        let ops = &self.local;
        let fam = |x: u32, l: bool| -> &[SparseMat] {
            match (x % 2 == 1, l) {
                (true, true) => &ops.l_source,
                (false, true) => &ops.l_target,
                (true, false) => &ops.t_source,
                (false, false) => &ops.t_target,
            }
        };
        // the product table (e_x e_y)_l, grouped by l
        let mut products: Vec<Vec<(usize, usize, crate::exact::Scalar)>> = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                for (l, c) in h.mul_basis(x, y).iter() {
                    products[*l].push((x, y, c.clone()));
                }
            }
        }
        let name = |x: u32| if x % 2 == 1 { "source" } else { "target" };
        for (hx, other) in [(1u32, 2u32), (2, 1)] {
            let (l_h, t_h, l_o, t_o) = (fam(hx, true), fam(hx, false), fam(other, true), fam(other, false));
            for k in 0..n {
                for l in 0..n {
                    // algebra maps: L_h(e_k)L_h(e_l) = L_h(e_k e_l), T_h(ζ_k)T_h(ζ_l) = T_h(ζ_l ζ_k)
                    let prod = crate::reps::combine(l_h, h.mul_basis(k, l), d);
                    report.record(l_h[k].mul(&l_h[l]) == prod, || format!("L on a {} is not multiplicative at ({}, {})", name(hx), h.basis[k], h.basis[l]));
                    let mut dual = SparseMat::zero(d, d);
                    for j in 0..n {
                        for (a, b, c) in h.comul_basis(j) {
                            if *a == l && *b == k {
                                dual = dual.add_scaled(c, &t_h[j]);
                            }
                        }
                    }
                    report.record(t_h[k].mul(&t_h[l]) == dual, || format!("T on a {} is not an (H*)^op map at ({k}, {l})", name(hx)));
                    // same edge, different half-edges
                    report.record(commute(&l_h[k], &l_o[l]), || format!("L on source and target do not commute at ({k}, {l})"));
                    report.record(commute(&t_h[k], &t_o[l]), || format!("T on source and target do not commute at ({k}, {l})"));
                    // T_h(ζ_l)L_h(e_k) = Σ c (e_x e_y)_l ζ_y(S e_q) L_h(e_p)T_h(ζ_x)
                    let lhs = t_h[l].mul(&l_h[k]);
                    let mut rhs = SparseMat::zero(d, d);
                    for (p, q, c) in h.comul_basis(k) {
                        for (x, y, m) in &products[l] {
                            let coef = &(c * m) * &s.get(*y, *q);
                            if !coef.is_zero() {
                                rhs = rhs.add_scaled(&coef, &l_h[*p].mul(&t_h[*x]));
                            }
                        }
                    }
                    report.record(lhs == rhs, || format!("T_h L_h interchange fails on a {} for (e_{k}, ζ_{l})", name(hx)));
                    // T_ιh(ζ_l)L_h(e_k) = Σ c (e_p e_y)_l L_h(e_q)T_ιh(ζ_y)
                    let lhs = t_o[l].mul(&l_h[k]);
                    let mut rhs = SparseMat::zero(d, d);
                    for (p, q, c) in h.comul_basis(k) {
                        for (y, m) in (0..n).flat_map(|y| h.mul_basis(*p, y).iter().filter(|(j, _)| *j == l).map(move |(_, m)| (y, m))) {
                            rhs = rhs.add_scaled(&(c * m), &l_h[*q].mul(&t_o[y]));
                        }
                    }
                    report.record(lhs == rhs, || format!("T_ιh L_h interchange fails on a {} for (e_{k}, ζ_{l})", name(hx)));
                }
                if let Some(psi) = &self.bimodule().psi {
                    report.record(psi.mul(&l_h[k]) == l_o[k].mul(psi), || format!("Ψ L_h ≠ L_ιh Ψ on a {} at {}", name(hx), h.basis[k]));
                    report.record(psi.mul(&t_h[k]) == t_o[k].mul(psi), || format!("Ψ T_h ≠ T_ιh Ψ on a {} at ζ_{k}", name(hx)));
                }
            }
        }
        if self.num_legs() >= 2 {
            let first = self.edge_order()[0];
            let last = *self.edge_order().last().expect("two legs");
            let psi = self.bimodule().psi.as_ref().map(|p| self.embed(0, p));
            for hx in [first, kappa(first)] {
                for ky in [last, kappa(last)] {
                    for k in 0..n {
                        let e = SVec::unit(k);
                        let lh = self.l_operator(hx, &e).expect("half-edge of the graph");
                        let th = self.t_operator(hx, &e).expect("half-edge of the graph");
                        if let Some(psi) = &psi {
                            let lk = self.l_operator(ky, &e).expect("half-edge of the graph");
                            let tk = self.t_operator(ky, &e).expect("half-edge of the graph");
                            report.record(commute(psi, &lk) && commute(psi, &tk), || format!("Ψ on edge {first} does not commute with operators at {ky}"));
                        }
                        for l in 0..n {
                            let f = SVec::unit(l);
                            let lk = self.l_operator(ky, &f).expect("half-edge of the graph");
                            let tk = self.t_operator(ky, &f).expect("half-edge of the graph");
                            report.record(commute(&lh, &lk), || format!("L_{hx} and L_{ky} do not commute at ({k}, {l})"));
                            report.record(commute(&th, &tk), || format!("T_{hx} and T_{ky} do not commute at ({k}, {l})"));
                            report.record(commute(&th, &lk), || format!("T_{hx} and L_{ky} do not commute at ({k}, {l})"));
                        }
                    }
                }
            }
        }
        report
    }
}

impl ExtendedSpace {
    /// Every structural check the lattice supports: interchange identities, the extended
    /// Yetter–Drinfeld laws, intertwining for each edge reversal, adjacent edge
    /// permutation and valid slide, and involutivity of reversals and slides.
    pub fn verify_all(&self) -> Result<Report, LatticeError> {
        let mut report = self.check_interchange();
        report.merge(self.verify_extended_yd()?);
        let edges = self.graph().num_edges() as u32;
        for i in 1..=edges {
            let t = self.mu_move(Move::EdgeReversal(i))?;
            report.merge(self.check_intertwining(&t)?);
            let back = t.space.mu_move(Move::EdgeReversal(i))?;
            report.record(back.matrix.mul(&t.matrix).is_identity(), || {
                format!("reversal of edge {i} is not involutive")
            });
            if i < edges {
                let t = self.mu_move(Move::EdgePermutation(i))?;
                report.merge(self.check_intertwining(&t)?);
            }
        }
        for (a, b) in valid_slides(self.graph()) {
            let t = self.mu_slide(a, b)?;
            report.merge(self.check_intertwining(&t)?);
            let back = t.space.mu_slide(a, b)?;
            report.record(
                back.space.graph() == self.graph() && back.matrix.mul(&t.matrix).is_identity(),
                || format!("slide ({a}, {b}) is not involutive"),
            );
        }
        Ok(report)
    }
}
