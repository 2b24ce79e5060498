//! Shared workloads for the criterion benchmarks.

use std::rc::Rc;

use kitaev::graphs::{standard_graph, KitaevGraph};
use kitaev::hopf::{builtin, pairs_in_involution, HopfAlgebra};
use kitaev::lattice::ExtendedSpace;
use kitaev::protect::ProtectedSpec;
use kitaev::reps::{induced_bimodule, HopfBimodule, ModComod, Side};

/// A built-in algebra with the bimodule of its first pair whose bimodule exists.
pub fn setup(name: &str) -> (Rc<HopfAlgebra>, Rc<HopfBimodule>) {
    let h = builtin(name).expect("built-in algebra");
    let pair = pairs_in_involution(&h)
        .into_iter()
        .find(|p| p.zeta.is_some())
        .expect("a usable pair");
    let m = induced_bimodule(&h, &pair).expect("induced bimodule");
    (Rc::new(h), Rc::new(m))
}

pub fn graph(g: u32, a: u32) -> KitaevGraph {
    standard_graph(g, a).expect("standard graph")
}

pub fn space(name: &str, g: u32, a: u32) -> ExtendedSpace {
    let (h, m) = setup(name);
    ExtendedSpace::new(graph(g, a), h, m).expect("extended space")
}

/// Protected space with the trivial coefficient at the distinguished cilium.
pub fn protected_spec(name: &str, g: u32, a: u32) -> ProtectedSpec {
    let (h, m) = setup(name);
    let coefficient = ModComod::trivial(&h, Side::RightRight);
    ProtectedSpec {
        hopf: h,
        bimodule: m,
        graph: graph(g, a),
        coefficient,
    }
}
