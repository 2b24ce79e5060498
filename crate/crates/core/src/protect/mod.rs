//! Tensor, cotensor and bitensor products, and the protected spaces built from them.
//!
//! For a right-right module-comodule `X` and a left-left module-comodule `M` over `H`,
//! the bitensor product is the image of the cotensor product `X □ M ⊆ X ⊗ M` in the
//! tensor product `X ⊗_H M`. Protected spaces take `M` to be the extended space of a
//! graph with one copy of `H` per cilium; [`bitensor_multi`] handles that case either in
//! one shot or cilium by cilium.

mod bitensor;
mod bosonisation;
mod excision;
mod group;
mod protected;

pub use bitensor::{
    algebra_generators, bitensor, bitensor_multi, cotensor, tensor_over, BitensorResult, MultiResult, StageSummary,
    Strategy, YdFamily,
};
pub use bosonisation::{bosonisation_reduce, isotypic_dim, reduction_check, Reduced, ReductionReport, SplitProjection};
pub use excision::{distinguished_residual, excision_check, ExcisionReport};
pub use group::{group_oracle, GroupTable};
pub use protected::{
    coinvariant_pair, filler, inflate, invariant_dim, protected_space, protected_space_with, unit_coefficient, Protected,
    ProtectedSpec,
};

use thiserror::Error;

use crate::graphs::GraphError;
use crate::lattice::LatticeError;
use crate::reps::ReprError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProtectError {
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
    #[error("bimodule not induced by a pair in involution: {0}")]
    NotInduced(String),
    #[error("{0} is not central")]
    NotCentral(String),
    #[error("not a group algebra: {0}")]
    NotAGroup(String),
    #[error("not a split projection of Hopf algebras: {0}")]
    BadProjection(String),
    #[error("the induced structure is not well defined: {0}")]
    NotStable(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}
