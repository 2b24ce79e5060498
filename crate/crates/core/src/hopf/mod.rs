//! Finite-dimensional Hopf algebras as structure constants over a cyclotomic field.
//!
//! Besides constructors (group algebras, Taft algebras, duals, JSON files) this module
//! finds group-likes and characters, integrals and the distinguished pair `(a, α)`, and
//! the pairs in involution `(p, χ)` whose adjoint action `ad_{(p,χ)}` equals `S²`.

mod algebra;
mod builtins;
mod json;
mod structure;

pub use algebra::{CoTerm, HopfAlgebra};
pub use builtins::{builtin, cyclic_group, group_algebra, symmetric_group_3, taft_algebra};
pub use json::{Coef, HopfJson};
pub use structure::{
    ad, ad_is_hopf_automorphism, characters, check_s4, distinguished, group_likes,
    is_cosemisimple, is_semisimple, left_integrals, pairs_in_involution, Character,
    Distinguished, GroupLike, PairInInvolution,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("malformed Hopf algebra data: {0}")]
    Format(String),
    #[error("Hopf algebra axiom violated: {0}")]
    Axiom(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("space of integrals has dimension {0}, expected 1")]
    Integral(usize),
}

#[cfg(test)]
mod tests;
