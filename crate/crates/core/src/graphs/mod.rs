//! Kitaev graphs in reduced presentation `(ρ, C, pt)`.
//!
//! Half-edges are positive integers; the edge involution is always the parity
//! involution [`kappa`], so a graph is fixed by its vertex permutation `ρ`, the set of
//! cilia `C` and the distinguished cilium `pt`. Moves (edge reversals, adjacent edge
//! swaps and edge slides) act on presentations without changing the genus or the
//! number of boundary components, and [`reduce_to_standard`] finds a word of moves
//! carrying any valid graph to its standard form `Φ_{g,a}`.

mod graph;
mod moves;
mod perm;
mod reduce;

pub use graph::{standard_graph, Derived, GraphJson, Invariants, KitaevGraph, Violation};
pub use moves::{
    apply_move, apply_reordering, apply_slide, apply_word, connected_sum, scramble, slide_case,
    valid_slides, ConnectedSum, Move, MoveWord, SlideCase,
};
pub use perm::{kappa, Permutation};
pub use reduce::reduce_to_standard;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph data: {0}")]
    Format(String),
    #[error("invalid Kitaev graph: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("standard graph needs g + a > 0")]
    EmptyStandard,
    #[error("permutation does not commute with the edge involution")]
    NotAReordering,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
