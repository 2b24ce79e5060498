//! Exact arithmetic over cyclotomic fields and the linear algebra built on it.
//!
//! [`Scalar`] is an element of Q(ζ_N). [`Matrix`] is the dense kernel used for small
//! problems and for the public API; [`SparseMat`] and [`Echelon`] carry the large
//! operators that live on extended spaces.

mod field;
mod matrix;
mod scalar;
mod sparse;

pub use field::{cyclotomic_poly, make_field, totient, FieldSpec};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use sparse::{kernel_of_rows, Echelon, Frame, QuotientMap, SVec, SparseMat};
pub(crate) use sparse::Acc;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("not a basis: the given vectors are linearly dependent")]
    NotABasis,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
