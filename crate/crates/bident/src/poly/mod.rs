//! Exact polynomial rings over Q: dense univariate (`UniPoly`) and sparse
//! multivariate (`MultiPoly`). These carry the symbolic sides of the
//! identities when their parameters are treated as indeterminates.

mod multi;
mod uni;

pub use multi::{Expos, MultiPoly};
pub use uni::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("no exact quotient exists")]
    NotDivisible,
}
