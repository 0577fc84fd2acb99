//! bident: an exact-arithmetic verification engine for symmetric identities
//! on Bernoulli polynomials.
//!
//! Every identity is machine-checked in one or more of three modes:
//!
//! - exact-numeric: parameters are arbitrary-precision rationals, both sides
//!   are evaluated exactly and compared for equality;
//! - symbolic: parameters are indeterminates of a sparse multivariate
//!   polynomial ring over Q, and the difference of the sides must be the zero
//!   polynomial;
//! - bigfloat: for the one gamma/beta extension whose individual terms are
//!   transcendental, both sides are evaluated in arbitrary-precision floating
//!   point and compared against a precision-derived tolerance.
//!
//! An independent truncated exponential-generating-function engine re-derives
//! the Bernoulli coefficients by power-series division and cross-checks the
//! generating-function identity behind the main theorem, so the core results
//! are each confirmed by two disjoint code paths.

pub mod bernoulli;
pub mod bigfloat;
pub mod exact;
pub mod identities;
pub mod poly;
pub mod report;
pub mod ring;
pub mod series;

pub use exact::Rat;
pub use report::{IdentityId, IdentityReport, Mode};
