//! Evaluators and verifiers for every numbered identity in scope, in
//! exact-numeric mode (rational parameters) and symbolic mode (parameters as
//! indeterminates of a polynomial ring). The gamma/beta extension runs in
//! arbitrary-precision floating point instead: its individual terms are
//! transcendental, so no exact check is possible.

mod gamma_miki;
mod lemma1;
mod miki;
mod pan_sun;
mod sun_pan;
mod theorem1;
mod theorem2;
pub mod trials;
mod woodcock;

pub use gamma_miki::verify_gamma_miki;
pub use lemma1::{lemma1_sides, verify_lemma1_numeric, verify_lemma1_symbolic};
pub use miki::{verify_matiyasevich, verify_miki};
pub use pan_sun::{verify_pan_sun_poly, verify_pan_sun_poly_numeric, PanSunKind};
pub use sun_pan::{
    bracket_sum, sun_pan_combination, verify_sun_pan_numeric, verify_sun_pan_symbolic,
};
pub use theorem1::{
    theorem1_rhs_reflected, theorem1_sides, verify_theorem1_numeric, verify_theorem1_symbolic,
    Theorem1Params,
};
pub use theorem2::{theorem2_sides, verify_theorem2, GammaParams};
pub use woodcock::{verify_woodcock, woodcock_a};

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use thiserror::Error;

use crate::bigfloat::GammaError;
use crate::exact::Rat;
use crate::poly::MultiPoly;
use crate::report::{IdentityId, IdentityReport, Mode};
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    /// A numeric evaluation hit a vanishing denominator of the identity
    /// (e.g. x = y where the right side divides by x - y).
    #[error("degenerate evaluation: {0}")]
    DegenerateEvaluation(String),
    /// Bug sentinel: a surviving term asked for B_{-1}. The pruning argument
    /// guarantees this cannot happen, so seeing it means the enumeration is
    /// wrong.
    #[error("negative Bernoulli index would be required: {0}")]
    NegativeBernoulliIndex(String),
    #[error("gamma pole: {0}")]
    GammaPole(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl From<GammaError> for IdentityError {
    fn from(e: GammaError) -> Self {
        match e {
            GammaError::Pole(s) => IdentityError::GammaPole(s),
            GammaError::PrecisionTooLow(b) => {
                IdentityError::Precondition(format!("precision too low: {b} bits"))
            }
        }
    }
}

pub(crate) fn finish_exact(
    id: IdentityId,
    parameters: BTreeMap<String, String>,
    lhs: &Rat,
    rhs: &Rat,
    start: Instant,
) -> IdentityReport {
    let diff = lhs - rhs;
    IdentityReport {
        identity_id: id,
        mode: Mode::ExactNumeric,
        parameters,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: diff.to_string(),
        pass: diff.is_zero(),
        elapsed: start.elapsed(),
    }
}

pub(crate) fn finish_symbolic(
    id: IdentityId,
    parameters: BTreeMap<String, String>,
    ring: &PolyRing,
    lhs: &MultiPoly,
    rhs: &MultiPoly,
    start: Instant,
) -> IdentityReport {
    let diff = lhs - rhs;
    IdentityReport {
        identity_id: id,
        mode: Mode::Symbolic,
        parameters,
        lhs: lhs.render(ring.names()),
        rhs: rhs.render(ring.names()),
        difference: diff.render(ring.names()),
        pass: diff.is_zero(),
        elapsed: start.elapsed(),
    }
}

/// Renders a rational list for the parameters map.
pub(crate) fn render_rats(xs: &[Rat]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
