//! The polynomial extension of Woodcock's identity, via the family
//!
//!   A_{m,n}(x) = (1/n) sum_{k=0}^{n} binom(n,k)(-1)^k B_{m+k}(x) B_{n-k}(2x)
//!                - (1/n) B_m(x) B_n(x),
//!
//! which is symmetric in the sense A_{m-1,n}(x) = A_{n-1,m}(x). The check is
//! fully symbolic: the difference of the two polynomials must vanish
//! identically.

use std::time::Instant;

use num_traits::One;

use crate::bernoulli::bernoulli_poly;
use crate::exact::{binom_int, int, Rat};
use crate::identities::IdentityError;
use crate::poly::UniPoly;
use crate::report::{params, IdentityId, IdentityReport, Mode};

/// A_{m,n}(x). Requires n >= 1 (the family carries a 1/n factor); B_{n-k}(2x)
/// is obtained by substituting 2x into B_{n-k}.
pub fn woodcock_a(m: u32, n: u32) -> Result<UniPoly, IdentityError> {
    if n == 0 {
        return Err(IdentityError::Precondition(
            "A_{m,n} is undefined at n = 0 (1/n factor)".into(),
        ));
    }
    let two_x = UniPoly::monomial(int(2), 1);
    let mut sum = UniPoly::zero();
    for k in 0..=n {
        let mut weight = Rat::from_integer(binom_int(n, i64::from(k)));
        if k % 2 == 1 {
            weight = -weight;
        }
        let term = &bernoulli_poly(m + k) * &bernoulli_poly(n - k).compose(&two_x);
        sum = &sum + &term.scale(&weight);
    }
    let correction = (&bernoulli_poly(m) * &bernoulli_poly(n)).scale(&int(-1));
    let inv_n = Rat::one() / int(i64::from(n));
    Ok((&sum + &correction).scale(&inv_n))
}

/// Checks A_{m-1,n}(x) = A_{n-1,m}(x) for m >= 1, n >= 2.
///
/// n = 1 is flagged out of domain rather than guessing a limiting
/// convention for the 1/n factor in the n-index-0 member of the family.
pub fn verify_woodcock(m: u32, n: u32) -> Result<IdentityReport, IdentityError> {
    if m < 1 || n < 2 {
        return Err(IdentityError::Precondition(format!(
            "woodcock requires m >= 1 and n >= 2 (m = {m}, n = {n})"
        )));
    }
    let start = Instant::now();
    let lhs = woodcock_a(m - 1, n)?;
    let rhs = woodcock_a(n - 1, m)?;
    let diff = &lhs - &rhs;
    Ok(IdentityReport {
        identity_id: IdentityId::Woodcock,
        mode: Mode::Symbolic,
        parameters: params([("m", m), ("n", n)]),
        lhs: lhs.render("x"),
        rhs: rhs.render("x"),
        difference: diff.render("x"),
        pass: diff.is_zero(),
        elapsed: start.elapsed(),
    })
}
