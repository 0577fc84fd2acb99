//! The two classical Bernoulli-number identities: Miki's identity and the
//! Matiyasevich identity. Both are checked in exact rational arithmetic.

use std::time::Instant;

use num_traits::Zero;

use crate::bernoulli::bernoulli_number;
use crate::exact::{binom_int, harmonic, int, rat, Rat};
use crate::identities::{finish_exact, IdentityError};
use crate::report::{params, IdentityId, IdentityReport};

/// Miki's identity:
///
///   sum_{k=2}^{n-2} B_k B_{n-k}/(k(n-k))
///     = sum_{k=2}^{n-2} binom(n,k) B_k B_{n-k}/(k(n-k)) + 2 H_n B_n / n.
///
/// Stated for n >= 4; n = 3 is accepted as the empty/trivial case (both
/// sides vanish with B_3).
pub fn verify_miki(n: u32) -> Result<IdentityReport, IdentityError> {
    if n < 3 {
        return Err(IdentityError::Precondition(format!(
            "miki requires n >= 4 (n = {n})"
        )));
    }
    let start = Instant::now();
    let mut plain = Rat::zero();
    let mut weighted = Rat::zero();
    for k in 2..=n.saturating_sub(2) {
        let product = bernoulli_number(k) * bernoulli_number(n - k);
        if product.is_zero() {
            continue;
        }
        let denom = rat(i64::from(k) * i64::from(n - k), 1);
        plain += &product / &denom;
        weighted += Rat::from_integer(binom_int(n, i64::from(k))) * product / denom;
    }
    let rhs = weighted + int(2) * harmonic(n) * bernoulli_number(n) / int(i64::from(n));
    Ok(finish_exact(
        IdentityId::Miki,
        params([("n", n)]),
        &plain,
        &rhs,
        start,
    ))
}

/// The Matiyasevich identity:
///
///   (n+2) sum_{k=2}^{n-2} B_k B_{n-k}
///     = 2 sum_{k=2}^{n-2} binom(n+2,k) B_k B_{n-k} + n(n+1) B_n.
pub fn verify_matiyasevich(n: u32) -> Result<IdentityReport, IdentityError> {
    if n < 3 {
        return Err(IdentityError::Precondition(format!(
            "matiyasevich requires n >= 4 (n = {n})"
        )));
    }
    let start = Instant::now();
    let mut plain = Rat::zero();
    let mut weighted = Rat::zero();
    for k in 2..=n.saturating_sub(2) {
        let product = bernoulli_number(k) * bernoulli_number(n - k);
        if product.is_zero() {
            continue;
        }
        plain += &product;
        weighted += Rat::from_integer(binom_int(n + 2, i64::from(k))) * product;
    }
    let lhs = int(i64::from(n) + 2) * plain;
    let rhs = int(2) * weighted
        + int(i64::from(n)) * int(i64::from(n) + 1) * bernoulli_number(n);
    Ok(finish_exact(
        IdentityId::Matiyasevich,
        params([("n", n)]),
        &lhs,
        &rhs,
        start,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miki_trivial_case() {
        let r = verify_miki(3).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "0");
        assert_eq!(r.rhs, "0");
    }

    #[test]
    fn miki_spot_value() {
        let r = verify_miki(4).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "1/144");
        assert_eq!(r.rhs, "1/144");
        assert_eq!(r.difference, "0");
    }

    #[test]
    fn miki_sweep() {
        for n in 4..=40 {
            assert!(verify_miki(n).unwrap().pass, "miki fails at n = {n}");
        }
    }

    #[test]
    fn miki_precondition() {
        assert!(matches!(
            verify_miki(2),
            Err(IdentityError::Precondition(_))
        ));
    }

    #[test]
    fn matiyasevich_spot_value() {
        let r = verify_matiyasevich(4).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "1/6");
        assert_eq!(r.rhs, "1/6");
    }

    #[test]
    fn matiyasevich_odd_vanishing() {
        let r = verify_matiyasevich(5).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "0");
        assert_eq!(r.rhs, "0");
    }

    #[test]
    fn matiyasevich_sweep() {
        for n in 4..=40 {
            assert!(
                verify_matiyasevich(n).unwrap().pass,
                "matiyasevich fails at n = {n}"
            );
        }
    }
}
