//! The two Pan-Sun polynomial generalizations (Miki-type and
//! Matiyasevich-type two-variable identities).
//!
//! Symbolic mode clears denominators — the Miki-type identity is multiplied
//! through by n(x-y), the Matiyasevich-type one by (n+2)(x-y)^3 — and checks
//! that the difference is the zero polynomial, which also certifies the
//! divisibility claims implicit in the right sides. Exact-numeric mode
//! evaluates the original equations at supplied rationals x != y.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_eval, bernoulli_eval_in};
use crate::exact::{binom_int, harmonic, int, Rat};
use crate::identities::{finish_exact, finish_symbolic, IdentityError};
use crate::report::{params, IdentityId, IdentityReport};
use crate::ring::{PolyRing, Ring};

/// Which of the two polynomial identities to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PanSunKind {
    /// Two-variable Miki generalization.
    MikiType,
    /// Two-variable Matiyasevich generalization.
    MatiyasevichType,
}

impl PanSunKind {
    pub fn identity_id(&self) -> IdentityId {
        match self {
            PanSunKind::MikiType => IdentityId::PanSun3,
            PanSunKind::MatiyasevichType => IdentityId::PanSun4,
        }
    }

    fn min_n(&self) -> u32 {
        match self {
            PanSunKind::MikiType => 2,
            PanSunKind::MatiyasevichType => 1,
        }
    }
}

fn check_n(kind: PanSunKind, n: u32) -> Result<(), IdentityError> {
    if n < kind.min_n() {
        return Err(IdentityError::Precondition(format!(
            "{} requires n >= {} (n = {n})",
            kind.identity_id(),
            kind.min_n()
        )));
    }
    Ok(())
}

/// Symbolic verification over Q[x, y] with denominators cleared.
pub fn verify_pan_sun_poly(kind: PanSunKind, n: u32) -> Result<IdentityReport, IdentityError> {
    check_n(kind, n)?;
    let start = Instant::now();
    let ring = PolyRing::new(["x", "y"]);
    let x = ring.var(0);
    let y = ring.var(1);
    let x_minus_y = &x - &y;
    let y_minus_x = &y - &x;

    let (lhs, rhs) = match kind {
        PanSunKind::MikiType => {
            // n(x-y) * [ sum_{k=1}^{n-1} B_k(x)B_{n-k}(y)/(k(n-k))
            //            - sum_{k=1}^{n} binom(n-1,k-1)
            //              (B_k(x-y)B_{n-k}(y) + B_k(y-x)B_{n-k}(x)) / k^2 ]
            //   = H_{n-1}(x-y)(B_n(x)+B_n(y)) + B_n(x) - B_n(y)
            let mut sum = ring.zero();
            for k in 1..n {
                let t = ring.mul(
                    &bernoulli_eval_in(&ring, k, &x),
                    &bernoulli_eval_in(&ring, n - k, &y),
                );
                sum = ring.add(
                    &sum,
                    &t.scale(&(Rat::one() / int(i64::from(k) * i64::from(n - k)))),
                );
            }
            for k in 1..=n {
                let weight = Rat::from_integer(binom_int(n - 1, i64::from(k) - 1))
                    / int(i64::from(k) * i64::from(k));
                if weight.is_zero() {
                    continue;
                }
                let t1 = ring.mul(
                    &bernoulli_eval_in(&ring, k, &x_minus_y),
                    &bernoulli_eval_in(&ring, n - k, &y),
                );
                let t2 = ring.mul(
                    &bernoulli_eval_in(&ring, k, &y_minus_x),
                    &bernoulli_eval_in(&ring, n - k, &x),
                );
                sum = ring.sub(&sum, &ring.add(&t1, &t2).scale(&weight));
            }
            let lhs = ring.mul(&sum, &x_minus_y).scale(&int(i64::from(n)));

            let bn_x = bernoulli_eval_in(&ring, n, &x);
            let bn_y = bernoulli_eval_in(&ring, n, &y);
            let rhs = ring.add(
                &ring.mul(&x_minus_y, &ring.add(&bn_x, &bn_y)).scale(&harmonic(n - 1)),
                &ring.sub(&bn_x, &bn_y),
            );
            (lhs, rhs)
        }
        PanSunKind::MatiyasevichType => {
            // (n+2)(x-y)^3 * [ sum_{k=0}^{n} B_k(x)B_{n-k}(y)
            //                  - sum_{k=0}^{n} binom(n+1,k+1)
            //                    (B_k(x-y)B_{n-k}(y) + B_k(y-x)B_{n-k}(x))/(k+2) ]
            //   = (n+2)(x-y)(B_{n+1}(x)+B_{n+1}(y)) - 2(B_{n+2}(x)-B_{n+2}(y))
            let mut sum = ring.zero();
            for k in 0..=n {
                let t = ring.mul(
                    &bernoulli_eval_in(&ring, k, &x),
                    &bernoulli_eval_in(&ring, n - k, &y),
                );
                sum = ring.add(&sum, &t);
            }
            for k in 0..=n {
                let weight = Rat::from_integer(binom_int(n + 1, i64::from(k) + 1))
                    / int(i64::from(k) + 2);
                let t1 = ring.mul(
                    &bernoulli_eval_in(&ring, k, &x_minus_y),
                    &bernoulli_eval_in(&ring, n - k, &y),
                );
                let t2 = ring.mul(
                    &bernoulli_eval_in(&ring, k, &y_minus_x),
                    &bernoulli_eval_in(&ring, n - k, &x),
                );
                sum = ring.sub(&sum, &ring.add(&t1, &t2).scale(&weight));
            }
            let cube = x_minus_y.pow(3);
            let lhs = ring.mul(&sum, &cube).scale(&int(i64::from(n) + 2));

            let b1 = ring.add(
                &bernoulli_eval_in(&ring, n + 1, &x),
                &bernoulli_eval_in(&ring, n + 1, &y),
            );
            let b2 = ring.sub(
                &bernoulli_eval_in(&ring, n + 2, &x),
                &bernoulli_eval_in(&ring, n + 2, &y),
            );
            let rhs = ring.sub(
                &ring.mul(&x_minus_y, &b1).scale(&int(i64::from(n) + 2)),
                &b2.scale(&int(2)),
            );
            (lhs, rhs)
        }
    };

    let parameters = params([("n", n.to_string()), ("cleared", "true".to_string())]);
    Ok(finish_symbolic(kind.identity_id(), parameters, &ring, &lhs, &rhs, start))
}

/// Exact-numeric verification of the original (uncleared) equation at
/// rational x != y.
pub fn verify_pan_sun_poly_numeric(
    kind: PanSunKind,
    n: u32,
    x: &Rat,
    y: &Rat,
) -> Result<IdentityReport, IdentityError> {
    check_n(kind, n)?;
    if x == y {
        return Err(IdentityError::DegenerateEvaluation(format!(
            "{} right side divides by x - y; got x = y = {x}",
            kind.identity_id()
        )));
    }
    let start = Instant::now();
    let x_minus_y = x - y;
    let y_minus_x = y - x;

    let (lhs, rhs) = match kind {
        PanSunKind::MikiType => {
            let mut lhs = Rat::zero();
            for k in 1..n {
                lhs += bernoulli_eval(k, x) * bernoulli_eval(n - k, y)
                    / int(i64::from(k) * i64::from(n - k));
            }
            for k in 1..=n {
                let weight = Rat::from_integer(binom_int(n - 1, i64::from(k) - 1))
                    / int(i64::from(k) * i64::from(k));
                lhs -= weight
                    * (bernoulli_eval(k, &x_minus_y) * bernoulli_eval(n - k, y)
                        + bernoulli_eval(k, &y_minus_x) * bernoulli_eval(n - k, x));
            }
            let rhs = harmonic(n - 1) * (bernoulli_eval(n, x) + bernoulli_eval(n, y))
                / int(i64::from(n))
                + (bernoulli_eval(n, x) - bernoulli_eval(n, y))
                    / (int(i64::from(n)) * &x_minus_y);
            (lhs, rhs)
        }
        PanSunKind::MatiyasevichType => {
            let mut lhs = Rat::zero();
            for k in 0..=n {
                lhs += bernoulli_eval(k, x) * bernoulli_eval(n - k, y);
            }
            for k in 0..=n {
                let weight = Rat::from_integer(binom_int(n + 1, i64::from(k) + 1))
                    / int(i64::from(k) + 2);
                lhs -= weight
                    * (bernoulli_eval(k, &x_minus_y) * bernoulli_eval(n - k, y)
                        + bernoulli_eval(k, &y_minus_x) * bernoulli_eval(n - k, x));
            }
            let sq = &x_minus_y * &x_minus_y;
            let cube = &sq * &x_minus_y;
            let rhs = (bernoulli_eval(n + 1, x) + bernoulli_eval(n + 1, y)) / sq
                - int(2) / int(i64::from(n) + 2)
                    * (bernoulli_eval(n + 2, x) - bernoulli_eval(n + 2, y))
                    / cube;
            (lhs, rhs)
        }
    };

    let parameters = params([
        ("n", n.to_string()),
        ("x", x.to_string()),
        ("y", y.to_string()),
    ]);
    Ok(finish_exact(kind.identity_id(), parameters, &lhs, &rhs, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn miki_type_symbolic_small() {
        for n in 2..=8 {
            let r = verify_pan_sun_poly(PanSunKind::MikiType, n).unwrap();
            assert!(r.pass, "n = {n}: difference {}", r.difference);
            assert_eq!(r.difference, "0");
        }
    }

    #[test]
    fn matiyasevich_type_symbolic_small() {
        for n in 1..=8 {
            let r = verify_pan_sun_poly(PanSunKind::MatiyasevichType, n).unwrap();
            assert!(r.pass, "n = {n}: difference {}", r.difference);
        }
    }

    #[test]
    fn degenerate_evaluation_rejected() {
        let err = verify_pan_sun_poly_numeric(PanSunKind::MikiType, 6, &rat(1, 2), &rat(1, 2));
        assert!(matches!(err, Err(IdentityError::DegenerateEvaluation(_))));
    }

    #[test]
    fn numeric_spot_checks() {
        for n in 2..=9 {
            let r =
                verify_pan_sun_poly_numeric(PanSunKind::MikiType, n, &rat(1, 3), &rat(-2, 5))
                    .unwrap();
            assert!(r.pass, "miki-type numeric fails at n = {n}");
        }
        for n in 1..=9 {
            let r = verify_pan_sun_poly_numeric(
                PanSunKind::MatiyasevichType,
                n,
                &rat(7, 4),
                &rat(1, 6),
            )
            .unwrap();
            assert!(r.pass, "matiyasevich-type numeric fails at n = {n}");
        }
    }

    #[test]
    fn precondition_enforced() {
        assert!(verify_pan_sun_poly(PanSunKind::MikiType, 1).is_err());
        assert!(verify_pan_sun_poly(PanSunKind::MatiyasevichType, 0).is_err());
    }
}
