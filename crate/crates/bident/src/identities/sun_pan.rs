//! The Sun-Pan symmetric bracket identity:
//!
//!   r [s t; x y]_n + s [t r; y z]_n + t [r s; z x]_n = 0
//!
//! provided r + s + t = n and x + y + z = 1, where
//!
//!   [s t; x y]_n = sum_{k=0}^{n} (-1)^k binom(s,k) binom(t,n-k)
//!                  B_{n-k}(x) B_k(y).
//!
//! t and z are eliminated through the constraints before evaluation, so the
//! symbolic check runs in the four indeterminates r, s, x, y.

use std::time::Instant;

use num_traits::Zero;

use crate::bernoulli::bernoulli_eval_in;
use crate::exact::Rat;
use crate::identities::{finish_exact, finish_symbolic};
use crate::report::{params, IdentityId, IdentityReport};
use crate::ring::{binom_elem, PolyRing, RatRing, Ring};

/// The bracket sum [s t; x y]_n over any coefficient ring.
pub fn bracket_sum<R: Ring>(
    ring: &R,
    s: &R::Elem,
    t: &R::Elem,
    x: &R::Elem,
    y: &R::Elem,
    n: u32,
) -> R::Elem {
    let mut acc = ring.zero();
    for k in 0..=n {
        let mut term = ring.mul(
            &binom_elem(ring, s, i64::from(k)),
            &binom_elem(ring, t, i64::from(n - k)),
        );
        if ring.is_zero(&term) {
            continue;
        }
        term = ring.mul(&term, &bernoulli_eval_in(ring, n - k, x));
        term = ring.mul(&term, &bernoulli_eval_in(ring, k, y));
        if k % 2 == 1 {
            term = ring.neg(&term);
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

/// The full left side r[s t; x y] + s[t r; y z] + t[r s; z x], with
/// t = n - r - s and z = 1 - x - y substituted internally.
pub fn sun_pan_combination<R: Ring>(
    ring: &R,
    n: u32,
    r: &R::Elem,
    s: &R::Elem,
    x: &R::Elem,
    y: &R::Elem,
) -> R::Elem {
    let t = ring.sub(&ring.from_i64(i64::from(n)), &ring.add(r, s));
    let z = ring.sub(&ring.one(), &ring.add(x, y));
    let b1 = bracket_sum(ring, s, &t, x, y, n);
    let b2 = bracket_sum(ring, &t, r, y, &z, n);
    let b3 = bracket_sum(ring, r, s, &z, x, n);
    ring.sum([ring.mul(r, &b1), ring.mul(s, &b2), ring.mul(&t, &b3)])
}

/// Exact-numeric verification at rational parameters.
pub fn verify_sun_pan_numeric(n: u32, r: &Rat, s: &Rat, x: &Rat, y: &Rat) -> IdentityReport {
    let start = Instant::now();
    let value = sun_pan_combination(&RatRing, n, r, s, x, y);
    let parameters = params([
        ("n", n.to_string()),
        ("r", r.to_string()),
        ("s", s.to_string()),
        ("x", x.to_string()),
        ("y", y.to_string()),
    ]);
    finish_exact(IdentityId::SunPan, parameters, &value, &Rat::zero(), start)
}

/// Fully symbolic verification in indeterminates r, s, x, y.
pub fn verify_sun_pan_symbolic(n: u32) -> IdentityReport {
    let start = Instant::now();
    let ring = PolyRing::new(["r", "s", "x", "y"]);
    let value = sun_pan_combination(
        &ring,
        n,
        &ring.var(0),
        &ring.var(1),
        &ring.var(2),
        &ring.var(3),
    );
    let parameters = params([
        ("n", n.to_string()),
        ("r", "symbolic".to_string()),
        ("s", "symbolic".to_string()),
        ("x", "symbolic".to_string()),
        ("y", "symbolic".to_string()),
    ]);
    finish_symbolic(IdentityId::SunPan, parameters, &ring, &value, &ring.zero(), start)
}
