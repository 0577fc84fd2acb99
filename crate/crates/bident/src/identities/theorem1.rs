//! The multi-factor symmetric identity (the main theorem):
//!
//!   r_{m+1} sum_{k_1+...+k_m = n} prod_j binom(r_j, k_j) B_{k_j}(x_j)
//!     = - sum_i r_i sum_{k_1+...+k_m = n} binom(r_{m+1}, k_i) B_{k_i}(1-x_i)
//!         prod_{j != i} binom(r_j, k_j) B_{k_j}(x_j - x_i + 1_{j>i})
//!
//! with r_{m+1} = n - r_1 - ... - r_m. Compositions are enumerated
//! exhaustively in colex order; zero binomial factors short-circuit the term.

use std::time::Instant;

use crate::bernoulli::bernoulli_eval_in;
use crate::exact::Rat;
use crate::identities::{finish_exact, finish_symbolic, render_rats, IdentityError};
use crate::report::{params, IdentityId, IdentityReport};
use crate::ring::{binom_elem, PolyRing, RatRing, Ring};
use crate::series::compositions;

/// Parameters of one instance: the weights r_1..r_m and arguments x_1..x_m
/// (rationals or indeterminates). The derived values r_{m+1} and the shifted
/// arguments x_j - x_i + 1_{j>i} are recomputed on demand, never stored.
#[derive(Clone, Debug)]
pub struct Theorem1Params<R: Ring> {
    pub n: u32,
    pub r: Vec<R::Elem>,
    pub x: Vec<R::Elem>,
}

impl<R: Ring> Theorem1Params<R> {
    pub fn new(n: u32, r: Vec<R::Elem>, x: Vec<R::Elem>) -> Result<Self, IdentityError> {
        if r.is_empty() || r.len() != x.len() {
            return Err(IdentityError::Precondition(format!(
                "need m >= 1 weights and as many arguments (got {} and {})",
                r.len(),
                x.len()
            )));
        }
        if n == 0 {
            return Err(IdentityError::Precondition("n must be positive".into()));
        }
        Ok(Self { n, r, x })
    }

    pub fn m(&self) -> usize {
        self.r.len()
    }

    /// r_{m+1} = n - r_1 - ... - r_m.
    pub fn r_last(&self, ring: &R) -> R::Elem {
        let sum = ring.sum(self.r.iter().cloned());
        ring.sub(&ring.from_i64(i64::from(self.n)), &sum)
    }

    /// 1_{j>i}: 1 exactly when j > i.
    pub fn indicator(j: usize, i: usize) -> u32 {
        u32::from(j > i)
    }

    /// The shifted argument x_j - x_i + 1_{j>i}.
    pub fn shift(&self, ring: &R, i: usize, j: usize) -> R::Elem {
        let d = ring.sub(&self.x[j], &self.x[i]);
        ring.add(&d, &ring.from_i64(i64::from(Self::indicator(j, i))))
    }
}

/// Both sides of the identity, in evaluation order (left, right).
pub fn theorem1_sides<R: Ring>(
    ring: &R,
    p: &Theorem1Params<R>,
) -> (R::Elem, R::Elem) {
    (theorem1_left(ring, p), theorem1_right(ring, p, false))
}

/// The right side with every B_{k_i}(1 - x_i) replaced by
/// (-1)^{k_i} B_{k_i}(x_i) — equal by the reflection formula; used as an
/// internal cross-check route.
pub fn theorem1_rhs_reflected<R: Ring>(ring: &R, p: &Theorem1Params<R>) -> R::Elem {
    theorem1_right(ring, p, true)
}

fn theorem1_left<R: Ring>(ring: &R, p: &Theorem1Params<R>) -> R::Elem {
    let m = p.m();
    let mut sum = ring.zero();
    'comp: for k in compositions(p.n, m) {
        let mut term = ring.one();
        for (j, &kj) in k.iter().enumerate() {
            let b = binom_elem(ring, &p.r[j], i64::from(kj));
            if ring.is_zero(&b) {
                continue 'comp;
            }
            term = ring.mul(&term, &b);
            term = ring.mul(&term, &bernoulli_eval_in(ring, kj, &p.x[j]));
        }
        sum = ring.add(&sum, &term);
    }
    ring.mul(&p.r_last(ring), &sum)
}

fn theorem1_right<R: Ring>(ring: &R, p: &Theorem1Params<R>, reflected: bool) -> R::Elem {
    let m = p.m();
    let r_last = p.r_last(ring);
    let mut total = ring.zero();
    for i in 0..m {
        let mut inner = ring.zero();
        'comp: for k in compositions(p.n, m) {
            let mut term = binom_elem(ring, &r_last, i64::from(k[i]));
            if ring.is_zero(&term) {
                continue;
            }
            let b_i = if reflected {
                let v = bernoulli_eval_in(ring, k[i], &p.x[i]);
                if k[i] % 2 == 1 {
                    ring.neg(&v)
                } else {
                    v
                }
            } else {
                let arg = ring.sub(&ring.one(), &p.x[i]);
                bernoulli_eval_in(ring, k[i], &arg)
            };
            term = ring.mul(&term, &b_i);
            for (j, &kj) in k.iter().enumerate() {
                if j == i {
                    continue;
                }
                let b = binom_elem(ring, &p.r[j], i64::from(kj));
                if ring.is_zero(&b) {
                    continue 'comp;
                }
                term = ring.mul(&term, &b);
                let arg = p.shift(ring, i, j);
                term = ring.mul(&term, &bernoulli_eval_in(ring, kj, &arg));
            }
            inner = ring.add(&inner, &term);
        }
        total = ring.add(&total, &ring.mul(&p.r[i], &inner));
    }
    ring.neg(&total)
}

/// Exact-numeric verification at rational weights and arguments.
pub fn verify_theorem1_numeric(
    n: u32,
    r: &[Rat],
    x: &[Rat],
) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let p = Theorem1Params::<RatRing>::new(n, r.to_vec(), x.to_vec())?;
    let (lhs, rhs) = theorem1_sides(&RatRing, &p);
    let parameters = params([
        ("m", p.m().to_string()),
        ("n", n.to_string()),
        ("r", render_rats(r)),
        ("x", render_rats(x)),
    ]);
    Ok(finish_exact(IdentityId::Theorem1, parameters, &lhs, &rhs, start))
}

/// Fully symbolic verification: r_1..r_m and x_1..x_m are indeterminates of
/// a 2m-variable polynomial ring.
pub fn verify_theorem1_symbolic(m: usize, n: u32) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let names: Vec<String> = (1..=m)
        .map(|i| format!("r{i}"))
        .chain((1..=m).map(|i| format!("x{i}")))
        .collect();
    let ring = PolyRing::new(names);
    let r: Vec<_> = (0..m).map(|i| ring.var(i)).collect();
    let x: Vec<_> = (0..m).map(|i| ring.var(m + i)).collect();
    let p = Theorem1Params::<PolyRing>::new(n, r, x)?;
    let (lhs, rhs) = theorem1_sides(&ring, &p);
    let parameters = params([
        ("m", m.to_string()),
        ("n", n.to_string()),
        ("r", "symbolic".to_string()),
        ("x", "symbolic".to_string()),
    ]);
    Ok(finish_symbolic(IdentityId::Theorem1, parameters, &ring, &lhs, &rhs, start))
}
