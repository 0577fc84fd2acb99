//! The Carlitz-type product lemma:
//!
//!   sum_i n_i B_{n_i - 1}(x_i) prod_{j != i} B_{n_j}(x_j)
//!     = sum_i n_i sum_{k_1+...+k_m = n_1+...+n_m} B_{k_i - 1}(x_i)
//!         prod_{j != i} binom(n_j, k_j) B_{k_j}(x_j - x_i + 1_{j>i}).
//!
//! The inner sum formally ranges over all compositions, but binom(n_j, k_j)
//! kills every tuple with k_j > n_j for some j != i. Enumerating only the
//! surviving tuples (k_j <= n_j for j != i, k_i determined by the total)
//! forces k_i >= n_i >= 1, so B_{k_i - 1} is always well-formed; a
//! NegativeBernoulliIndex error is kept as a bug sentinel for that argument.

use std::time::Instant;

use crate::bernoulli::bernoulli_eval_in;
use crate::exact::{binom_int, Rat};
use crate::identities::{finish_exact, finish_symbolic, render_rats, IdentityError};
use crate::report::{params, IdentityId, IdentityReport};
use crate::ring::{PolyRing, RatRing, Ring};

/// Both sides of the lemma, over any coefficient ring.
pub fn lemma1_sides<R: Ring>(
    ring: &R,
    n_list: &[u32],
    x: &[R::Elem],
) -> Result<(R::Elem, R::Elem), IdentityError> {
    let m = n_list.len();
    if m == 0 || x.len() != m {
        return Err(IdentityError::Precondition(format!(
            "need m >= 1 indices and as many arguments (got {} and {})",
            m,
            x.len()
        )));
    }
    if n_list.contains(&0) {
        return Err(IdentityError::Precondition(
            "all n_i must be >= 1".into(),
        ));
    }
    let total: u32 = n_list.iter().sum();

    let mut lhs = ring.zero();
    for i in 0..m {
        let mut term = bernoulli_eval_in(ring, n_list[i] - 1, &x[i]);
        term = ring.scale(&term, &Rat::from_integer(n_list[i].into()));
        for j in 0..m {
            if j != i {
                term = ring.mul(&term, &bernoulli_eval_in(ring, n_list[j], &x[j]));
            }
        }
        lhs = ring.add(&lhs, &term);
    }

    let mut rhs = ring.zero();
    for i in 0..m {
        let others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
        // odometer over k_j in 0..=n_j for j != i; k_i is forced
        let mut counters = vec![0u32; others.len()];
        let mut inner = ring.zero();
        loop {
            let spent: u32 = counters.iter().sum();
            let k_i = total - spent; // >= n_i >= 1 since k_j <= n_j elsewhere
            if k_i == 0 {
                return Err(IdentityError::NegativeBernoulliIndex(format!(
                    "k_{i} = 0 in surviving term of lemma1 (n_list = {n_list:?})"
                )));
            }
            let mut term = bernoulli_eval_in(ring, k_i - 1, &x[i]);
            for (slot, &j) in others.iter().enumerate() {
                let k_j = counters[slot];
                let weight = Rat::from_integer(binom_int(n_list[j], i64::from(k_j)));
                let indicator = i64::from(j > i);
                let arg = ring.add(
                    &ring.sub(&x[j], &x[i]),
                    &ring.from_i64(indicator),
                );
                term = ring.mul(&term, &bernoulli_eval_in(ring, k_j, &arg));
                term = ring.scale(&term, &weight);
            }
            inner = ring.add(&inner, &term);

            // advance the odometer
            let mut pos = 0;
            loop {
                if pos == counters.len() {
                    break;
                }
                if counters[pos] < n_list[others[pos]] {
                    counters[pos] += 1;
                    break;
                }
                counters[pos] = 0;
                pos += 1;
            }
            if pos == counters.len() {
                break;
            }
        }
        rhs = ring.add(&rhs, &ring.scale(&inner, &Rat::from_integer(n_list[i].into())));
    }

    Ok((lhs, rhs))
}

/// Exact-numeric verification at rational arguments.
pub fn verify_lemma1_numeric(
    n_list: &[u32],
    x: &[Rat],
) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let (lhs, rhs) = lemma1_sides(&RatRing, n_list, x)?;
    let parameters = params([
        (
            "n_list",
            n_list
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("x", render_rats(x)),
    ]);
    Ok(finish_exact(IdentityId::Lemma1, parameters, &lhs, &rhs, start))
}

/// Symbolic verification with x_1..x_m indeterminate.
pub fn verify_lemma1_symbolic(n_list: &[u32]) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let m = n_list.len();
    let ring = PolyRing::new((1..=m).map(|i| format!("x{i}")));
    let x: Vec<_> = (0..m).map(|i| ring.var(i)).collect();
    let (lhs, rhs) = lemma1_sides(&ring, n_list, &x)?;
    let parameters = params([
        (
            "n_list",
            n_list
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("x", "symbolic".to_string()),
    ]);
    Ok(finish_symbolic(IdentityId::Lemma1, parameters, &ring, &lhs, &rhs, start))
}
