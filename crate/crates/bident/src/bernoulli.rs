//! Bernoulli numbers and polynomials with memoization.
//!
//! Numbers come from the defining recurrence sum_{k=0..n} binom(n+1,k) B_k = 0
//! with B_0 = 1 (so B_1 = -1/2), *not* from the generating function: the
//! series engine re-derives the same coefficients by power-series division and
//! serves as an independent oracle for the acceptance cross-check.

use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::exact::{binom_int, Rat};
use crate::poly::UniPoly;
use crate::ring::Ring;

/// Growable table of B_0..B_max and the corresponding polynomials. Mutation
/// is internally synchronized; concurrent first-time requests for the same
/// index observe a single consistent value.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    numbers: Mutex<Vec<Rat>>,
    polys: Mutex<Vec<UniPoly>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// B_n. Requesting B_n fills all indices <= n.
    pub fn number(&self, n: u32) -> Rat {
        let n = n as usize;
        let mut table = self.numbers.lock().unwrap();
        if table.is_empty() {
            table.push(Rat::one());
        }
        while table.len() <= n {
            let m = table.len(); // computing B_m
            // B_m = -1/(m+1) * sum_{k=0..m-1} binom(m+1, k) B_k
            let mut acc = Rat::zero();
            for (k, b) in table.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += Rat::from_integer(binom_int(m as u32 + 1, k as i64)) * b;
            }
            let value = -acc / Rat::from_integer((m as u32 + 1).into());
            table.push(value);
        }
        table[n].clone()
    }

    /// B_n(x) = sum_{k=0..n} binom(n,k) B_k x^{n-k}, degree n, monic.
    pub fn poly(&self, n: u32) -> UniPoly {
        let n = n as usize;
        {
            let table = self.polys.lock().unwrap();
            if let Some(p) = table.get(n) {
                return p.clone();
            }
        }
        // Compute numbers outside the poly lock; the two locks are never held
        // at the same time.
        self.number(n as u32);
        let numbers = self.numbers.lock().unwrap().clone();
        let mut table = self.polys.lock().unwrap();
        while table.len() <= n {
            let m = table.len();
            let mut coeffs = vec![Rat::zero(); m + 1];
            for (k, item) in coeffs.iter_mut().enumerate() {
                // coefficient of x^{m-k} is binom(m,k) B_k; index m-k
                *item = Rat::from_integer(binom_int(m as u32, (m - k) as i64))
                    * &numbers[m - k];
            }
            table.push(UniPoly::from_coeffs(coeffs));
        }
        table[n].clone()
    }

    /// How many numbers are currently cached (test/diagnostic hook).
    pub fn cached_len(&self) -> usize {
        self.numbers.lock().unwrap().len()
    }
}

fn global() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// The n-th Bernoulli number B_n = B_n(0), via the shared cache.
pub fn bernoulli_number(n: u32) -> Rat {
    global().number(n)
}

/// The n-th Bernoulli polynomial B_n(x), via the shared cache.
pub fn bernoulli_poly(n: u32) -> UniPoly {
    global().poly(n)
}

/// B_n evaluated at a rational point (Horner).
pub fn bernoulli_eval(n: u32, x: &Rat) -> Rat {
    bernoulli_poly(n).eval(x)
}

/// B_n evaluated at an element of an arbitrary Q-algebra; used for symbolic
/// arguments such as x - y, 2x or 1 - x.
pub fn bernoulli_eval_in<R: Ring>(ring: &R, n: u32, x: &R::Elem) -> R::Elem {
    bernoulli_poly(n).eval_in(ring, x)
}
