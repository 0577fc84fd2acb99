//! Truncated exponential-generating-function engine.
//!
//! Multivariate power series truncated by *total* degree, generic over an
//! exact coefficient ring (rationals, or polynomials in symbolic arguments).
//! This engine re-derives Bernoulli coefficients by power-series division of
//! t*e^{xt} by (e^t - 1) — written as e^{xt} / ((e^t - 1)/t) so the divisor
//! has unit constant term — fully independent of the recurrence used by the
//! Bernoulli cache, and verifies the generating-function identity behind the
//! Carlitz generalization.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;

use crate::bernoulli;
use crate::exact::{factorial, Rat};
use crate::poly::Expos;
use crate::report::{params, IdentityId, IdentityReport, Mode};
use crate::ring::{PolyRing, RatRing, Ring};

/// Multivariate power series in t_1..t_m, truncated beyond total degree
/// `max_degree`. Arithmetic never consults coefficients beyond the bound.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    num_vars: usize,
    max_degree: u32,
    terms: BTreeMap<Expos, R::Elem>,
}

impl<R: Ring> PartialEq for TruncatedSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars
            && self.max_degree == other.max_degree
            && self.terms == other.terms
    }
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(ring: R, num_vars: usize, max_degree: u32) -> Self {
        Self {
            ring,
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: R, num_vars: usize, max_degree: u32) -> Self {
        let one = ring.one();
        let mut s = Self::zero(ring, num_vars, max_degree);
        s.insert_add(Expos(vec![0; num_vars]), one);
        s
    }

    /// The series consisting of the single variable t_var.
    pub fn var(ring: R, num_vars: usize, max_degree: u32, var: usize) -> Self {
        assert!(var < num_vars, "variable index out of range");
        let one = ring.one();
        let mut s = Self::zero(ring, num_vars, max_degree);
        let mut e = vec![0u32; num_vars];
        e[var] = 1;
        s.insert_add(Expos(e), one);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of t^expos (zero if absent). Panics beyond the truncation
    /// bound: such coefficients were never computed.
    pub fn coeff(&self, expos: &[u32]) -> R::Elem {
        let e = Expos(expos.to_vec());
        assert!(
            e.total_degree() <= self.max_degree,
            "coefficient beyond truncation bound"
        );
        self.terms.get(&e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expos, &R::Elem)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, e: Expos, c: R::Elem) {
        if e.total_degree() > self.max_degree || self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<(), SeriesError> {
        if self.num_vars != other.num_vars || self.max_degree != other.max_degree {
            return Err(SeriesError::ShapeMismatch {
                left: (self.num_vars, self.max_degree),
                right: (other.num_vars, other.max_degree),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.num_vars, self.max_degree);
        for (e, a) in &self.terms {
            out.insert_add(e.clone(), self.ring.mul(a, c));
        }
        out
    }

    /// Restriction to a lower truncation bound.
    pub fn truncated(&self, max_degree: u32) -> Self {
        assert!(max_degree <= self.max_degree);
        let mut out = Self::zero(self.ring.clone(), self.num_vars, max_degree);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    /// Product truncated to total degree `max_degree`. Term keys are ordered
    /// by total degree, so the inner loop stops as soon as the bound is hit.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.ring.clone(), self.num_vars, self.max_degree);
        for (ea, ca) in &self.terms {
            let da = ea.total_degree();
            for (eb, cb) in &other.terms {
                if da + eb.total_degree() > self.max_degree {
                    break;
                }
                let e = Expos(ea.0.iter().zip(&eb.0).map(|(a, b)| a + b).collect());
                out.insert_add(e, self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Canonical rendering with t1..tm variables; composite coefficients are
    /// parenthesized.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let cs = self.ring.render(c);
            let cs = if cs.contains(" + ") {
                format!("({cs})")
            } else {
                cs
            };
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, k)
                    }
                })
                .collect();
            if vars.is_empty() {
                parts.push(cs);
            } else {
                parts.push(format!("{} * {}", cs, vars.join("*")));
            }
        }
        parts.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, u32),
        right: (usize, u32),
    },
}

/// Product of two series (spec surface for the panics-free route).
pub fn series_mul<R: Ring>(
    a: &TruncatedSeries<R>,
    b: &TruncatedSeries<R>,
) -> Result<TruncatedSeries<R>, SeriesError> {
    a.mul(b)
}

/// Univariate coefficients of t*e^{xt}/(e^t - 1) up to degree n_max, computed
/// by power-series division: numerator e^{xt}, denominator (e^t - 1)/t, which
/// has constant term 1 so no coefficient inversion is needed. The k-th
/// coefficient equals B_k(x)/k!.
fn egf_univariate<R: Ring>(ring: &R, x: &R::Elem, n_max: u32) -> Vec<R::Elem> {
    let n = n_max as usize;
    // numerator: e^{xt}, c_i = x^i / i!
    let mut numer = Vec::with_capacity(n + 1);
    let mut x_pow = ring.one();
    for i in 0..=n {
        if i > 0 {
            x_pow = ring.mul(&x_pow, x);
        }
        let inv_fact = Rat::one() / Rat::from_integer(factorial(i as u32));
        numer.push(ring.scale(&x_pow, &inv_fact));
    }
    // denominator: (e^t - 1)/t, d_i = 1/(i+1)!
    let denom: Vec<Rat> = (0..=n)
        .map(|i| Rat::one() / Rat::from_integer(factorial(i as u32 + 1)))
        .collect();
    // long division; d_0 = 1
    let mut quot: Vec<R::Elem> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = numer[i].clone();
        for k in 1..=i {
            let t = ring.scale(&quot[i - k], &denom[k]);
            acc = ring.sub(&acc, &t);
        }
        quot.push(acc);
    }
    quot
}

/// The series of t*e^{xt}/(e^t - 1) in variable t_var, to total degree
/// `max_degree`. Coefficient of t_var^n is B_n(x)/n!, derived by series
/// division, independent of the Bernoulli recurrence.
pub fn egf_factor<R: Ring>(
    ring: &R,
    x: &R::Elem,
    var: usize,
    num_vars: usize,
    max_degree: u32,
) -> TruncatedSeries<R> {
    assert!(var < num_vars, "variable index out of range");
    let coeffs = egf_univariate(ring, x, max_degree);
    let mut out = TruncatedSeries::zero(ring.clone(), num_vars, max_degree);
    for (i, c) in coeffs.into_iter().enumerate() {
        let mut e = vec![0u32; num_vars];
        e[var] = i as u32;
        out.insert_add(Expos(e), c);
    }
    out
}

/// u*e^{xu}/(e^u - 1) with u = t_1 + ... + t_m, expanded multinomially to
/// total degree `max_degree`: the coefficient of t^alpha is
/// f_{|alpha|} * |alpha|!/prod(alpha_i!), with f the univariate coefficients.
pub fn sum_substituted_egf<R: Ring>(
    ring: &R,
    x: &R::Elem,
    num_vars: usize,
    max_degree: u32,
) -> TruncatedSeries<R> {
    let f = egf_univariate(ring, x, max_degree);
    let mut out = TruncatedSeries::zero(ring.clone(), num_vars, max_degree);
    for d in 0..=max_degree {
        let d_fact = factorial(d);
        for alpha in compositions(d, num_vars) {
            let mut multinomial = Rat::from_integer(d_fact.clone());
            for &a in &alpha {
                multinomial /= Rat::from_integer(factorial(a));
            }
            out.insert_add(Expos(alpha), ring.scale(&f[d as usize], &multinomial));
        }
    }
    out
}

/// All weak compositions of `n` into `m` parts, in colex order.
pub fn compositions(n: u32, m: usize) -> Compositions {
    assert!(m >= 1, "compositions need at least one part");
    Compositions {
        next: Some({
            let mut v = vec![0u32; m];
            v[0] = n;
            v
        }),
        n,
    }
}

pub struct Compositions {
    next: Option<Vec<u32>>,
    n: u32,
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let m = current.len();
        if current[m - 1] != self.n {
            let mut k = current.clone();
            let i = k.iter().position(|&v| v > 0).expect("mass exists");
            let v = k[i];
            k[i] = 0;
            k[0] = v - 1;
            k[i + 1] += 1;
            self.next = Some(k);
        }
        Some(current)
    }
}

/// Both sides of the generating-function identity behind the Carlitz
/// generalization:
///
///   (t_1+...+t_m) * prod_j t_j e^{x_j t_j}/(e^{t_j}-1)
///     = sum_i [ t_i u e^{x_i u}/(e^u - 1) |_{u = t_1+...+t_m}
///               * prod_{j != i} t_j e^{(x_j - x_i + 1_{j>i}) t_j}/(e^{t_j}-1) ]
///
/// as truncated series to total degree `max_degree`.
pub fn carlitz_gf_sides<R: Ring>(
    ring: &R,
    max_degree: u32,
    x: &[R::Elem],
) -> (TruncatedSeries<R>, TruncatedSeries<R>) {
    let m = x.len();
    assert!(m >= 1, "need at least one variable");
    let mut linear = TruncatedSeries::zero(ring.clone(), m, max_degree);
    for i in 0..m {
        linear = linear
            .add(&TruncatedSeries::var(ring.clone(), m, max_degree, i))
            .expect("same shape");
    }

    let mut lhs = linear.clone();
    for (j, xj) in x.iter().enumerate() {
        lhs = lhs.mul(&egf_factor(ring, xj, j, m, max_degree)).expect("same shape");
    }

    let mut rhs = TruncatedSeries::zero(ring.clone(), m, max_degree);
    for i in 0..m {
        let mut term = TruncatedSeries::var(ring.clone(), m, max_degree, i)
            .mul(&sum_substituted_egf(ring, &x[i], m, max_degree))
            .expect("same shape");
        for (j, xj) in x.iter().enumerate() {
            if j == i {
                continue;
            }
            let indicator = if j > i { ring.one() } else { ring.zero() };
            let arg = ring.add(&ring.sub(xj, &x[i]), &indicator);
            term = term.mul(&egf_factor(ring, &arg, j, m, max_degree)).expect("same shape");
        }
        rhs = rhs.add(&term).expect("same shape");
    }
    (lhs, rhs)
}

/// Coefficient of t^alpha in the l1e1 left side, stated directly from the
/// lemma: sum_i B_{alpha_i - 1}(x_i)/(alpha_i - 1)! prod_{j != i}
/// B_{alpha_j}(x_j)/alpha_j!. Defined for alpha with all parts >= 1.
fn lemma_coefficient<R: Ring>(ring: &R, alpha: &[u32], x: &[R::Elem]) -> R::Elem {
    let mut acc = ring.zero();
    for i in 0..x.len() {
        let mut term = bernoulli::bernoulli_eval_in(ring, alpha[i] - 1, &x[i]);
        term = ring.scale(
            &term,
            &(Rat::one() / Rat::from_integer(factorial(alpha[i] - 1))),
        );
        for j in 0..x.len() {
            if j == i {
                continue;
            }
            let b = bernoulli::bernoulli_eval_in(ring, alpha[j], &x[j]);
            term = ring.mul(&term, &b);
            term = ring.scale(&term, &(Rat::one() / Rat::from_integer(factorial(alpha[j]))));
        }
        acc = ring.add(&acc, &term);
    }
    acc
}

fn verify_carlitz_gf_in<R: Ring>(
    ring: &R,
    max_degree: u32,
    x: &[R::Elem],
    mode: Mode,
    parameters: std::collections::BTreeMap<String, String>,
) -> IdentityReport {
    let start = Instant::now();
    let (lhs, rhs) = carlitz_gf_sides(ring, max_degree, x);
    let diff = lhs.sub(&rhs).expect("same shape");
    let mut pass = diff.is_zero();

    // Independent route: extracted coefficients must match the lemma's
    // term-by-term statement divided by factorials, wherever all indices
    // are positive.
    if pass {
        'outer: for d in x.len() as u32..=max_degree {
            for alpha in compositions(d, x.len()) {
                if alpha.contains(&0) {
                    continue;
                }
                let got = lhs.coeff(&alpha);
                let want = lemma_coefficient(ring, &alpha, x);
                if got != want {
                    pass = false;
                    break 'outer;
                }
            }
        }
    }

    IdentityReport {
        identity_id: IdentityId::CarlitzGf,
        mode,
        parameters,
        lhs: lhs.render(),
        rhs: rhs.render(),
        difference: diff.render(),
        pass,
        elapsed: start.elapsed(),
    }
}

/// Exact-numeric Carlitz generating-function check at rational x.
pub fn verify_carlitz_gf_numeric(max_degree: u32, x: &[Rat]) -> IdentityReport {
    let xs: Vec<String> = x.iter().map(ToString::to_string).collect();
    let parameters = params([
        ("m", x.len().to_string()),
        ("degree", max_degree.to_string()),
        ("x", xs.join(",")),
    ]);
    verify_carlitz_gf_in(&RatRing, max_degree, x, Mode::ExactNumeric, parameters)
}

/// Symbolic Carlitz generating-function check with x_1..x_m indeterminate.
pub fn verify_carlitz_gf_symbolic(m: usize, max_degree: u32) -> IdentityReport {
    let ring = PolyRing::new((1..=m).map(|i| format!("x{i}")));
    let x: Vec<_> = (0..m).map(|i| ring.var(i)).collect();
    let parameters = params([
        ("m", m.to_string()),
        ("degree", max_degree.to_string()),
        ("x", "symbolic".to_string()),
    ]);
    verify_carlitz_gf_in(&ring, max_degree, &x, Mode::Symbolic, parameters)
}
