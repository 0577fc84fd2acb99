//! Sparse multivariate polynomials over Q.
//!
//! Terms live in a BTreeMap keyed by exponent vector under total-degree-then-
//! lex order, so iteration (and therefore printing) is canonical. No zero
//! coefficient is ever stored and all exponent vectors have length = arity;
//! every operation re-canonicalizes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::poly::PolyError;

/// Exponent vector ordered by total degree, ties broken lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expos(pub Vec<u32>);

impl Expos {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn checked_add(&self, other: &Expos) -> Expos {
        debug_assert_eq!(self.0.len(), other.0.len());
        Expos(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, None if any component would go negative.
    fn checked_sub(&self, other: &Expos) -> Option<Expos> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Expos(out))
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Expos {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Expos, Rat>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Expos(vec![0; arity]), c);
        }
        p
    }

    /// The `idx`-th indeterminate.
    pub fn var(arity: usize, idx: usize) -> Result<Self, PolyError> {
        if idx >= arity {
            return Err(PolyError::IndexOutOfRange { index: idx, arity });
        }
        let mut expos = vec![0u32; arity];
        expos[idx] = 1;
        Ok(Self::monomial(Rat::one(), expos))
    }

    /// A single term c * x^expos. Zero coefficients collapse to the zero poly.
    pub fn monomial(c: Rat, expos: Vec<u32>) -> Self {
        let arity = expos.len();
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Expos(expos), c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Expos::total_degree)
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, expos: &[u32]) -> Rat {
        self.terms
            .get(&Expos(expos.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expos, &Rat)> {
        self.terms.iter()
    }

    /// Leading term under the total-degree-then-lex order.
    fn leading(&self) -> Option<(&Expos, &Rat)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, expos: Expos, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expos) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_add(ea.checked_add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.arity, Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact composition: every occurrence of variable `var` is replaced by
    /// `replacement` (same arity; constants allowed).
    pub fn substitute(&self, var: usize, replacement: &Self) -> Result<Self, PolyError> {
        if var >= self.arity {
            return Err(PolyError::IndexOutOfRange {
                index: var,
                arity: self.arity,
            });
        }
        self.check_arity(replacement)?;
        let max_pow = self
            .terms
            .keys()
            .map(|e| e.0[var])
            .max()
            .unwrap_or(0) as usize;
        // replacement powers 0..=max_pow, computed incrementally
        let mut pows = Vec::with_capacity(max_pow + 1);
        pows.push(Self::constant(self.arity, Rat::one()));
        for i in 1..=max_pow {
            pows.push(&pows[i - 1] * replacement);
        }
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut rest = e.0.clone();
            let k = rest[var] as usize;
            rest[var] = 0;
            let term = Self::monomial(c.clone(), rest);
            out = &out + &(&term * &pows[k]);
        }
        Ok(out)
    }

    /// Exact quotient h with self = q * h, when q divides self exactly.
    /// Implemented as reduction by the single divisor under the term order;
    /// returns NotDivisible when a remainder survives.
    pub fn divide_exact(&self, q: &Self) -> Result<Self, PolyError> {
        self.check_arity(q)?;
        assert!(!q.is_zero(), "divide_exact: zero divisor");
        let (q_lead_e, q_lead_c) = q.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((r_lead_e, r_lead_c)) = rem.leading() {
            let Some(e) = r_lead_e.checked_sub(q_lead_e) else {
                return Err(PolyError::NotDivisible);
            };
            let t = Self::monomial(r_lead_c / q_lead_c, e.0);
            quot = &quot + &t;
            rem = &rem - &(&t * q);
        }
        Ok(quot)
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Result<Self, PolyError> {
        if var >= self.arity {
            return Err(PolyError::IndexOutOfRange {
                index: var,
                arity: self.arity,
            });
        }
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut expos = e.0.clone();
            expos[var] = k - 1;
            out.insert_add(Expos(expos), c * Rat::from_integer(k.into()));
        }
        Ok(out)
    }

    /// Full evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, PolyError> {
        if point.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Canonical text rendering with the given variable names: terms
    /// `c * v1^e1*...*vk^ek` joined by ` + `, leading term first.
    pub fn render(&self, names: &[String]) -> String {
        debug_assert_eq!(names.len(), self.arity);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            if e.is_constant() {
                parts.push(c.to_string());
                continue;
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            parts.push(format!("{} * {}", c, vars.join("*")));
        }
        parts.join(" + ")
    }
}

/// Display with default names x1..xk.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

// Reference ops panic on arity mismatch; the checked_* methods return errors.
// All internal callers construct operands in one ring, so a mismatch is a bug.

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("arity mismatch in add")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("arity mismatch in sub")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("arity mismatch in mul")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn xy() -> (MultiPoly, MultiPoly) {
        (MultiPoly::var(2, 0).unwrap(), MultiPoly::var(2, 1).unwrap())
    }

    #[test]
    fn additive_inverse() {
        let (x, y) = xy();
        let p = &(&x * &y) + &MultiPoly::constant(2, rat(3, 7));
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn mul_binomials() {
        // (1+t)(1-t) = 1-t^2
        let t = MultiPoly::var(1, 0).unwrap();
        let one = MultiPoly::constant(1, int(1));
        let prod = &(&one + &t) * &(&one - &t);
        assert_eq!(prod, &one - &t.pow(2));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = MultiPoly::var(2, 0).unwrap();
        let b = MultiPoly::var(3, 0).unwrap();
        assert!(matches!(
            a.checked_add(&b),
            Err(PolyError::ArityMismatch { left: 2, right: 3 })
        ));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn substitute_doubling() {
        // x^2 with x := 2x gives 4x^2
        let x = MultiPoly::var(1, 0).unwrap();
        let got = x.pow(2).substitute(0, &x.scale(&int(2))).unwrap();
        assert_eq!(got, x.pow(2).scale(&int(4)));
    }

    #[test]
    fn substitute_ternary_constraint() {
        // x+y+z with z := 1-x-y collapses to 1
        let x = MultiPoly::var(3, 0).unwrap();
        let y = MultiPoly::var(3, 1).unwrap();
        let z = MultiPoly::var(3, 2).unwrap();
        let sum = &(&x + &y) + &z;
        let repl = &(&MultiPoly::constant(3, int(1)) - &x) - &y;
        let got = sum.substitute(2, &repl).unwrap();
        assert_eq!(got, MultiPoly::constant(3, int(1)));
    }

    #[test]
    fn substitute_reflects_lifted_bernoulli() {
        // B_2 lifted to the sparse ring, composed with 1-x, is B_2 again
        let b2 = crate::bernoulli::bernoulli_poly(2).lift(1, 0).unwrap();
        let x = MultiPoly::var(1, 0).unwrap();
        let one_minus_x = &MultiPoly::constant(1, int(1)) - &x;
        assert_eq!(b2.substitute(0, &one_minus_x).unwrap(), b2);
    }

    #[test]
    fn derivative_of_lifted_bernoulli() {
        // d/dx B_3(x) = 3 B_2(x)
        let b3 = crate::bernoulli::bernoulli_poly(3).lift(1, 0).unwrap();
        let b2 = crate::bernoulli::bernoulli_poly(2).lift(1, 0).unwrap();
        assert_eq!(b3.derivative(0).unwrap(), b2.scale(&int(3)));
    }

    #[test]
    fn bernoulli_difference_is_divisible() {
        // B_3(x) - B_3(y) shares its constant term, so x - y divides exactly
        let b3x = crate::bernoulli::bernoulli_poly(3).lift(2, 0).unwrap();
        let b3y = crate::bernoulli::bernoulli_poly(3).lift(2, 1).unwrap();
        let (x, y) = xy();
        let q = (&b3x - &b3y).divide_exact(&(&x - &y)).unwrap();
        assert_eq!(&q * &(&x - &y), &b3x - &b3y);
    }

    #[test]
    fn substitute_index_out_of_range() {
        let x = MultiPoly::var(1, 0).unwrap();
        assert!(matches!(
            x.substitute(1, &x),
            Err(PolyError::IndexOutOfRange { index: 1, arity: 1 })
        ));
    }

    #[test]
    fn divide_difference_of_squares() {
        let (x, y) = xy();
        let num = &x.pow(2) - &y.pow(2);
        let den = &x - &y;
        assert_eq!(num.divide_exact(&den).unwrap(), &x + &y);
    }

    #[test]
    fn divide_not_divisible() {
        let (x, y) = xy();
        let num = &x.pow(2) + &MultiPoly::constant(2, int(1));
        let den = &x - &y;
        assert!(matches!(num.divide_exact(&den), Err(PolyError::NotDivisible)));
    }

    #[test]
    fn derivative_examples() {
        let (x, y) = xy();
        let p = &x.pow(2) * &y;
        let dx = p.derivative(0).unwrap();
        assert_eq!(dx, (&x * &y).scale(&int(2)));
        let dy = x.pow(2).derivative(1).unwrap();
        assert!(dy.is_zero());
    }

    #[test]
    fn eval_point() {
        let (x, y) = xy();
        let p = &(&x.pow(2) * &y) + &MultiPoly::constant(2, rat(1, 6));
        assert_eq!(p.eval(&[rat(1, 2), int(-4)]).unwrap(), int(-1) + rat(1, 6));
    }

    #[test]
    fn render_canonical_order() {
        let (x, y) = xy();
        let p = &(&y + &x.pow(2)) + &MultiPoly::constant(2, rat(-1, 2));
        assert_eq!(p.to_string(), "1 * x1^2 + 1 * x2 + -1/2");
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(p.render(&names), "1 * x^2 + 1 * y + -1/2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn term_order_total_degree_then_lex() {
        let a = Expos(vec![0, 2]);
        let b = Expos(vec![1, 0]);
        let c = Expos(vec![1, 1]);
        assert!(b < a); // degree 1 < degree 2
        assert!(a < c); // same degree 2, lex: (0,2) < (1,1)
    }
}
