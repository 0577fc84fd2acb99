//! Coefficient-ring abstraction.
//!
//! The identity evaluators and the truncated-series engine run over any exact
//! commutative ring with decidable equality. Two rings are provided: the
//! rationals themselves (exact-numeric mode) and multivariate polynomials
//! over the rationals (symbolic mode, parameters as indeterminates). The ring
//! is passed around as a small context value, following the ring-object
//! pattern: element construction (e.g. the arity of a polynomial ring) needs
//! context that the element type alone cannot supply.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::exact::{factorial, int, Rat};
use crate::poly::MultiPoly;

/// An exact commutative ring with unit, scalar Q-action and exact equality.
// from_rat/from_i64 take &self: the receiver is the ring context, which the
// element type alone cannot supply (e.g. the arity of a polynomial ring).
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    /// Canonical text rendering, used in reports.
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rat(&int(n))
    }

    /// Scalar action of Q on the ring.
    fn scale(&self, a: &Self::Elem, r: &Rat) -> Self::Elem {
        self.mul(a, &self.from_rat(r))
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, it: I) -> Self::Elem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, &x))
    }
}

/// The field of rationals as a ring context.
#[derive(Clone, Copy, Debug, Default)]
pub struct RatRing;

impl Ring for RatRing {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn render(&self, a: &Rat) -> String {
        a.to_string()
    }
}

/// Multivariate polynomials over Q as a ring context. Carries the arity and
/// the display names of the indeterminates.
#[derive(Clone, Debug)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        Self {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The `idx`-th indeterminate. Panics if out of range.
    pub fn var(&self, idx: usize) -> MultiPoly {
        MultiPoly::var(self.arity(), idx).expect("variable index in range")
    }
}

impl Ring for PolyRing {
    type Elem = MultiPoly;

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.arity())
    }
    fn one(&self) -> MultiPoly {
        MultiPoly::constant(self.arity(), Rat::one())
    }
    fn is_zero(&self, a: &MultiPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a + b
    }
    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        -a
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a * b
    }
    fn from_rat(&self, r: &Rat) -> MultiPoly {
        MultiPoly::constant(self.arity(), r.clone())
    }
    fn render(&self, a: &MultiPoly) -> String {
        a.render(&self.names)
    }
}

/// Generalized binomial coefficient over an arbitrary ring:
/// binom(r, k) = r(r-1)...(r-k+1)/k!, with binom(r, k) = 0 for k < 0.
/// Division by k! is the scalar action of 1/k!, exact in any Q-algebra.
pub fn binom_elem<R: Ring>(ring: &R, r: &R::Elem, k: i64) -> R::Elem {
    if k < 0 {
        return ring.zero();
    }
    let mut acc = ring.one();
    for i in 0..k {
        acc = ring.mul(&acc, &ring.sub(r, &ring.from_i64(i)));
    }
    let inv_kfact = Rat::one() / Rat::from_integer(factorial(k as u32));
    ring.scale(&acc, &inv_kfact)
}
