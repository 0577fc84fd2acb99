//! Dense univariate polynomials over Q.
//!
//! Coefficient index = degree; the representation is canonical: no trailing
//! zero coefficient, the zero polynomial is the empty list. Kept separate
//! from the sparse multivariate type because Bernoulli expansions are dense;
//! `lift` converts into the sparse ring when a computation mixes the two.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::poly::multi::MultiPoly;
use crate::poly::PolyError;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Builds from coefficients (index = degree), trimming to canonical form.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The monomial c * x^deg.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at an element of an arbitrary Q-algebra; this is how
    /// B_n is applied to symbolic arguments like x - y or 2x.
    pub fn eval_in<R: Ring>(&self, ring: &R, x: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), &ring.from_rat(c));
        }
        acc
    }

    /// Composition self(inner(x)).
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Embeds into the sparse multivariate ring, mapping x to variable `var`.
    pub fn lift(&self, arity: usize, var: usize) -> Result<MultiPoly, PolyError> {
        if var >= arity {
            return Err(PolyError::IndexOutOfRange { index: var, arity });
        }
        let mut acc = MultiPoly::zero(arity);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut expos = vec![0u32; arity];
                expos[var] = i as u32;
                acc = &acc + &MultiPoly::monomial(c.clone(), expos);
            }
        }
        Ok(acc)
    }

    /// Canonical text rendering, highest-degree term first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let part = match i {
                0 => c.to_string(),
                1 => format!("{c} * {var}"),
                _ => format!("{c} * {var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(coeffs: &[(i64, i64)]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn canonical_trim() {
        let q = UniPoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(q.degree(), Some(0));
        assert!(UniPoly::from_coeffs(vec![int(0), int(0)]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        // (1+x)(1-x) = 1-x^2
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(1, 1), (0, 1), (-1, 1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn eval_and_compose() {
        // q(x) = x^2 - x + 1/6 at 1/2 -> -1/12
        let q = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(q.eval(&rat(1, 2)), rat(-1, 12));
        // q(2x) = 4x^2 - 2x + 1/6
        let double = UniPoly::monomial(int(2), 1);
        assert_eq!(q.compose(&double), p(&[(1, 6), (-2, 1), (4, 1)]));
    }

    #[test]
    fn derivative_drops_degree() {
        let q = p(&[(5, 1), (3, 1), (0, 1), (2, 1)]); // 2x^3 + 3x + 5
        assert_eq!(q.derivative(), p(&[(3, 1), (0, 1), (6, 1)]));
        assert!(UniPoly::constant(int(7)).derivative().is_zero());
    }

    #[test]
    fn render_canonical() {
        let q = p(&[(-1, 2), (1, 1)]); // x - 1/2
        assert_eq!(q.render("x"), "1 * x + -1/2");
        assert_eq!(UniPoly::zero().render("x"), "0");
    }
}
