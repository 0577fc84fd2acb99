//! Arbitrary-precision rational scalars and the combinatorial primitives
//! (generalized binomial, Pochhammer, harmonic numbers, factorial) used by
//! every identity in the suite.
//!
//! `Rat` is always kept in lowest terms with a positive denominator; zero is
//! 0/1. Complex parameters are deliberately not supported: both sides of
//! every identity verified by this crate are polynomials in their parameters,
//! so equality over all rationals (or symbolically, over indeterminates)
//! already implies equality over the complex numbers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, reduced, with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a `Rat`.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n! as a big integer, by incremental products.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Generalized binomial coefficient binom(r, k) = r(r-1)...(r-k+1)/k! for any
/// rational r. Returns 0 for k < 0, matching the vanishing convention of the
/// finite sums it appears in; in particular binom(n, k) = 0 for integer
/// n >= 0 with k > n.
pub fn binom_general(r: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut num = Rat::one();
    for i in 0..k {
        num *= r - int(i);
    }
    num / Rat::from_integer(factorial(k as u32))
}

/// Binomial coefficient for integer arguments, as a big integer.
/// Zero when k > n or k < 0.
pub fn binom_int(n: u32, k: i64) -> BigInt {
    if k < 0 || k as u32 > n {
        return BigInt::zero();
    }
    let k = k as u32;
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Pochhammer symbol (rising factorial) (p)_k = p(p+1)...(p+k-1); (p)_0 = 1.
/// Equals the gamma quotient Gamma(p+k)/Gamma(p) wherever the latter is
/// defined, but is computed by incremental products so it stays exact.
pub fn pochhammer(p: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= p + int(i64::from(i));
    }
    acc
}

/// Harmonic number H_n = sum_{i=1..n} 1/i; H_0 = 0.
pub fn harmonic(n: u32) -> Rat {
    let mut acc = Rat::zero();
    for i in 1..=i64::from(n) {
        acc += rat(1, i);
    }
    acc
}

/// True if `r` is an integer (denominator 1).
pub fn is_integral(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if `r` is an integer <= 0, i.e. a pole of the gamma function.
pub fn is_nonpositive_integer(r: &Rat) -> bool {
    is_integral(r) && !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_empty_product_is_one() {
        assert_eq!(binom_general(&rat(7, 3), 0), int(1));
    }

    #[test]
    fn binom_minus_one_alternates() {
        assert_eq!(binom_general(&int(-1), 5), int(-1));
        assert_eq!(binom_general(&int(-1), 6), int(1));
    }

    #[test]
    fn binom_half() {
        // (1/2)(-1/2)/2! = -1/8
        assert_eq!(binom_general(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn binom_negative_k_is_zero() {
        assert_eq!(binom_general(&rat(7, 3), -1), Rat::zero());
        assert_eq!(binom_general(&int(5), -3), Rat::zero());
    }

    #[test]
    fn binom_vanishes_above_integer_row() {
        for n in 0..8i64 {
            for k in (n + 1)..(n + 5) {
                assert_eq!(binom_general(&int(n), k), Rat::zero());
            }
        }
    }

    #[test]
    fn binom_integrality() {
        // binom(n, k) is an integer for all 0 <= k <= n <= 30
        for n in 0..=30i64 {
            for k in 0..=n {
                let b = binom_general(&int(n), k);
                assert!(is_integral(&b), "binom({n},{k}) = {b} not integral");
                assert_eq!(b.numer(), &binom_int(n as u32, k));
            }
        }
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(&rat(5, 2), 0), int(1));
        // (1/2)(3/2) = 3/4
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(4), rat(25, 12));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479001600i64));
    }

    #[test]
    fn reduced_form_invariants() {
        let a = Rat::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(a, rat(-3, 2));
        assert!(a.denom().is_positive());
        let z = rat(3, 7) - rat(3, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(z.to_string(), "0");
    }
}
