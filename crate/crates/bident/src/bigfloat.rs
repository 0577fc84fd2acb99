//! Arbitrary-precision floating arithmetic with gamma and beta functions.
//!
//! Used only for the gamma/beta extension of the Miki identity, whose
//! individual terms are transcendental and therefore out of reach of the
//! exact rational engine. The float scalar (sign, significand, exponent,
//! precision) and its correctly rounded primitives — add/mul/div, sqrt, exp,
//! ln, pow, sin and the pi constant — come from `astro_float`; the gamma
//! function is a Spouge approximation implemented here, with the parameter
//! chosen from the requested precision and the reflection formula for
//! arguments left of 1/2.
//!
//! All intermediate work runs at `precision_bits + 32` guard bits and results
//! are rounded back to `precision_bits` (round-to-nearest-even).

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use thiserror::Error;

use crate::exact::Rat;

const GUARD_BITS: usize = 32;
const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("gamma pole at non-positive integer argument {0}")]
    Pole(String),
    #[error("precision too low: {0} bits (need >= 128)")]
    PrecisionTooLow(usize),
}

/// Evaluation context: precision policy plus cached constants and Spouge
/// coefficients.
pub struct FloatCtx {
    target_bits: usize,
    work_bits: usize,
    /// Precision of gamma internals. The Spouge coefficients grow to about
    /// 2^{1.85 a} while the bracketed sum is far smaller, so the alternating
    /// sum cancels up to ~0.4 a bits; computing at work_bits + a absorbs the
    /// worst case with room to spare.
    gamma_bits: usize,
    spouge_a: usize,
    consts: Consts,
    spouge: Option<SpougeCoeffs>,
}

struct SpougeCoeffs {
    a: usize,
    /// c0 = sqrt(2 pi); c[k-1] = (-1)^{k-1}/(k-1)! * (a-k)^{k-1/2} * e^{a-k}
    c0: BigFloat,
    c: Vec<BigFloat>,
}

impl FloatCtx {
    pub fn new(precision_bits: usize) -> Self {
        // a ~ 1.26 * bits / log2(2 pi), guard-banded upward; the Spouge bound
        // a^{-1/2} (2 pi)^{-(a+1/2)} then sits far below 2^{-precision}.
        let a = (1.26 * precision_bits as f64 / (2.0 * std::f64::consts::PI).log2()).ceil()
            as usize
            + 2;
        Self {
            target_bits: precision_bits,
            work_bits: precision_bits + GUARD_BITS,
            gamma_bits: precision_bits + GUARD_BITS + a,
            spouge_a: a,
            consts: Consts::new().expect("constants cache"),
            spouge: None,
        }
    }

    pub fn precision_bits(&self) -> usize {
        self.target_bits
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i64(0, self.work_bits)
    }

    pub fn from_i64(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.work_bits)
    }

    /// Exact conversion of a rational: numerator and denominator are parsed
    /// exactly (at whatever precision their bit length needs), then divided
    /// at working precision.
    pub fn from_rat(&mut self, r: &Rat) -> BigFloat {
        let num_bits = r.numer().bits() as usize + 8;
        let den_bits = r.denom().bits() as usize + 8;
        let p = self.work_bits.max(num_bits).max(den_bits);
        let num = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p, RM, &mut self.consts);
        let den = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p, RM, &mut self.consts);
        num.div(&den, self.work_bits, RM)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.consts.pi(self.work_bits, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.work_bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.work_bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.work_bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.work_bits, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.work_bits, RM)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.work_bits, RM, &mut self.consts)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.work_bits, RM, &mut self.consts)
    }

    pub fn sin(&mut self, a: &BigFloat) -> BigFloat {
        a.sin(self.work_bits, RM, &mut self.consts)
    }

    /// a^b for a > 0.
    pub fn powf(&mut self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.pow(b, self.work_bits, RM, &mut self.consts)
    }

    /// Rounds a working-precision result down to the requested precision.
    pub fn round_to_target(&self, a: &BigFloat) -> BigFloat {
        let mut out = a.clone();
        let _ = out.set_precision(self.target_bits, RM);
        out
    }

    /// 2^{-k}, for tolerance thresholds.
    pub fn pow2_neg(&self, k: usize) -> BigFloat {
        // 1 has mantissa 0.5 and exponent 1; shifting the exponent by -k
        // scales by 2^{-k}
        let mut one = BigFloat::from_i64(1, self.work_bits);
        one.set_exponent(1 - k as i32);
        one
    }

    /// |a - b| / max(|a|, |b|); zero when both are zero.
    pub fn rel_diff(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let d = self.sub(a, b).abs();
        let aa = a.abs();
        let bb = b.abs();
        let denom = if aa.cmp(&bb).unwrap_or(0) >= 0 { aa } else { bb };
        if denom.is_zero() {
            return self.zero();
        }
        self.div(&d, &denom)
    }

    /// True if |x| < 2^{-k}.
    pub fn below_pow2(&self, x: &BigFloat, k: usize) -> bool {
        let bound = self.pow2_neg(k);
        x.abs().cmp(&bound).unwrap_or(0) < 0
    }

    fn ensure_spouge(&mut self) {
        let a = self.spouge_a;
        if self.spouge.as_ref().map(|s| s.a) == Some(a) {
            return;
        }
        let wb = self.gamma_bits;
        let pi = self.consts.pi(wb, RM);
        let two_pi = pi.mul(&BigFloat::from_i64(2, wb), wb, RM);
        let c0 = two_pi.sqrt(wb, RM);
        let half = BigFloat::from_f64(0.5, wb);
        let mut c = Vec::with_capacity(a - 1);
        let mut fact = BigFloat::from_i64(1, wb); // (k-1)!
        for k in 1..a {
            if k > 1 {
                fact = fact.mul(&BigFloat::from_i64(k as i64 - 1, wb), wb, RM);
            }
            let a_minus_k = BigFloat::from_i64((a - k) as i64, wb);
            let expo = BigFloat::from_i64(k as i64, wb).sub(&half, wb, RM);
            let power = a_minus_k.pow(&expo, wb, RM, &mut self.consts); // (a-k)^{k-1/2}
            let e_ak = a_minus_k.exp(wb, RM, &mut self.consts); // e^{a-k}
            let mut ck = power.mul(&e_ak, wb, RM).div(&fact, wb, RM);
            if k % 2 == 0 {
                ck = ck.neg();
            }
            c.push(ck);
        }
        self.spouge = Some(SpougeCoeffs { a, c0, c });
    }

    /// Gamma(z) by the Spouge approximation, reflection for z < 1/2.
    /// Errors on non-positive integer arguments (the poles of gamma).
    pub fn gamma(&mut self, z: &BigFloat) -> Result<BigFloat, GammaError> {
        if z.is_int() && (z.is_negative() || z.is_zero()) {
            return Err(GammaError::Pole(format!("{z}")));
        }
        let wb = self.gamma_bits;
        let half = BigFloat::from_f64(0.5, wb);
        let out = if z.cmp(&half).unwrap_or(0) < 0 {
            // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
            let one_minus = BigFloat::from_i64(1, wb).sub(z, wb, RM);
            let g = self.gamma_spouge_right(&one_minus);
            let pi = self.consts.pi(wb, RM);
            let pi_z = pi.mul(z, wb, RM);
            let s = pi_z.sin(wb, RM, &mut self.consts);
            pi.div(&s.mul(&g, wb, RM), wb, RM)
        } else {
            self.gamma_spouge_right(z)
        };
        // hand back at the ordinary working precision
        let mut out = out;
        let _ = out.set_precision(self.work_bits, RM);
        Ok(out)
    }

    /// Spouge core for z >= 1/2: with w = z - 1,
    /// Gamma(z) = (w+a)^{w+1/2} e^{-(w+a)} [c0 + sum_k c_k/(w+k)].
    fn gamma_spouge_right(&mut self, z: &BigFloat) -> BigFloat {
        self.ensure_spouge();
        let wb = self.gamma_bits;
        let w = z.sub(&BigFloat::from_i64(1, wb), wb, RM);
        let (sum, a) = {
            let coeffs = self.spouge.as_ref().expect("coefficients built");
            let mut s = coeffs.c0.clone();
            for (k, ck) in coeffs.c.iter().enumerate() {
                let wk = w.add(&BigFloat::from_i64(k as i64 + 1, wb), wb, RM);
                s = s.add(&ck.div(&wk, wb, RM), wb, RM);
            }
            (s, coeffs.a)
        };
        let w_plus_a = w.add(&BigFloat::from_i64(a as i64, wb), wb, RM);
        let expo = w.add(&BigFloat::from_f64(0.5, wb), wb, RM);
        let power = w_plus_a.pow(&expo, wb, RM, &mut self.consts);
        let decay = w_plus_a.neg().exp(wb, RM, &mut self.consts);
        power.mul(&decay, wb, RM).mul(&sum, wb, RM)
    }

    /// beta(a, b) = Gamma(a) Gamma(b) / Gamma(a+b).
    pub fn beta(&mut self, a: &BigFloat, b: &BigFloat) -> Result<BigFloat, GammaError> {
        let ga = self.gamma(a)?;
        let gb = self.gamma(b)?;
        let ab = self.add(a, b);
        let gab = self.gamma(&ab)?;
        Ok(ga.mul(&gb, self.work_bits, RM).div(&gab, self.work_bits, RM))
    }
}

/// Gamma(z) at the given precision; relative error below
/// 2^{-(precision_bits - 8)}. One-shot convenience over `FloatCtx::gamma`.
pub fn gamma_spouge(z: &BigFloat, precision_bits: usize) -> Result<BigFloat, GammaError> {
    let mut ctx = FloatCtx::new(precision_bits);
    let g = ctx.gamma(z)?;
    Ok(ctx.round_to_target(&g))
}

/// beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b) at the given precision.
pub fn beta_fn(a: &BigFloat, b: &BigFloat, precision_bits: usize) -> Result<BigFloat, GammaError> {
    let mut ctx = FloatCtx::new(precision_bits);
    let v = ctx.beta(a, b)?;
    Ok(ctx.round_to_target(&v))
}
