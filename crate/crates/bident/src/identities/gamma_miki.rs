//! The gamma/beta extension of Miki's identity:
//!
//!   (1/Gamma(2p+2n)) sum_{k=1}^{n-1} B_{2k} B_{2n-2k}
//!       Gamma(p+2k) Gamma(p+2n-2k) / ((2k)! (2n-2k)!)
//!     = 2 Gamma(p+1) sum_{k=1}^{n} [B_{2k} B_{2n-2k} / ((2k)!(2n-2k)!)]
//!         Gamma(p+2k) / Gamma(2p+2k+1)
//!       + (2 B_{2n}/(2n)!) sum_{k=1}^{2n-1} beta(p+k, p+1).
//!
//! Individual gamma values at rational points are transcendental, so this is
//! the one check that cannot run in exact arithmetic: both sides are
//! evaluated in arbitrary-precision floating point and compared at a
//! tolerance derived from the precision. The Bernoulli/factorial weights are
//! still computed exactly and converted once.

use std::time::Instant;

use num_traits::Zero;

use crate::bernoulli::bernoulli_number;
use crate::bigfloat::FloatCtx;
use crate::exact::{factorial, int, is_nonpositive_integer, rat, Rat};
use crate::identities::IdentityError;
use crate::report::{params, IdentityId, IdentityReport, Mode};

/// Verifies the display at `precision_bits`; pass iff the relative
/// difference is below 2^{-(precision_bits/2)}.
pub fn verify_gamma_miki(
    p: &Rat,
    n: u32,
    precision_bits: usize,
) -> Result<IdentityReport, IdentityError> {
    if precision_bits < 128 {
        return Err(IdentityError::Precondition(format!(
            "precision_bits must be >= 128 (got {precision_bits})"
        )));
    }
    if n < 2 {
        return Err(IdentityError::Precondition(format!(
            "gamma-miki requires n >= 2 (n = {n}); at n = 1 the left sum is empty"
        )));
    }

    // All gamma/beta arguments, checked exactly for poles up front.
    let mut args: Vec<Rat> = vec![int(2) * p + int(2 * i64::from(n)), p + int(1)];
    for k in 1..=i64::from(n) {
        args.push(p + int(2 * k));
        args.push(p + int(2 * i64::from(n) - 2 * k));
        args.push(int(2) * p + int(2 * k + 1));
    }
    for k in 1..=(2 * i64::from(n) - 1) {
        args.push(p + int(k));
        args.push(int(2) * p + int(k + 1)); // beta denominator Gamma(2p+k+1)
    }
    for a in &args {
        if is_nonpositive_integer(a) {
            return Err(IdentityError::GammaPole(format!(
                "gamma argument {a} is a non-positive integer"
            )));
        }
    }

    let start = Instant::now();
    let mut ctx = FloatCtx::new(precision_bits);
    let nn = i64::from(n);

    // left: sum of exact weights times Gamma(p+2k)Gamma(p+2n-2k), over Gamma(2p+2n)
    let mut lhs = ctx.zero();
    for k in 1..nn {
        let weight = bernoulli_number(2 * k as u32) * bernoulli_number(2 * (n - k as u32))
            / Rat::from_integer(factorial(2 * k as u32) * factorial(2 * (n - k as u32)));
        if weight.is_zero() {
            continue;
        }
        let a1 = to_f(&mut ctx, &(p + int(2 * k)));
        let g1 = ctx.gamma(&a1)?;
        let a2 = to_f(&mut ctx, &(p + int(2 * nn - 2 * k)));
        let g2 = ctx.gamma(&a2)?;
        let w = ctx.from_rat(&weight);
        let t = ctx.mul(&ctx.mul(&g1, &g2), &w);
        lhs = ctx.add(&lhs, &t);
    }
    let a_top = to_f(&mut ctx, &(int(2) * p + int(2 * nn)));
    let g_top = ctx.gamma(&a_top)?;
    lhs = ctx.div(&lhs, &g_top);

    // right, first part: 2 Gamma(p+1) sum_k weight_k Gamma(p+2k)/Gamma(2p+2k+1)
    let mut sum1 = ctx.zero();
    for k in 1..=nn {
        let weight = bernoulli_number(2 * k as u32) * bernoulli_number(2 * (n - k as u32))
            / Rat::from_integer(factorial(2 * k as u32) * factorial(2 * (n - k as u32)));
        if weight.is_zero() {
            continue;
        }
        let a1 = to_f(&mut ctx, &(p + int(2 * k)));
        let g1 = ctx.gamma(&a1)?;
        let a2 = to_f(&mut ctx, &(int(2) * p + int(2 * k + 1)));
        let g2 = ctx.gamma(&a2)?;
        let w = ctx.from_rat(&weight);
        let t = ctx.mul(&ctx.div(&g1, &g2), &w);
        sum1 = ctx.add(&sum1, &t);
    }
    let a_p1 = to_f(&mut ctx, &(p + int(1)));
    let g_p1 = ctx.gamma(&a_p1)?;
    let two = ctx.from_i64(2);
    let part1 = ctx.mul(&ctx.mul(&two, &g_p1), &sum1);

    // right, second part: (2 B_{2n}/(2n)!) sum_{k=1}^{2n-1} beta(p+k, p+1)
    let mut sum2 = ctx.zero();
    let p1f = to_f(&mut ctx, &(p + int(1)));
    for k in 1..=(2 * nn - 1) {
        let a = to_f(&mut ctx, &(p + int(k)));
        let b = ctx.beta(&a, &p1f)?;
        sum2 = ctx.add(&sum2, &b);
    }
    let outer = bernoulli_number(2 * n) * rat(2, 1) / Rat::from_integer(factorial(2 * n));
    let w_outer = ctx.from_rat(&outer);
    let rhs = ctx.add(&part1, &ctx.mul(&w_outer, &sum2));

    let rel = ctx.rel_diff(&lhs, &rhs);
    let pass = ctx.below_pow2(&rel, precision_bits / 2);
    let diff = ctx.sub(&lhs, &rhs);

    let parameters = params([
        ("p", p.to_string()),
        ("n", n.to_string()),
        ("precision_bits", precision_bits.to_string()),
        ("tolerance", format!("2^-{}", precision_bits / 2)),
    ]);
    Ok(IdentityReport {
        identity_id: IdentityId::GammaMiki,
        mode: Mode::Bigfloat,
        parameters,
        lhs: format!("{}", ctx.round_to_target(&lhs)),
        rhs: format!("{}", ctx.round_to_target(&rhs)),
        difference: format!("{}", ctx.round_to_target(&diff)),
        pass,
        elapsed: start.elapsed(),
    })
}

fn to_f(ctx: &mut FloatCtx, r: &Rat) -> astro_float::BigFloat {
    ctx.from_rat(r)
}
