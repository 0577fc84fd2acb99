//! Randomized exact-numeric trial runners.
//!
//! Trials draw rationals with numerators in [-20, 20] and denominators in
//! [1, 12] from a ChaCha stream cipher seeded explicitly, so identical seeds
//! reproduce identical parameter sequences on every platform. The seed is
//! recorded verbatim in every emitted report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::exact::{int, is_integral, rat, Rat};
use crate::identities::{
    verify_lemma1_numeric, verify_sun_pan_numeric, verify_theorem1_numeric, verify_theorem2,
    GammaParams, IdentityError,
};
use crate::report::IdentityReport;

/// One random rational: numerator in [-20, 20], denominator in [1, 12].
pub fn random_rat(rng: &mut ChaCha12Rng) -> Rat {
    rat(rng.gen_range(-20..=20), rng.gen_range(1..=12))
}

/// A random non-integral rational (resamples until the denominator is > 1).
pub fn random_nonintegral_rat(rng: &mut ChaCha12Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if !is_integral(&r) {
            return r;
        }
    }
}

fn stamp_seed(report: &mut IdentityReport, seed: u64, trial: u32) {
    report.parameters.insert("seed".into(), seed.to_string());
    report.parameters.insert("trial".into(), trial.to_string());
}

/// Random trials of the main theorem at fixed m: each trial draws
/// n in [1, n_max] and random rational weights/arguments.
pub fn theorem1_random_trials(
    m: usize,
    n_max: u32,
    trials: u32,
    seed: u64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let r: Vec<Rat> = (0..m).map(|_| random_rat(&mut rng)).collect();
        let x: Vec<Rat> = (0..m).map(|_| random_rat(&mut rng)).collect();
        let mut rep = verify_theorem1_numeric(n, &r, &x)?;
        stamp_seed(&mut rep, seed, trial);
        out.push(rep);
    }
    Ok(out)
}

/// Random trials of the bracket identity: n in [1, n_max], random r, s, x, y.
pub fn sun_pan_random_trials(n_max: u32, trials: u32, seed: u64) -> Vec<IdentityReport> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let (r, s) = (random_rat(&mut rng), random_rat(&mut rng));
        let (x, y) = (random_rat(&mut rng), random_rat(&mut rng));
        let mut rep = verify_sun_pan_numeric(n, &r, &s, &x, &y);
        stamp_seed(&mut rep, seed, trial);
        out.push(rep);
    }
    out
}

/// Random x-vectors for a fixed list of lemma indices.
pub fn lemma1_random_trials(
    n_list: &[u32],
    count: u32,
    seed: u64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count as usize);
    for trial in 0..count {
        let x: Vec<Rat> = (0..n_list.len()).map(|_| random_rat(&mut rng)).collect();
        let mut rep = verify_lemma1_numeric(n_list, &x)?;
        stamp_seed(&mut rep, seed, trial);
        out.push(rep);
    }
    Ok(out)
}

/// Random trials of the gamma-quotient theorem: m in [1, m_max], n in
/// [1, n_max], non-integral p-vectors with non-integral p_{m+1}.
pub fn theorem2_random_trials(
    m_max: usize,
    n_max: u32,
    trials: u32,
    seed: u64,
) -> Result<Vec<IdentityReport>, IdentityError> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let m = rng.gen_range(1..=m_max);
        let n = rng.gen_range(1..=n_max);
        let gp = loop {
            let p: Vec<Rat> = (0..m).map(|_| random_nonintegral_rat(&mut rng)).collect();
            let sum: Rat = p.iter().sum::<Rat>() + int(i64::from(n));
            if !is_integral(&sum) {
                break GammaParams::new(n, p)?;
            }
        };
        let x: Vec<Rat> = (0..m).map(|_| random_rat(&mut rng)).collect();
        let mut rep = verify_theorem2(&gp, &x)?;
        stamp_seed(&mut rep, seed, trial);
        out.push(rep);
    }
    Ok(out)
}
