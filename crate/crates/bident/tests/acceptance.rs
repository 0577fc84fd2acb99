//! Acceptance suite: every criterion is pinned here with its tolerance and
//! time budget. Each test prints one pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use bident::bernoulli::{bernoulli_number, bernoulli_poly};
use bident::exact::{binom_general, factorial, int, is_integral, rat, Rat};
use bident::identities::{
    lemma1_sides, trials, verify_gamma_miki, verify_matiyasevich, verify_miki,
    verify_pan_sun_poly, verify_sun_pan_symbolic, verify_theorem1_symbolic, PanSunKind,
};
use bident::poly::UniPoly;
use bident::ring::RatRing;
use bident::series::{carlitz_gf_sides, compositions, egf_factor, verify_carlitz_gf_numeric,
    verify_carlitz_gf_symbolic};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

const SEED: u64 = 0xB1DE27;

struct Criterion {
    num: u32,
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn begin(num: u32, name: &'static str, budget_secs: u64) -> Self {
        Self {
            num,
            name,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
        }
    }

    fn finish(self, pass: bool) {
        let elapsed = self.start.elapsed();
        let within = elapsed <= self.budget;
        println!(
            "acceptance criterion {:02} ({}): {} in {:.3}s (budget {}s)",
            self.num,
            self.name,
            if pass && within { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            self.budget.as_secs(),
        );
        assert!(pass, "criterion {:02} ({}) failed", self.num, self.name);
        assert!(
            within,
            "criterion {:02} ({}) blew its {}s budget: {:.3}s",
            self.num,
            self.name,
            self.budget.as_secs(),
            elapsed.as_secs_f64(),
        );
    }
}

#[test]
fn criterion_01_miki() {
    let c = Criterion::begin(1, "miki exact, 4 <= n <= 40", 1);
    let mut ok = true;
    for n in 4..=40 {
        let r = verify_miki(n).unwrap();
        ok &= r.pass && r.difference == "0";
        if n == 4 {
            ok &= r.lhs == "1/144" && r.rhs == "1/144";
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_02_matiyasevich() {
    let c = Criterion::begin(2, "matiyasevich exact, 4 <= n <= 40", 1);
    let mut ok = true;
    for n in 4..=40 {
        let r = verify_matiyasevich(n).unwrap();
        ok &= r.pass && r.difference == "0";
        if n == 4 {
            ok &= r.lhs == "1/6" && r.rhs == "1/6";
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_03_pan_sun_polynomials() {
    let c = Criterion::begin(3, "pan-sun eq3 n<=12 and eq4 n<=12, symbolic", 30);
    let mut ok = true;
    for n in 2..=12 {
        ok &= verify_pan_sun_poly(PanSunKind::MikiType, n).unwrap().pass;
    }
    for n in 1..=12 {
        ok &= verify_pan_sun_poly(PanSunKind::MatiyasevichType, n).unwrap().pass;
    }
    c.finish(ok);
}

#[test]
fn criterion_04_woodcock() {
    let c = Criterion::begin(4, "woodcock symbolic, m <= 8, 2 <= n <= 8", 30);
    let mut ok = true;
    for m in 1..=8 {
        for n in 2..=8 {
            ok &= bident::identities::verify_woodcock(m, n).unwrap().pass;
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_05_sun_pan() {
    let c = Criterion::begin(5, "sun-pan symbolic n <= 6 + 200 exact trials", 60);
    let mut ok = true;
    for n in 1..=6 {
        ok &= verify_sun_pan_symbolic(n).pass;
    }
    for r in trials::sun_pan_random_trials(12, 200, SEED) {
        ok &= r.pass && r.difference == "0";
    }
    c.finish(ok);
}

#[test]
fn criterion_06_theorem1() {
    let c = Criterion::begin(6, "theorem1 symbolic (m=2,n<=6),(m=3,n<=4) + trials", 120);
    let mut ok = true;
    for n in 1..=6 {
        ok &= verify_theorem1_symbolic(2, n).unwrap().pass;
    }
    for n in 1..=4 {
        ok &= verify_theorem1_symbolic(3, n).unwrap().pass;
    }
    for m in 1..=4 {
        for r in trials::theorem1_random_trials(m, 10, 100, SEED).unwrap() {
            ok &= r.pass && r.difference == "0";
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_07_lemma1() {
    let c = Criterion::begin(7, "lemma1 exact, m <= 4, sum n_i <= 12, 20 x each", 120);
    let mut ok = true;
    // every index list with positive parts: m <= 4, total <= 12
    for m in 1..=4usize {
        for total in m as u32..=12 {
            for comp in compositions(total - m as u32, m) {
                let n_list: Vec<u32> = comp.iter().map(|&k| k + 1).collect();
                match trials::lemma1_random_trials(&n_list, 20, SEED) {
                    Ok(reports) => {
                        for r in reports {
                            ok &= r.pass && r.difference == "0";
                        }
                    }
                    Err(e) => panic!("lemma1 raised {e} at {n_list:?}"),
                }
            }
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_08_theorem2() {
    let c = Criterion::begin(8, "theorem2 normalized exact, 50 trials, cross-oracle", 30);
    let mut ok = true;
    let reports = trials::theorem2_random_trials(3, 8, 50, SEED).unwrap();
    assert_eq!(reports.len(), 50);
    for r in reports {
        ok &= r.pass && r.difference == "0" && r.parameters["cross_oracle"] == "true";
    }
    c.finish(ok);
}

#[test]
fn criterion_09_carlitz_generating_identity() {
    let c = Criterion::begin(9, "carlitz gf m=2 symbolic deg 8, m=3 rational deg 6", 60);
    let mut ok = verify_carlitz_gf_symbolic(2, 8).pass;

    let xs = [rat(1, 3), rat(-2, 5), rat(7, 4)];
    ok &= verify_carlitz_gf_numeric(6, &xs).pass;

    // extracted coefficients match the lemma evaluator after multiplying by
    // n_1! ... n_m!
    let (lhs_series, rhs_series) = carlitz_gf_sides(&RatRing, 6, &xs);
    for total in 3u32..=6 {
        for alpha in compositions(total, 3) {
            if alpha.contains(&0) {
                continue;
            }
            let (l, r) = lemma1_sides(&RatRing, &alpha, &xs).unwrap();
            let norm: Rat = alpha
                .iter()
                .map(|&a| Rat::from_integer(factorial(a)))
                .product();
            ok &= lhs_series.coeff(&alpha) * &norm == l;
            ok &= rhs_series.coeff(&alpha) * &norm == r;
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_10_egf_cross_check() {
    let c = Criterion::begin(10, "egf coefficients * n! equal bernoulli polys, n <= 20", 5);
    let ring = bident::ring::PolyRing::new(["x"]);
    let series = egf_factor(&ring, &ring.var(0), 0, 1, 20);
    let mut ok = true;
    for n in 0..=20u32 {
        let got = series.coeff(&[n]).scale(&Rat::from_integer(factorial(n)));
        let want = bernoulli_poly(n).lift(1, 0).unwrap();
        ok &= got == want;
    }
    c.finish(ok);
}

#[test]
fn criterion_11_gamma_miki() {
    let c = Criterion::begin(11, "gamma-miki at 256 bits, rel diff < 1e-38", 30);
    let mut ok = true;
    let tol_check = 256usize / 2; // pass threshold 2^-128 < 1e-38
    assert!(2f64.powi(-(tol_check as i32)) < 1e-38);
    for p in [rat(1, 2), rat(1, 3), rat(5, 2)] {
        for n in 2..=8 {
            let r = verify_gamma_miki(&p, n, 256).unwrap();
            ok &= r.pass;
        }
    }
    c.finish(ok);
}

#[test]
fn criterion_12_property_suites() {
    let c = Criterion::begin(12, "reflection/difference/derivative, vSC, Chu-Vandermonde", 30);
    let mut ok = true;

    // reflection, difference, derivative for n <= 25
    let one_minus_x = UniPoly::from_coeffs(vec![int(1), int(-1)]);
    let x_plus_one = UniPoly::from_coeffs(vec![int(1), int(1)]);
    for n in 0..=25u32 {
        let p = bernoulli_poly(n);
        let sign = int(if n % 2 == 0 { 1 } else { -1 });
        ok &= p.compose(&one_minus_x) == p.scale(&sign);
        if n >= 1 {
            let diff = &p.compose(&x_plus_one) - &p;
            ok &= diff == UniPoly::monomial(int(i64::from(n)), n as usize - 1);
            ok &= p.derivative() == bernoulli_poly(n - 1).scale(&int(i64::from(n)));
        }
    }

    // von Staudt-Clausen for even indices <= 60
    for n in (2..=60u32).step_by(2) {
        let mut v = bernoulli_number(n);
        for p in 2..=(n + 1) {
            let is_prime = (2..p).all(|d| p % d != 0);
            if is_prime && n % (p - 1) == 0 {
                v += rat(1, i64::from(p));
            }
        }
        ok &= is_integral(&v);
    }

    // Chu-Vandermonde over 100 seeded random rational pairs
    let mut rng = ChaCha12Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let a = rat(rng.gen_range(-20..=20), rng.gen_range(1..=12));
        let b = rat(rng.gen_range(-20..=20), rng.gen_range(1..=12));
        let n = rng.gen_range(0..=12i64);
        let mut sum = Rat::zero();
        for k in 0..=n {
            sum += binom_general(&a, k) * binom_general(&b, n - k);
        }
        ok &= sum == binom_general(&(&a + &b), n);
    }

    // a passing report's difference renders as the canonical zero
    let rep = verify_miki(10).unwrap();
    ok &= rep.pass && rep.difference == "0";
    let one = Rat::one();
    ok &= one - int(1) == Rat::zero();

    c.finish(ok);
}
