//! The gamma-quotient generalization, checked exactly.
//!
//! Dividing both sides of the identity by Gamma(p_1)...Gamma(p_{m+1}) turns
//! every Gamma(p+k)/Gamma(k+1) into the exact rational (p)_k / k!, so the
//! whole statement becomes
//!
//!   p_{m+1} sum_{k's} prod_j (p_j)_{k_j}/k_j! B_{k_j}(x_j)
//!     = - sum_i p_i sum_{k's} (p_{m+1})_{k_i}/k_i! B_{k_i}(1-x_i)
//!         prod_{j != i} (p_j)_{k_j}/k_j! B_{k_j}(x_j - x_i + 1_{j>i})
//!
//! with p_{m+1} = -(p_1+...+p_m+n) — an exact rational identity, strictly
//! stronger than any tolerance-based floating check. Via
//! (p)_k/k! = (-1)^k binom(-p, k), each side equals (-1)^{n+1} times the
//! corresponding side of the main theorem at r_j = -p_j, which is asserted as
//! a cross-oracle.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_eval;
use crate::exact::{factorial, int, is_integral, pochhammer, Rat};
use crate::identities::theorem1::{theorem1_sides, Theorem1Params};
use crate::identities::{render_rats, IdentityError};
use crate::report::{params, IdentityId, IdentityReport, Mode};
use crate::ring::RatRing;
use crate::series::compositions;

/// Parameters p_1..p_m, n of one instance. Every p_j and the derived
/// p_{m+1} = -(p_1+...+p_m+n) must be non-integral (the gamma quotients in
/// the original statement sit at poles otherwise).
#[derive(Clone, Debug)]
pub struct GammaParams {
    n: u32,
    p: Vec<Rat>,
}

impl GammaParams {
    pub fn new(n: u32, p: Vec<Rat>) -> Result<Self, IdentityError> {
        if p.is_empty() {
            return Err(IdentityError::Precondition("need m >= 1".into()));
        }
        if n == 0 {
            return Err(IdentityError::Precondition("n must be positive".into()));
        }
        let this = Self { n, p };
        for (j, pj) in this.p.iter().enumerate() {
            if is_integral(pj) {
                return Err(IdentityError::Precondition(format!(
                    "p_{} = {pj} is integral",
                    j + 1
                )));
            }
        }
        let last = this.p_last();
        if is_integral(&last) {
            return Err(IdentityError::Precondition(format!(
                "p_{{m+1}} = {last} is integral"
            )));
        }
        Ok(this)
    }

    pub fn m(&self) -> usize {
        self.p.len()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> &[Rat] {
        &self.p
    }

    /// p_{m+1} = -(p_1 + ... + p_m + n), recomputed on demand.
    pub fn p_last(&self) -> Rat {
        -(self.p.iter().sum::<Rat>() + int(i64::from(self.n)))
    }
}

fn poch_weight(p: &Rat, k: u32) -> Rat {
    pochhammer(p, k) / Rat::from_integer(factorial(k))
}

/// Both sides of the Pochhammer-normalized identity.
pub fn theorem2_sides(gp: &GammaParams, x: &[Rat]) -> Result<(Rat, Rat), IdentityError> {
    let m = gp.m();
    if x.len() != m {
        return Err(IdentityError::Precondition(format!(
            "need {} arguments, got {}",
            m,
            x.len()
        )));
    }
    let p_last = gp.p_last();

    let mut left_sum = Rat::zero();
    for k in compositions(gp.n, m) {
        let mut term = Rat::one();
        for j in 0..m {
            term *= poch_weight(&gp.p[j], k[j]) * bernoulli_eval(k[j], &x[j]);
        }
        left_sum += term;
    }
    let left = &p_last * left_sum;

    let mut right = Rat::zero();
    for i in 0..m {
        let mut inner = Rat::zero();
        for k in compositions(gp.n, m) {
            let mut term =
                poch_weight(&p_last, k[i]) * bernoulli_eval(k[i], &(Rat::one() - &x[i]));
            for j in 0..m {
                if j == i {
                    continue;
                }
                let indicator = int(i64::from(j > i));
                let arg = &x[j] - &x[i] + indicator;
                term *= poch_weight(&gp.p[j], k[j]) * bernoulli_eval(k[j], &arg);
            }
            inner += term;
        }
        right -= &gp.p[i] * inner;
    }

    Ok((left, right))
}

/// Verifies the normalized identity exactly and cross-checks both sides
/// against the main theorem under r_j = -p_j: each normalized side must equal
/// (-1)^{n+1} times the corresponding side there.
pub fn verify_theorem2(gp: &GammaParams, x: &[Rat]) -> Result<IdentityReport, IdentityError> {
    let start = Instant::now();
    let (lhs, rhs) = theorem2_sides(gp, x)?;

    let r: Vec<Rat> = gp.p().iter().map(|p| -p).collect();
    let t1 = Theorem1Params::<RatRing>::new(gp.n(), r, x.to_vec())?;
    let (t1_left, t1_right) = theorem1_sides(&RatRing, &t1);
    let sign = int(if gp.n().is_multiple_of(2) { -1 } else { 1 }); // (-1)^{n+1}
    let cross_ok = lhs == &sign * t1_left && rhs == &sign * t1_right;

    let diff = &lhs - &rhs;
    let parameters = params([
        ("m", gp.m().to_string()),
        ("n", gp.n().to_string()),
        ("p", render_rats(gp.p())),
        ("p_last", gp.p_last().to_string()),
        ("x", render_rats(x)),
        ("cross_oracle", cross_ok.to_string()),
    ]);
    Ok(IdentityReport {
        identity_id: IdentityId::Theorem2,
        mode: Mode::ExactNumeric,
        parameters,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        difference: diff.to_string(),
        pass: diff.is_zero() && cross_ok,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn worked_m1_example() {
        // m=1, p=1/2, n=2, x=0: p_2 = -5/2; both sides -5/32
        let gp = GammaParams::new(2, vec![rat(1, 2)]).unwrap();
        assert_eq!(gp.p_last(), rat(-5, 2));
        let (l, r) = theorem2_sides(&gp, &[int(0)]).unwrap();
        assert_eq!(l, rat(-5, 32));
        assert_eq!(r, rat(-5, 32));
    }

    #[test]
    fn report_with_cross_oracle() {
        let gp = GammaParams::new(3, vec![rat(1, 3), rat(1, 5)]).unwrap();
        let rep = verify_theorem2(&gp, &[rat(1, 2), rat(-2, 7)]).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.parameters["cross_oracle"], "true");
    }

    #[test]
    fn integral_p_rejected() {
        assert!(GammaParams::new(2, vec![int(1)]).is_err());
        // p_last integral: p = (1/2, 1/2), n = 2 gives p_3 = -3
        assert!(GammaParams::new(2, vec![rat(1, 2), rat(1, 2)]).is_err());
        assert!(GammaParams::new(0, vec![rat(1, 2)]).is_err());
        assert!(GammaParams::new(2, vec![]).is_err());
    }

    #[test]
    fn small_sweep() {
        for n in 1..=6 {
            let gp = GammaParams::new(n, vec![rat(1, 2), rat(1, 3), rat(-3, 7)]).unwrap();
            let rep = verify_theorem2(&gp, &[rat(1, 4), rat(0, 1), rat(5, 3)]).unwrap();
            assert!(rep.pass, "theorem2 fails at n = {n}");
        }
    }
}
