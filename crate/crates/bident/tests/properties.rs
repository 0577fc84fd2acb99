//! Property suites: combinatorial identities of the
//! binomial primitives, ring axioms of the sparse polynomials, and the
//! structural invariants tying the identity evaluators together.

use bident::bernoulli::{bernoulli_eval, bernoulli_eval_in};
use bident::exact::{binom_general, int, pochhammer, rat, Rat};
use bident::identities::{
    bracket_sum, sun_pan_combination, theorem1_rhs_reflected, theorem1_sides, Theorem1Params,
};
use bident::poly::MultiPoly;
use bident::ring::{PolyRing, RatRing};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (arb_rat(), prop::collection::vec(0u32..=3, arity));
    prop::collection::vec(term, 0..8).prop_map(move |terms| {
        let mut p = MultiPoly::zero(arity);
        for (c, e) in terms {
            p = p.checked_add(&MultiPoly::monomial(c, e)).unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    // Chu-Vandermonde: sum_k binom(a,k) binom(b,n-k) = binom(a+b,n)
    #[test]
    fn chu_vandermonde(a in arb_rat(), b in arb_rat(), n in 0i64..=12) {
        let mut sum = Rat::zero();
        for k in 0..=n {
            sum += binom_general(&a, k) * binom_general(&b, n - k);
        }
        prop_assert_eq!(sum, binom_general(&(&a + &b), n));
    }

    // Pascal: binom(r,k) = binom(r-1,k-1) + binom(r-1,k)
    #[test]
    fn pascal_rule(r in arb_rat(), k in 0i64..=12) {
        let r1 = &r - &int(1);
        prop_assert_eq!(
            binom_general(&r, k),
            binom_general(&r1, k - 1) + binom_general(&r1, k)
        );
    }

    // (p)_k = (-1)^k binom(-p, k) k!
    #[test]
    fn pochhammer_vs_binomial(p in arb_rat(), k in 0u32..=12) {
        let sign = int(if k % 2 == 0 { 1 } else { -1 });
        let kfact = Rat::from_integer(bident::exact::factorial(k));
        prop_assert_eq!(
            pochhammer(&p, k),
            sign * binom_general(&-&p, i64::from(k)) * kfact
        );
    }

    // arithmetic results stay in lowest terms with positive denominator
    #[test]
    fn rat_closure(a in arb_rat(), b in arb_rat()) {
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(v.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one());
        }
    }

    // ring axioms on random sparse operands
    #[test]
    fn poly_ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        prop_assert_eq!(&ab_c, &a_bc);
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(&left, &right);
        let one = MultiPoly::constant(3, Rat::one());
        prop_assert_eq!(&(&a * &one), &a);
        prop_assert_eq!(&(&a + &MultiPoly::zero(3)), &a);
        prop_assert_eq!(&(&a * &b), &(&b * &a));
    }

    // divide_exact inverts multiplication
    #[test]
    fn divide_exact_inverts_mul(q in arb_poly(2), h in arb_poly(2)) {
        prop_assume!(!q.is_zero());
        let product = &q * &h;
        prop_assert_eq!(product.divide_exact(&q).unwrap(), h);
    }

    // substitution is a ring homomorphism
    #[test]
    fn substitute_is_homomorphism(a in arb_poly(2), b in arb_poly(2), r in arb_poly(2)) {
        let prod_then_sub = (&a * &b).substitute(0, &r).unwrap();
        let sub_then_prod = &a.substitute(0, &r).unwrap() * &b.substitute(0, &r).unwrap();
        prop_assert_eq!(prod_then_sub, sub_then_prod);
        let sum_then_sub = (&a + &b).substitute(0, &r).unwrap();
        let sub_then_sum = &a.substitute(0, &r).unwrap() + &b.substitute(0, &r).unwrap();
        prop_assert_eq!(sum_then_sub, sub_then_sum);
    }

    // reflection inside the main theorem's right side: replacing every
    // B_k(1-x_i) by (-1)^k B_k(x_i) leaves the value unchanged
    #[test]
    fn theorem1_reflection_inside_sums(
        n in 1u32..=6,
        rs in prop::collection::vec(arb_rat(), 1..=3),
        xs in prop::collection::vec(arb_rat(), 1..=3),
    ) {
        let m = rs.len().min(xs.len());
        let p = Theorem1Params::<RatRing>::new(n, rs[..m].to_vec(), xs[..m].to_vec()).unwrap();
        let (_, rhs) = theorem1_sides(&RatRing, &p);
        prop_assert_eq!(rhs, theorem1_rhs_reflected(&RatRing, &p));
    }

    // the m=2 instance of the main theorem, instantiated at
    // (r_1, r_2) = (s, t), (x_1, x_2) = (1-y, x), reproduces the bracket
    // identity term by term: left = r [s t; x y]_n and
    // right = -s [t r; y z]_n - t [r s; z x]_n with t = n-r-s, z = 1-x-y
    #[test]
    fn theorem1_m2_reduces_to_bracket(
        n in 1u32..=8,
        r in arb_rat(),
        s in arb_rat(),
        x in arb_rat(),
        y in arb_rat(),
    ) {
        let ring = RatRing;
        let t = int(i64::from(n)) - &r - &s;
        let z = int(1) - &x - &y;
        let p = Theorem1Params::<RatRing>::new(
            n,
            vec![s.clone(), t.clone()],
            vec![int(1) - &y, x.clone()],
        )
        .unwrap();
        let (left, right) = theorem1_sides(&ring, &p);
        prop_assert_eq!(left, &r * bracket_sum(&ring, &s, &t, &x, &y, n));
        let expect = -(&s * bracket_sum(&ring, &t, &r, &y, &z, n))
            - &t * bracket_sum(&ring, &r, &s, &z, &x, n);
        prop_assert_eq!(right, expect);
        // and the combination itself vanishes
        prop_assert_eq!(sun_pan_combination(&ring, n, &r, &s, &x, &y), Rat::zero());
    }

    // symbolic => numeric consistency: evaluating the symbolic bracket
    // combination at random rational points gives exactly the numeric value
    #[test]
    fn symbolic_evaluates_to_numeric(
        n in 1u32..=5,
        r in arb_rat(),
        s in arb_rat(),
        x in arb_rat(),
        y in arb_rat(),
    ) {
        let ring = PolyRing::new(["r", "s", "x", "y"]);
        let sym = sun_pan_combination(
            &ring, n,
            &ring.var(0), &ring.var(1), &ring.var(2), &ring.var(3),
        );
        let point = [r.clone(), s.clone(), x.clone(), y.clone()];
        let via_poly = sym.eval(&point).unwrap();
        let direct = sun_pan_combination(&RatRing, n, &r, &s, &x, &y);
        prop_assert_eq!(via_poly, direct);
    }

    // B_n applied through a polynomial ring then evaluated equals direct
    // rational evaluation
    #[test]
    fn bernoulli_eval_in_consistent(n in 0u32..=12, x in arb_rat()) {
        let ring = PolyRing::new(["x"]);
        let sym = bernoulli_eval_in(&ring, n, &ring.var(0));
        prop_assert_eq!(sym.eval(std::slice::from_ref(&x)).unwrap(), bernoulli_eval(n, &x));
    }

    // the symbolic difference of the main theorem's sides vanishes at every
    // rational point (it is the zero polynomial, but this checks the
    // evaluation route independently)
    #[test]
    fn theorem1_symbolic_difference_evaluates_to_zero(
        n in 1u32..=3,
        point in prop::collection::vec(arb_rat(), 4),
    ) {
        let ring = PolyRing::new(["r1", "r2", "x1", "x2"]);
        let p = Theorem1Params::<PolyRing>::new(
            n,
            vec![ring.var(0), ring.var(1)],
            vec![ring.var(2), ring.var(3)],
        )
        .unwrap();
        let (lhs, rhs) = theorem1_sides(&ring, &p);
        let diff = &lhs - &rhs;
        prop_assert!(diff.is_zero());
        prop_assert_eq!(diff.eval(&point).unwrap(), Rat::zero());
    }
}
