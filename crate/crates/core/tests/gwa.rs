use downup::gwa::{
    eigenvector_check, fit_closed_form, ideal_orbit_check, lemma_l4_check, orbit_analysis,
    phi_apply, s_closed, s_seq, AffineAuto, CommPoly2, GwaError, Point, RecurrenceParams,
};
use downup::parse::parse_scalar;
use downup::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sc(r: &BigRational) -> Scalar {
    Scalar::Rat(r.clone())
}

/// Plain rational iteration of `s_n = a s_(n-1) + b s_(n-2) + g`.
fn oracle(a: &BigRational, b: &BigRational, g: &BigRational, s0: &BigRational, s1: &BigRational, n: usize) -> Vec<BigRational> {
    let mut v = vec![s0.clone(), s1.clone()];
    while v.len() <= n {
        let k = v.len();
        v.push(a * &v[k - 1] + b * &v[k - 2] + g);
    }
    v.truncate(n + 1);
    v
}

fn small() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn nonzero() -> impl Strategy<Value = BigRational> {
    small().prop_filter("nonzero", |r| *r != q(0, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// Closed form equals iteration for n <= 50 (homogeneous case).
    #[test]
    fn closed_form_homogeneous(a in small(), b in nonzero(), s0 in small(), s1 in small()) {
        let zero = q(0, 1);
        let p = RecurrenceParams::new(sc(&a), sc(&b), Scalar::zero(), sc(&s0), sc(&s1));
        match fit_closed_form(&p) {
            Ok(c) => {
                let want = oracle(&a, &b, &zero, &s0, &s1, 50);
                for (n, w) in want.iter().enumerate() {
                    prop_assert_eq!(s_closed(&c, n as u32).unwrap(), sc(w));
                    prop_assert_eq!(s_seq(&p, n).unwrap(), sc(w));
                }
            }
            Err(e) => prop_assert_eq!(e, GwaError::DegenerateRoots),
        }
    }

    /// Closed form with drift `gamma n / (2 - alpha)` when `alpha + beta = 1`.
    #[test]
    fn closed_form_with_drift(b in nonzero(), g in small(), s0 in small(), s1 in small()) {
        let a = q(1, 1) - &b;
        let p = RecurrenceParams::new(sc(&a), sc(&b), sc(&g), sc(&s0), sc(&s1));
        if let Ok(c) = fit_closed_form(&p) {
            for (n, w) in oracle(&a, &b, &g, &s0, &s1, 50).iter().enumerate() {
                prop_assert_eq!(s_closed(&c, n as u32).unwrap(), sc(w));
            }
        } else {
            // alpha = 2 forces beta = -1: a double root at 1
            prop_assert_eq!(a, q(2, 1));
        }
    }

    /// `phi^(-n) <x - s_0, y - s_1> = <x - s_n, y - s_(n+1)>` for n <= 10.
    #[test]
    fn orbit_ideals(a in small(), b in nonzero(), g in small(), s0 in small(), s1 in small()) {
        let phi = AffineAuto::new(sc(&a), sc(&b), sc(&g));
        let pt = Point::new(sc(&s0), sc(&s1));
        for n in 0..=10 {
            prop_assert!(ideal_orbit_check(&phi, &pt, n).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn eigenvectors(b in nonzero()) {
        let phi = AffineAuto::new(sc(&(q(1, 1) - &b)), sc(&b), Scalar::zero());
        prop_assert!(eigenvector_check(&phi).unwrap());
    }

    /// Off the line alpha + beta = 1 (or with gamma != 0) the first identity breaks.
    #[test]
    fn eigenvectors_need_the_line(a in small(), b in nonzero(), g in small()) {
        let on_line = &a + &b == q(1, 1) && g == q(0, 1);
        let phi = AffineAuto::new(sc(&a), sc(&b), sc(&g));
        prop_assert_eq!(eigenvector_check(&phi).unwrap(), on_line);
    }

    #[test]
    fn phi_inverse_round_trip(a in small(), b in nonzero(), g in small(), i in 0u32..3, j in 0u32..3) {
        let phi = AffineAuto::new(sc(&a), sc(&b), sc(&g));
        let f = CommPoly2::term(i, j, Scalar::one()).add(&CommPoly2::x()).unwrap();
        let there = phi_apply(&phi, &f, 2).unwrap();
        prop_assert_eq!(phi_apply(&phi, &there, -2).unwrap(), f);
    }
}

#[test]
fn doubling_recurrence() {
    // alpha = 3, beta = -2 (lambda = 1, mu = 2) from (0, 1): s_n = 2^n - 1
    let p = RecurrenceParams::new(Scalar::int(3), Scalar::int(-2), Scalar::zero(), Scalar::zero(), Scalar::one());
    for n in 0..=50usize {
        let want = (BigInt::from(1) << n) - 1;
        assert_eq!(s_seq(&p, n).unwrap(), Scalar::Rat(BigRational::from_integer(want)));
    }
}

#[test]
fn lemma_l4() {
    assert!(lemma_l4_check(&Scalar::int(2), &Scalar::one(), 50).unwrap());
    assert!(lemma_l4_check(&Scalar::ratio(1, 3), &Scalar::int(-2), 30).unwrap());
    assert!(matches!(lemma_l4_check(&Scalar::one(), &Scalar::one(), 5), Err(GwaError::PreconditionViolated(_))));
    assert!(matches!(lemma_l4_check(&Scalar::int(-1), &Scalar::one(), 5), Err(GwaError::PreconditionViolated(_))));
    let phi = AffineAuto::new(Scalar::int(3), Scalar::int(-2), Scalar::zero());
    let rep = orbit_analysis(&phi, &Point::new(Scalar::zero(), Scalar::one()), 50).unwrap();
    assert_eq!(rep.zero_x_hits, vec![0]);
    assert_eq!(rep.period, None);
}

#[test]
fn period_four_over_gaussian_rationals() {
    let phi = AffineAuto::new(Scalar::zero(), Scalar::int(-1), Scalar::zero());
    for (x, y) in [("1", "sqrt(-1)"), ("2 + sqrt(-1)", "3"), ("1", "0")] {
        let pt = Point::new(parse_scalar(x).unwrap(), parse_scalar(y).unwrap());
        assert_eq!(orbit_analysis(&phi, &pt, 12).unwrap().period, Some(4), "({x}, {y})");
    }
}

#[test]
fn singular_phi_is_not_invertible() {
    let phi = AffineAuto::new(Scalar::one(), Scalar::zero(), Scalar::zero());
    let pt = Point::new(Scalar::zero(), Scalar::zero());
    assert_eq!(ideal_orbit_check(&phi, &pt, 1), Err(GwaError::NotInvertible));
}
