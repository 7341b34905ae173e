use downup::classify::{classify, ClassifyError};
use downup::parse::parse_scalar;
use downup::table::{build_table, TableError, TableFixture, EXPECTED_MARKDOWN};
use downup::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Bounds from rational parameters alone. Roots of unity are read off
/// `lambda/mu + mu/lambda = (alpha^2 + 2 beta) / (-beta)` and the discriminant.
fn oracle(a: &BigRational, b: &BigRational, g: &BigRational) -> (u32, u32, u32) {
    let one = q(1, 1);
    if a + b == one {
        return if !g.is_zero() {
            (2, 2, 3)
        } else if *b == one {
            // lambda = 1, mu = -1
            (3, 3, 4)
        } else {
            (3, 3, 3)
        };
    }
    let disc = a * a + q(4, 1) * b;
    if disc.is_zero() {
        return if *a == q(-2, 1) { (3, 2, 3) } else { (3, 2, 4) };
    }
    let trace = (a * a + q(2, 1) * b) / (-b);
    let ratio_unity = (-2..=2).any(|t| trace == q(t, 1));
    if g.is_zero() && !ratio_unity {
        (3, 2, 3)
    } else {
        (3, 2, 4)
    }
}

fn special() -> impl Strategy<Value = BigRational> {
    prop_oneof![
        prop::sample::select(vec![q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(-2, 1), q(1, 2)]),
        (-8i64..=8, 1i64..=3).prop_map(|(n, d)| q(n, d)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn classifier_matches_oracle(a in special(), b in special(), g in special()) {
        let s = |r: &BigRational| Scalar::Rat(r.clone());
        match classify(&s(&a), &s(&b), &s(&g)) {
            Err(ClassifyError::NonNoetherian(r)) => {
                prop_assert!(b.is_zero());
                prop_assert!(r.sr_lower.is_none() && r.sr_upper.is_none() && r.krull_dim.is_none());
            }
            Err(e) => prop_assert!(false, "{e}"),
            Ok(r) => {
                prop_assert!(!b.is_zero());
                let (k, lo, hi) = oracle(&a, &b, &g);
                prop_assert_eq!(r.krull_dim, Some(k));
                prop_assert_eq!((r.sr_lower, r.sr_upper), (Some(lo), Some(hi)));
                // invariants
                prop_assert!(lo >= 2 && lo <= hi && hi <= k + 1);
                prop_assert_eq!(r.exact, lo == hi);
                let roots = r.roots.as_ref().unwrap();
                prop_assert_eq!(roots.lambda.try_add(&roots.mu).unwrap(), s(&a));
                prop_assert_eq!(roots.lambda.try_mul(&roots.mu).unwrap(), s(&(-&b)));
                if &a + &b == q(1, 1) {
                    prop_assert!(roots.lambda.is_one());
                }
                prop_assert!(r.rule_trace.len() >= 3);
            }
        }
    }
}

fn bounds(a: &str, b: &str, g: &str) -> (Option<u32>, Option<u32>) {
    let p = |x: &str| parse_scalar(x).unwrap();
    let r = classify(&p(a), &p(b), &p(g)).unwrap();
    (r.sr_lower, r.sr_upper)
}

#[test]
fn named_algebras() {
    // sl2 enveloping algebra, Heisenberg enveloping algebra
    assert_eq!(bounds("2", "-1", "-2"), (Some(2), Some(3)));
    assert_eq!(bounds("2", "-1", "0"), (Some(3), Some(3)));
    // mu = -1 on the line alpha + beta = 1
    assert_eq!(bounds("0", "1", "0"), (Some(3), Some(4)));
    // double root -1
    assert_eq!(bounds("-2", "-1", "0"), (Some(2), Some(3)));
    assert_eq!(bounds("-2", "-1", "5"), (Some(2), Some(3)));
    // double root 2 is not a root of unity
    assert_eq!(bounds("4", "-4", "0"), (Some(2), Some(4)));
    // roots i, -i: ratio -1
    assert_eq!(bounds("0", "-1", "0"), (Some(2), Some(4)));
    // quadratic input: alpha = 2i, beta = 1 gives the double root i
    assert_eq!(bounds("2*sqrt(-1)", "1", "0"), (Some(2), Some(3)));
}

#[test]
fn table_rows_reproduce() {
    let fixture = TableFixture::load(None).unwrap();
    let rep = build_table(&fixture).unwrap();
    assert!(rep.all_match(), "{:?}", rep.mismatches());
    assert_eq!(rep.to_markdown(), EXPECTED_MARKDOWN);
    let exact: Vec<_> = rep.rows.iter().filter(|r| r.expected.0 == r.expected.1).collect();
    assert!(exact
        .iter()
        .any(|r| r.alpha == Scalar::int(2) && r.beta == Scalar::int(-1) && r.gamma.is_zero()));
    let families: std::collections::BTreeSet<_> = fixture.rows.iter().map(|r| r.family.as_str()).collect();
    for f in ["conformal", "hq", "hq_prime", "witten", "woronowicz"] {
        assert!(families.contains(f), "{f}");
    }
}

#[test]
fn tampered_fixture_is_reported() {
    let mut fixture = TableFixture::load(None).unwrap();
    fixture.rows[0].upper += 1;
    let rep = build_table(&fixture).unwrap();
    assert_eq!(rep.mismatches().len(), 1);
    assert!(rep.to_markdown().contains("| NO |"));

    let mut fixture = TableFixture::load(None).unwrap();
    let i = fixture.rows.iter().position(|r| r.family == "hq").unwrap();
    fixture.rows[i].alpha = "17".into();
    assert!(matches!(build_table(&fixture), Err(TableError::Row { .. })));
}

#[test]
fn invalid_fixture() {
    assert!(matches!(TableFixture::parse("{\"rows\": 3}"), Err(TableError::FixtureInvalid(_))));
}
