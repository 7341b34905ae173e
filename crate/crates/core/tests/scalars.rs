use downup::scalars::{char_roots, is_root_of_unity, QUADRATIC_ROOT_ORDERS};
use downup::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn quadratic(d: i64) -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)
        .prop_map(move |(a, ad, b, bd)| Scalar::quad(rat(a, ad), rat(b, bd), d))
}

/// Small polynomial in lambda, mu: c0 + c1 lambda + c2 mu + c3 lambda^i mu^j.
fn poly_lm() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, -5i64..=5, -5i64..=5, -3i64..=3, 0i64..=2, 0i64..=1).prop_map(
        |(c0, c1, c2, c3, i, j)| {
            let l = Scalar::lambda();
            let m = Scalar::mu();
            let t = Scalar::int(c3)
                .try_mul(&l.pow(i).unwrap())
                .unwrap()
                .try_mul(&m.pow(j).unwrap())
                .unwrap();
            Scalar::int(c0)
                .try_add(&Scalar::int(c1).try_mul(&l).unwrap())
                .unwrap()
                .try_add(&Scalar::int(c2).try_mul(&m).unwrap())
                .unwrap()
                .try_add(&t)
                .unwrap()
        },
    )
}

fn ratfunc() -> impl Strategy<Value = Scalar> {
    let dens = vec!["1", "lambda", "mu", "lambda*mu", "lambda - mu", "lambda + mu", "mu - 1", "1 - lambda*mu", "lambda^2"];
    (poly_lm(), prop::sample::select(dens), 1i64..=4).prop_map(|(n, d, k)| {
        let d = downup::parse::parse_scalar(d).unwrap();
        n.try_div(&d.try_mul(&Scalar::int(k)).unwrap()).unwrap()
    })
}

fn axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.try_add(b).unwrap(), b.try_add(a).unwrap());
    prop_assert_eq!(a.try_mul(b).unwrap(), b.try_mul(a).unwrap());
    prop_assert_eq!(
        a.try_add(b).unwrap().try_add(c).unwrap(),
        a.try_add(&b.try_add(c).unwrap()).unwrap()
    );
    prop_assert_eq!(
        a.try_mul(b).unwrap().try_mul(c).unwrap(),
        a.try_mul(&b.try_mul(c).unwrap()).unwrap()
    );
    prop_assert_eq!(
        a.try_mul(&b.try_add(c).unwrap()).unwrap(),
        a.try_mul(b).unwrap().try_add(&a.try_mul(c).unwrap()).unwrap()
    );
    prop_assert!(a.try_sub(a).unwrap().is_zero());
    prop_assert_eq!(a.try_add(&Scalar::zero()).unwrap(), a.clone());
    prop_assert_eq!(a.try_mul(&Scalar::one()).unwrap(), a.clone());
    if !a.is_zero() {
        prop_assert!(a.try_mul(&a.try_inv().unwrap()).unwrap().is_one());
        prop_assert_eq!(b.try_div(a).unwrap().try_mul(a).unwrap(), b.clone());
    } else {
        prop_assert!(a.try_inv().is_err());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn gaussian_field_axioms(a in quadratic(-1), b in quadratic(-1), c in quadratic(-1)) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn real_quadratic_field_axioms(a in quadratic(5), b in quadratic(5), c in quadratic(5)) {
        axioms(&a, &b, &c)?;
    }

    #[test]
    fn function_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        axioms(&a, &b, &c)?;
    }

    /// Specializing lambda, mu at rational points is a ring homomorphism.
    #[test]
    fn function_field_specialization(a in ratfunc(), b in ratfunc(), l in 2i64..9, m in -9i64..-1) {
        let (l, m) = (rat(l, 1), rat(m, 3));
        let ev = |s: &Scalar| match s {
            Scalar::Func(f) => f.eval(&l, &m),
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Quad(_) => None,
        };
        if let (Some(x), Some(y)) = (ev(&a), ev(&b)) {
            if let Some(s) = ev(&a.try_add(&b).unwrap()) {
                prop_assert_eq!(s, &x + &y);
            }
            if let Some(p) = ev(&a.try_mul(&b).unwrap()) {
                prop_assert_eq!(p, &x * &y);
            }
        }
    }

    #[test]
    fn mixed_quadratic_fields_are_rejected(a in 1i64..10, b in 1i64..10) {
        let x = Scalar::quad(rat(a, 1), rat(b, 1), 2);
        let y = Scalar::quad(rat(a, 1), rat(b, 1), 3);
        prop_assert!(x.try_add(&y).is_err());
        prop_assert!(x.try_mul(&Scalar::lambda()).is_err());
    }

    /// Roots satisfy Vieta: lambda + mu = alpha, lambda mu = -beta.
    #[test]
    fn characteristic_roots(a in rational(), b in rational()) {
        let r = char_roots(&a, &b).unwrap();
        prop_assert_eq!(r.lambda.try_add(&r.mu).unwrap(), a);
        prop_assert_eq!(r.lambda.try_mul(&r.mu).unwrap(), b.neg_ref());
    }

    /// The detector agrees with brute-force powers and never returns an order
    /// outside {1, 2, 3, 4, 6}.
    #[test]
    fn root_of_unity_orders(
        d in prop::sample::select(vec![-1i64, -3, 2, 3, 5, -7]),
        a in -4i64..=4, ad in 1i64..=2, b in -4i64..=4, bd in 1i64..=2,
    ) {
        let x = Scalar::quad(rat(a, ad), rat(b, bd), d);
        let brute = (1..=24).find(|&k| x.pow(k).map(|p| p.is_one()).unwrap_or(false));
        let got = is_root_of_unity(&x).unwrap();
        prop_assert_eq!(got.map(i64::from), brute);
        if let Some(k) = got {
            prop_assert!(QUADRATIC_ROOT_ORDERS.contains(&k));
        }
    }
}

#[test]
fn root_of_unity_representatives() {
    let cases = [
        ("1", Some(1)),
        ("-1", Some(2)),
        ("(-1 + sqrt(-3))/2", Some(3)),
        ("sqrt(-1)", Some(4)),
        ("(1 + sqrt(-3))/2", Some(6)),
        ("2", None),
        ("3/2", None),
        ("(1 + sqrt(5))/2", None),
    ];
    for (src, want) in cases {
        let x = downup::parse::parse_scalar(src).unwrap();
        assert_eq!(is_root_of_unity(&x).unwrap(), want, "{src}");
    }
}

#[test]
fn symbolic_root_test_is_unsupported() {
    assert!(is_root_of_unity(&Scalar::lambda()).is_err());
}
