use std::sync::Arc;

use downup::parse::parse_poly;
use downup::pbw::{
    defining_relations, delta_by_commutator, filtration_check, gwa_relations, make_downup,
    make_downup_with, make_tilde, p_t, random_poly, rewrite_product, sigma_delta_eval, validate_leibniz,
    verify_morphism, verify_relations, Gamma, NcPoly, OreData, Presentation,
};
use downup::verify::l2_tower;
use downup::Scalar;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn presentations() -> Vec<Arc<Presentation>> {
    vec![make_downup(Gamma::Zero), make_downup(Gamma::One), make_tilde(Gamma::One)]
}

fn sample(pres: &Arc<Presentation>, seed: u64, deg: u32, n: usize) -> Vec<NcPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_poly(pres, deg, 3, None, &mut rng)).collect()
}

fn poly(src: &str, pres: &Arc<Presentation>) -> NcPoly {
    parse_poly(src, pres).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity(seed in any::<u64>()) {
        for pres in presentations() {
            let v = sample(&pres, seed, 3, 3);
            let l = v[0].nc_mul(&v[1]).unwrap().nc_mul(&v[2]).unwrap();
            let r = v[0].nc_mul(&v[1].nc_mul(&v[2]).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn canonical_text_round_trips(seed in any::<u64>()) {
        for pres in presentations() {
            let f = &sample(&pres, seed, 3, 1)[0];
            prop_assert_eq!(&parse_poly(&f.to_canonical(), &pres).unwrap(), f);
        }
    }

    #[test]
    fn distributivity(seed in any::<u64>()) {
        for pres in presentations() {
            let v = sample(&pres, seed, 2, 3);
            let l = v[0].nc_mul(&(&v[1] + &v[2])).unwrap();
            let r = &v[0].nc_mul(&v[1]).unwrap() + &v[0].nc_mul(&v[2]).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Domain property: leading exponents add.
    #[test]
    fn leading_exponents_add(seed in any::<u64>()) {
        for pres in presentations() {
            let v = sample(&pres, seed, 3, 2);
            if v[0].is_zero() || v[1].is_zero() {
                continue;
            }
            let fg = v[0].nc_mul(&v[1]).unwrap();
            prop_assert!(!fg.is_zero());
            prop_assert_eq!(fg.lexp().unwrap(), v[0].lexp().unwrap().mul_exps(&v[1].lexp().unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Memoized products agree with naive word rewriting.
    #[test]
    fn rewriting_agrees(seed in any::<u64>()) {
        for pres in presentations() {
            let v = sample(&pres, seed, 3, 2);
            prop_assert_eq!(v[0].nc_mul(&v[1]).unwrap(), rewrite_product(&v[0], &v[1]).unwrap());
        }
    }

    /// `f d = d sigma(f) + delta(f)` on `K[u][w]`, and delta agrees with the commutator.
    #[test]
    fn sigma_delta(seed in any::<u64>()) {
        let a0 = make_downup(Gamma::Zero);
        let ore = OreData::from_presentation(&a0, 2).unwrap();
        let d = NcPoly::generator(&a0, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let caps = [u32::MAX, u32::MAX, 0];
        let f = random_poly(&a0, 3, 3, Some(&caps), &mut rng);
        let g = random_poly(&a0, 3, 3, Some(&caps), &mut rng);
        let (sf, df) = sigma_delta_eval(&ore, &f).unwrap();
        prop_assert_eq!(f.nc_mul(&d).unwrap(), d.nc_mul(&sf).unwrap().try_add(&df).unwrap());
        prop_assert_eq!(delta_by_commutator(&ore, &f).unwrap(), df);
        prop_assert!(validate_leibniz(&ore, &[(f, g)]).unwrap());
    }
}

#[test]
fn filtration_up_to_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in [Gamma::Zero, Gamma::One] {
        let pres = make_downup(g);
        for p in 0..=4 {
            for q in 0..=4 {
                assert!(filtration_check(&pres, p, q, 4, 4, &mut rng).unwrap(), "({p}, {q})");
            }
        }
    }
}

#[test]
fn commutation_rules() {
    let a1 = make_downup(Gamma::One);
    for (src, want) in [
        ("d*u", "lambda*u*d + w"),
        ("w*u", "mu*u*w + u"),
        ("d*w", "mu*w*d + d"),
    ] {
        assert_eq!(poly(src, &a1), poly(want, &a1), "{src}");
    }
    let a0 = make_downup(Gamma::Zero);
    assert_eq!(poly("w*u", &a0), poly("mu*u*w", &a0));
    let t = make_tilde(Gamma::One);
    assert_eq!(poly("w*u", &t), poly("mu*u*w + u", &t));
}

#[test]
fn ore_data_of_the_down_up_algebra() {
    let a0 = make_downup(Gamma::Zero);
    let ore = OreData::from_presentation(&a0, 2).unwrap();
    let lambda_inv = Scalar::lambda().try_inv().unwrap();
    assert_eq!(ore.sigma, vec![lambda_inv.clone(), Scalar::mu().try_inv().unwrap()]);
    let u = poly("u", &a0);
    assert_eq!(ore.delta(&u).unwrap(), poly("-(1/lambda)*w", &a0));
    assert!(ore.delta(&poly("w", &a0)).unwrap().is_zero());
    // delta(u^t) = -p_t u^(t-1) w / lambda with p_t = sum_{s<t} (mu/lambda)^s
    let ratio = Scalar::mu().try_div(&Scalar::lambda()).unwrap();
    for t in 1..=12u32 {
        let mut p = Scalar::zero();
        for s in 0..t {
            p = p.try_add(&ratio.pow(s as i64).unwrap()).unwrap();
        }
        assert_eq!(p_t(&lambda_inv, &Scalar::mu(), t), p, "p_{t}");
        let lhs = ore.delta(&u.pow(t).unwrap()).unwrap();
        let rhs = poly(&format!("u^{}*w", t - 1), &a0)
            .scale(&p.try_mul(&lambda_inv).unwrap().neg_ref())
            .unwrap();
        assert_eq!(lhs, rhs, "t = {t}");
    }
}

#[test]
fn morphisms() {
    let a1 = make_downup(Gamma::One);
    let images = vec![poly("u", &a1), poly("d*u - lambda*u*d", &a1)];
    assert!(verify_morphism(&make_tilde(Gamma::One), &images).unwrap().ok);
    let tower = l2_tower().unwrap();
    let a0 = make_downup(Gamma::Zero);
    let imgs = vec![poly("u", &a0), poly("d*u - lambda*u*d", &a0), poly("d", &a0)];
    assert!(verify_morphism(&tower, &imgs).unwrap().ok);
}

#[test]
fn downup_relations_hold() {
    for gamma in [Gamma::Zero, Gamma::One] {
        let pres = make_downup(gamma);
        let (l, m) = (Scalar::lambda(), Scalar::mu());
        let rel = verify_relations(&defining_relations(&pres, &l, &m, gamma).unwrap()).unwrap();
        assert!(rel.ok, "{:?}", rel.failures);
        let gwa = verify_relations(&gwa_relations(&pres, &l, &m, gamma).unwrap()).unwrap();
        assert!(gwa.ok, "{:?}", gwa.failures);
    }
    // numeric roots: A(5/2, -1, 1) with lambda = 2, mu = 1/2
    let (l, m) = (Scalar::int(2), Scalar::ratio(1, 2));
    let pres = make_downup_with(l.clone(), m.clone(), Gamma::One).unwrap();
    let rel = verify_relations(&defining_relations(&pres, &l, &m, Gamma::One).unwrap()).unwrap();
    assert!(rel.ok && rel.checked == 2, "{:?}", rel.failures);
}
