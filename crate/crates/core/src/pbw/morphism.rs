use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::scalars::Scalar;

use super::{Gamma, Monomial, NcPoly, PbwError, Presentation};

/// Outcome of a relation-by-relation check; `failures` lists each broken
/// relation as `label: lhs != rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphismCheck {
    pub ok: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

/// A relation `lhs = rhs` to be checked inside one presentation.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: NcPoly,
    pub rhs: NcPoly,
}

pub fn verify_relations(relations: &[Relation]) -> Result<MorphismCheck, PbwError> {
    let mut failures = Vec::new();
    for r in relations {
        if r.lhs != r.rhs {
            let diff = r.lhs.try_sub(&r.rhs)?;
            failures.push(format!("{}: difference {diff}", r.label));
        }
    }
    Ok(MorphismCheck {
        ok: failures.is_empty(),
        checked: relations.len(),
        failures,
    })
}

/// True iff the generator images satisfy every rule of `src` (pairs without a
/// rule must commute) after normalization in the target presentation.
pub fn verify_morphism(src: &Presentation, images: &[NcPoly]) -> Result<MorphismCheck, PbwError> {
    let n = src.ngens();
    if images.len() != n {
        return Err(PbwError::InvalidPresentation(format!(
            "{} images for {n} generators",
            images.len()
        )));
    }
    let mut relations = Vec::new();
    for hi in 0..n {
        for lo in 0..hi {
            let lhs = images[hi].nc_mul(&images[lo])?;
            let swapped = images[lo].nc_mul(&images[hi])?;
            let rhs = match src.rule(hi, lo) {
                Some(rule) => {
                    let mut rhs = swapped.scale(&rule.constant)?;
                    for (m, c) in &rule.tail {
                        let img = NcPoly::substitute_monomial(m, images)?;
                        rhs = rhs.try_add(&img.scale(c)?)?;
                    }
                    rhs
                }
                None => swapped,
            };
            relations.push(Relation {
                label: format!("{}·{}", src.generators()[hi], src.generators()[lo]),
                lhs,
                rhs,
            });
        }
    }
    verify_relations(&relations)
}

fn gens(pres: &Arc<Presentation>) -> (NcPoly, NcPoly) {
    (
        NcPoly::generator_named(pres, "u").expect("u"),
        NcPoly::generator_named(pres, "d").expect("d"),
    )
}

/// The two cubic defining relations of `A(alpha, beta, gamma)` with
/// `alpha = lambda + mu`, `beta = -lambda mu`, evaluated on `U = u`, `D = d`.
pub fn defining_relations(
    pres: &Arc<Presentation>,
    lambda: &Scalar,
    mu: &Scalar,
    gamma: Gamma,
) -> Result<Vec<Relation>, PbwError> {
    let (u, d) = gens(pres);
    let alpha = lambda.try_add(mu)?;
    let beta = lambda.try_mul(mu)?.neg_ref();
    let g = gamma.scalar();
    let rel = |label: &str, x: &NcPoly, y: &NcPoly| -> Result<Relation, PbwError> {
        // y x^2 = alpha x y x + beta x^2 y + gamma x
        let lhs = y.nc_mul(x)?.nc_mul(x)?;
        let rhs = x
            .nc_mul(y)?
            .nc_mul(x)?
            .scale(&alpha)?
            .try_add(&x.nc_mul(x)?.nc_mul(y)?.scale(&beta)?)?
            .try_add(&x.scale(&g)?)?;
        Ok(Relation {
            label: label.into(),
            lhs,
            rhs,
        })
    };
    // the mirror relation D^2 U = alpha DUD + beta UD^2 + gamma D
    let (lhs2, rhs2) = {
        let lhs = d.nc_mul(&d)?.nc_mul(&u)?;
        let rhs = d
            .nc_mul(&u)?
            .nc_mul(&d)?
            .scale(&alpha)?
            .try_add(&u.nc_mul(&d)?.nc_mul(&d)?.scale(&beta)?)?
            .try_add(&d.scale(&g)?)?;
        (lhs, rhs)
    };
    Ok(vec![
        rel("DU^2 = alpha UDU + beta U^2D + gamma U", &u, &d)?,
        Relation {
            label: "D^2U = alpha DUD + beta UD^2 + gamma D".into(),
            lhs: lhs2,
            rhs: rhs2,
        },
    ])
}

/// Generalized Weyl algebra relations over `K[x, y]` with
/// `phi(x) = y`, `phi(y) = alpha y + beta x + gamma`, `a = x`, evaluated on
/// `X+ = d`, `X- = u`, `x = ud`, `y = du`.
pub fn gwa_relations(
    pres: &Arc<Presentation>,
    lambda: &Scalar,
    mu: &Scalar,
    gamma: Gamma,
) -> Result<Vec<Relation>, PbwError> {
    let (u, d) = gens(pres);
    let alpha = lambda.try_add(mu)?;
    let beta = lambda.try_mul(mu)?.neg_ref();
    let g = NcPoly::constant(pres, gamma.scalar());
    let x = u.nc_mul(&d)?;
    let y = d.nc_mul(&u)?;
    let phi_y = y.scale(&alpha)?.try_add(&x.scale(&beta)?)?.try_add(&g)?;
    let binv = beta.try_inv()?;
    let phi_inv_x = y
        .try_sub(&x.scale(&alpha)?)?
        .try_sub(&g)?
        .scale(&binv)?;
    let rel = |label: &str, lhs: NcPoly, rhs: NcPoly| Relation {
        label: label.into(),
        lhs,
        rhs,
    };
    Ok(vec![
        rel("X-X+ = a", u.nc_mul(&d)?, x.clone()),
        rel("X+X- = phi(a)", d.nc_mul(&u)?, y.clone()),
        rel("X+ x = phi(x) X+", d.nc_mul(&x)?, y.nc_mul(&d)?),
        rel("X+ y = phi(y) X+", d.nc_mul(&y)?, phi_y.nc_mul(&d)?),
        rel("X- y = phi^-1(y) X-", u.nc_mul(&y)?, x.nc_mul(&u)?),
        rel("X- x = phi^-1(x) X-", u.nc_mul(&x)?, phi_inv_x.nc_mul(&u)?),
        rel("xy = yx", x.nc_mul(&y)?, y.nc_mul(&x)?),
    ])
}

/// A random element with at most `nterms` terms of total degree at most
/// `max_degree`, and with exponent of generator `i` at most `caps[i]`.
pub fn random_poly<R: Rng>(
    pres: &Arc<Presentation>,
    max_degree: u32,
    nterms: usize,
    caps: Option<&[u32]>,
    rng: &mut R,
) -> NcPoly {
    let pool: Vec<Monomial> = Monomial::all_up_to(pres.ngens(), max_degree)
        .into_iter()
        .filter(|m| caps.is_none_or(|c| m.exps().iter().zip(c).all(|(e, k)| e <= k)))
        .collect();
    let mut out = NcPoly::zero(pres);
    for _ in 0..nterms {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        let c = random_coefficient(rng);
        out = &out + &NcPoly::monomial(pres, m, c);
    }
    out
}

/// Small coefficients from ℚ(lambda, mu): nonzero integers, halves, and
/// lambda or mu to a small power.
pub fn random_coefficient<R: Rng>(rng: &mut R) -> Scalar {
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    match rng.gen_range(0..5) {
        0 | 1 => Scalar::int(n),
        2 => Scalar::ratio(n, 2),
        3 => &Scalar::int(n) * &Scalar::lambda(),
        _ => &Scalar::int(n) * &Scalar::mu().pow(rng.gen_range(-1..=1)).expect("mu"),
    }
}

/// `d_degree(fg) <= d_degree(f) + d_degree(g)` for random `f` of d-degree at
/// most `p` and `g` of d-degree at most `q`, both of total degree at most `bound`.
pub fn filtration_check<R: Rng>(
    pres: &Arc<Presentation>,
    p: u32,
    q: u32,
    bound: u32,
    samples: usize,
    rng: &mut R,
) -> Result<bool, PbwError> {
    let caps = |k: u32| -> Vec<u32> {
        pres.generators()
            .iter()
            .map(|g| if g == "d" { k } else { u32::MAX })
            .collect()
    };
    let (cp, cq) = (caps(p), caps(q));
    for _ in 0..samples {
        let f = random_poly(pres, bound, 3, Some(&cp), rng);
        let g = random_poly(pres, bound, 3, Some(&cq), rng);
        if f.d_degree() > p || g.d_degree() > q {
            return Ok(false);
        }
        if f.nc_mul(&g)?.d_degree() > f.d_degree() + g.d_degree() {
            return Ok(false);
        }
    }
    Ok(true)
}
