//! The verification suite: every explicit identity, ideal certificate and
//! dynamical claim, run with exact arithmetic and reported per check.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::classify::classify;
use crate::gwa::{
    eigenvector_check, fit_closed_form, ideal_orbit_check, lemma_l4_check, orbit_analysis,
    s_closed, s_prefix, AffineAuto, Point, RecurrenceParams,
};
use crate::ideals::{
    downup_instance, extension_check, generated_dimension, is_normal, kernel_dimension_oracle,
    left_basis_check, membership_certificate, right_divide, tilde_embedding_images,
    tilde_instance, verify_stably_free_ideal, verify_unimodular, IdealInstance, RightIdealGens,
};
use crate::parse::parse_poly;
use crate::pbw::{
    defining_relations, delta_by_commutator, filtration_check, gwa_relations, make_downup,
    make_downup_with, make_tilde, ore_tower, p_t, random_poly, rewrite_product,
    sigma_delta_eval, validate_leibniz, verify_morphism, verify_relations, Gamma, Monomial,
    NcPoly, OreData, OreStep, Presentation, Terms,
};
use crate::scalars::{is_root_of_unity, rank, Scalar};
use crate::table::{build_table, TableFixture};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Section3_1,
    Section3_2,
    Section4,
    Engine,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "section3_1", "section3_2", "section4", "engine"];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "section3_1" => Suite::Section3_1,
            "section3_2" => Suite::Section3_2,
            "section4" => Suite::Section4,
            "engine" => Suite::Engine,
            other => return Err(VerifyError::UnknownSuite(other.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::All => 0,
            Suite::Section3_1 => 1,
            Suite::Section3_2 => 2,
            Suite::Section4 => 3,
            Suite::Engine => 4,
        };
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (expected one of all, section3_1, section3_2, section4, engine)")]
    UnknownSuite(String),
    #[error("degree bound must be at least 2, got {0}")]
    BoundTooSmall(u32),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub citation: String,
    pub verdict: Verdict,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub suite: Suite,
    pub bound: u32,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn count(&self, v: fn(&Verdict) -> bool) -> usize {
        self.checks.iter().filter(|c| v(&c.verdict)).count()
    }

    pub fn failed(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match &c.verdict {
                Verdict::Pass => "PASS".to_string(),
                Verdict::Fail => "FAIL".to_string(),
                Verdict::Skipped { .. } => "SKIP".to_string(),
            };
            s.push_str(&format!("{tag:4}  {:<40} {:>6} ms  {}\n", c.id, c.ms, c.citation));
            if let Verdict::Skipped { reason } = &c.verdict {
                s.push_str(&format!("      theory: {reason}\n"));
            }
            if c.verdict == Verdict::Fail {
                s.push_str(&format!("      witness: {}\n", c.witness));
            }
        }
        s.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped (suite {}, bound {})\n",
            self.checks.len(),
            self.count(|v| *v == Verdict::Pass),
            self.count(|v| *v == Verdict::Fail),
            self.count(|v| matches!(v, Verdict::Skipped { .. })),
            self.suite,
            self.bound
        ));
        s
    }
}

enum Outcome {
    Pass(Value),
    Fail(Value),
    Skip(String),
}

fn judge(ok: bool, witness: Value) -> Outcome {
    if ok {
        Outcome::Pass(witness)
    } else {
        Outcome::Fail(witness)
    }
}

type Runner = Box<dyn Fn() -> Result<Outcome, String> + Send + Sync>;

struct CheckDef {
    id: String,
    citation: String,
    suite: Suite,
    run: Runner,
}

fn def<F>(suite: Suite, id: impl Into<String>, citation: &str, f: F) -> CheckDef
where
    F: Fn() -> Result<Outcome, String> + Send + Sync + 'static,
{
    CheckDef {
        id: id.into(),
        citation: citation.to_string(),
        suite,
        run: Box::new(f),
    }
}

fn theory(suite: Suite, id: &str, citation: &str, reason: &str) -> CheckDef {
    let reason = reason.to_string();
    def(suite, id, citation, move || Ok(Outcome::Skip(reason.clone())))
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn poly(src: &str, pres: &Arc<Presentation>) -> Result<NcPoly, String> {
    parse_poly(src, pres).map_err(err)
}

fn eq_witness(lhs: &NcPoly, rhs: &NcPoly) -> Result<(bool, Value), String> {
    let diff = lhs.try_sub(rhs).map_err(err)?;
    Ok((
        diff.is_zero(),
        json!({"lhs": lhs.to_canonical(), "rhs": rhs.to_canonical(), "difference": diff.to_canonical()}),
    ))
}

fn identity(lhs: &NcPoly, rhs: &NcPoly) -> Result<Outcome, String> {
    let (ok, w) = eq_witness(lhs, rhs)?;
    Ok(judge(ok, w))
}

/// Runs the checks of `suite` at degree bound `bound`, in parallel, sorted by id.
pub fn verify(suite: Suite, bound: u32) -> Result<VerificationReport, VerifyError> {
    if bound < 2 {
        return Err(VerifyError::BoundTooSmall(bound));
    }
    let defs: Vec<CheckDef> = all_checks(bound)
        .into_iter()
        .filter(|d| suite.includes(d.suite))
        .collect();
    let mut checks: Vec<CheckResult> = defs
        .par_iter()
        .map(|d| {
            let start = Instant::now();
            let (verdict, witness) = match (d.run)() {
                Ok(Outcome::Pass(w)) => (Verdict::Pass, w),
                Ok(Outcome::Fail(w)) => (Verdict::Fail, w),
                Ok(Outcome::Skip(reason)) => (Verdict::Skipped { reason }, Value::Null),
                Err(e) => (Verdict::Fail, json!({"error": e})),
            };
            CheckResult {
                id: d.id.clone(),
                citation: d.citation.clone(),
                verdict,
                witness,
                ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerificationReport {
        tool_version: TOOL_VERSION.to_string(),
        suite,
        bound,
        checks,
    })
}

/// Ids of all checks run by `suite`.
pub fn check_ids(suite: Suite, bound: u32) -> Vec<String> {
    let mut ids: Vec<String> = all_checks(bound)
        .into_iter()
        .filter(|d| suite.includes(d.suite))
        .map(|d| d.id)
        .collect();
    ids.sort();
    ids
}

fn all_checks(bound: u32) -> Vec<CheckDef> {
    let mut v = Vec::new();
    v.extend(section3_1(bound));
    v.extend(section3_2(bound));
    v.extend(section4());
    v.extend(engine(bound));
    v
}

fn kernel_check(inst: fn() -> IdealInstance, b: u32) -> Result<Outcome, String> {
    let inst = inst();
    let rep = verify_stably_free_ideal(&inst.r, inst.z, &inst.gens, b).map_err(err)?;
    let oracle = kernel_dimension_oracle(&inst.r, inst.z, b).map_err(err)?;
    let ok = rep.passed() && oracle == rep.kernel_dim;
    Ok(judge(
        ok,
        json!({
            "instance": inst.label,
            "kernel_dim": rep.kernel_dim,
            "oracle_dim": oracle,
            "generated_dim": rep.generated_dim,
            "all_reduce_to_zero": rep.all_reduce_to_zero,
            "remainder_of_one": rep.remainder_of_one,
            "certificates": rep.generator_certificates,
        }),
    ))
}

fn kernel_monotone(inst: fn() -> IdealInstance, bound: u32) -> Result<Outcome, String> {
    let inst = inst();
    let dims: Vec<usize> = (0..=bound)
        .map(|b| generated_dimension(&inst.gens, b).map_err(err))
        .collect::<Result<_, _>>()?;
    let ok = dims.windows(2).all(|w| w[0] <= w[1]);
    Ok(judge(ok, json!({"instance": inst.label, "generated_dims": dims})))
}

fn section3_1(bound: u32) -> Vec<CheckDef> {
    let s = Suite::Section3_1;
    let mut v = vec![
        def(s, "s31.delta_identity", "skew derivation of the tilde algebra: r + mu delta(r) = 1 for r = 1 + u", || {
            let t = make_tilde(Gamma::One);
            let ore = OreData::from_presentation(&t, 1).map_err(err)?;
            let r = poly("1 + u", &t)?;
            let (sig, del) = sigma_delta_eval(&ore, &r).map_err(err)?;
            let lhs = r.try_add(&del.scale(&Scalar::mu()).map_err(err)?).map_err(err)?;
            let (ok, mut w) = eq_witness(&lhs, &NcPoly::one(&t))?;
            w["sigma_r"] = json!(sig.to_canonical());
            w["delta_r"] = json!(del.to_canonical());
            let expect_delta = poly("-(1/mu)*u", &t)?;
            Ok(judge(ok && del == expect_delta, w))
        }),
        def(s, "s31.unimodular", "unimodular identity 1 = r(1 + mu w) + w(-mu sigma(r)) in the tilde algebra", || {
            let t = make_tilde(Gamma::One);
            let r = poly("1 + u", &t)?;
            let z = poly("w", &t)?;
            let s1 = poly("1 + mu*w", &t)?;
            let t1 = poly("-mu*((1/mu)*u + 1)", &t)?;
            let ok = verify_unimodular(&r, &z, &s1, &t1).map_err(err)?;
            Ok(judge(ok, json!({"r": r, "z": z, "s": s1, "t": t1})))
        }),
        def(s, "s31.ra_cofactor", "r a = w (u + 1)(u/mu + 1) lies in w Ã", || {
            let t = make_tilde(Gamma::One);
            let inst = tilde_instance();
            let lhs = inst.r.nc_mul(&inst.gens.gens()[0]).map_err(err)?;
            identity(&lhs, &poly("w*(u + 1)*((1/mu)*u + 1)", &t)?)
        }),
        def(s, "s31.rb_cofactor", "r b = w (w + u w / mu + 1/mu) lies in w Ã", || {
            let t = make_tilde(Gamma::One);
            let inst = tilde_instance();
            let lhs = inst.r.nc_mul(&inst.gens.gens()[1]).map_err(err)?;
            identity(&lhs, &poly("w*(w + (1/mu)*u*w + 1/mu)", &t)?)
        }),
        def(s, "s31.leading_monomials", "deglex leading monomials lm(a) = uw and lm(b) = w^2", || {
            let inst = tilde_instance();
            let names = inst.gens.presentation().generators().to_vec();
            let lm: Vec<String> = inst
                .gens
                .gens()
                .iter()
                .map(|g| g.lexp().map(|m| m.render(&names)))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            Ok(judge(lm == ["u*w", "w^2"], json!({"lm": lm})))
        }),
        def(s, "s31.properness", "the ideal generated by a, b is proper: 1 has remainder 1", || {
            let inst = tilde_instance();
            let one = NcPoly::one(inst.gens.presentation());
            let rem = right_divide(&one, &inst.gens).map_err(err)?.remainder;
            Ok(judge(rem == one, json!({"remainder_of_one": rem})))
        }),
        def(s, "s31.embedding", "u -> u, w -> du - lambda ud defines an algebra map from Ã into A", || {
            let images = tilde_embedding_images();
            let chk = verify_morphism(&make_tilde(Gamma::One), &images).map_err(err)?;
            Ok(judge(chk.ok, json!(chk)))
        }),
        def(s, "s31.embedding_independence", "the image of the basis u^i w^j is linearly independent in A", || {
            let t = make_tilde(Gamma::One);
            let monos = Monomial::all_up_to(2, 6);
            let mut imgs = Vec::new();
            for m in &monos {
                let f = NcPoly::monomial(&t, m.clone(), Scalar::one());
                imgs.push(crate::ideals::embed_tilde(&f).map_err(err)?);
            }
            let all: Vec<Monomial> = Monomial::all_up_to(3, 12);
            let vecs: Vec<Vec<Scalar>> = imgs
                .iter()
                .map(|g| all.iter().map(|m| g.coefficient(m)).collect())
                .collect();
            let rk = rank(&vecs).map_err(err)?;
            let no_d = imgs.iter().all(|g| g.d_degree() == 0);
            Ok(judge(rk == monos.len() && no_d, json!({"monomials": monos.len(), "rank": rk})))
        }),
        def(s, "s31.left_basis", "powers of d form a basis of A as an Ã-module (injectivity at bound 4, m = 4)", || {
            let rep = left_basis_check(4, 4).map_err(err)?;
            Ok(judge(rep.injective, json!(rep)))
        }),
        def(s, "s31.extension", "K A = aA + bA: every f in A of degree <= 5 with (1+u)f in wA reduces to 0", || {
            let ok = extension_check(&tilde_instance().gens, 5).map_err(err)?;
            Ok(judge(ok, json!({"bound": 5})))
        }),
        def(s, "s31.kernel_monotone", "generated dimensions of aÃ + bÃ are non-decreasing in the degree bound", move || {
            kernel_monotone(tilde_instance, bound)
        }),
        theory(
            s,
            "s31.theory.non_free",
            "stably free right ideals from unimodular rows (Stafford): K = rS ∩ zS is stably free and not free",
            "freeness is not decided by this tool; the unimodular identity, kernel description and properness are the certified inputs",
        ),
    ];
    for b in 2..=bound {
        v.push(def(
            s,
            format!("s31.kernel.bound{b}"),
            "K = {f : (1+u) f in wÃ} equals aÃ + bÃ in every degree (oracle, span and reduction agree)",
            move || kernel_check(tilde_instance, b),
        ));
    }
    v
}

fn downup_ore() -> Result<(Arc<Presentation>, OreData), String> {
    let a0 = make_downup(Gamma::Zero);
    let ore = OreData::from_presentation(&a0, 2).map_err(err)?;
    Ok((a0, ore))
}

fn lambda_inv() -> Scalar {
    Scalar::lambda().try_inv().expect("lambda is nonzero")
}

fn section3_2(bound: u32) -> Vec<CheckDef> {
    let s = Suite::Section3_2;
    let mut v = vec![
        def(s, "s32.unimodular", "unimodular identity r(1 - uw) - delta(r)(lambda u^2 / mu^2) = 1 for r = 1 + uw", || {
            let (a0, ore) = downup_ore()?;
            let r = poly("1 + u*w", &a0)?;
            let del = ore.delta(&r).map_err(err)?;
            let expect = poly("-(1/(lambda*mu))*w^2", &a0)?;
            let lhs = r
                .nc_mul(&poly("1 - u*w", &a0)?)
                .map_err(err)?
                .try_sub(&del.nc_mul(&poly("(lambda/mu^2)*u^2", &a0)?).map_err(err)?)
                .map_err(err)?;
            let (ok, mut w) = eq_witness(&lhs, &NcPoly::one(&a0))?;
            w["delta_r"] = json!(del.to_canonical());
            Ok(judge(ok && del == expect, w))
        }),
        def(s, "s32.ra_cofactor", "r a lies in dA for a = d^2, with explicit cofactor", || {
            let (a0, _) = downup_ore()?;
            let inst = downup_instance();
            let a = &inst.gens.gens()[0];
            let (cert, q) = membership_certificate(&inst.r, "d", a, 2).map_err(err)?;
            let ra = inst.r.nc_mul(a).map_err(err)?;
            let d = poly("d", &a0)?;
            let displayed = poly(
                "(1/(mu^2*lambda^2))*d^2*u*w - (1/(lambda^2*mu^2) + 1/(lambda*mu^3))*d*w^2",
                &a0,
            )?;
            let gap = ra.try_sub(&displayed).map_err(err)?;
            let ok = cert.verdict && d.nc_mul(&q).map_err(err)? == ra;
            Ok(judge(
                ok,
                json!({
                    "certificate": cert,
                    "displayed_rhs": displayed.to_canonical(),
                    "r_a_minus_displayed_rhs": gap.to_canonical(),
                    "displayed_rhs_is_uw_times_a": displayed == poly("u*w*d^2", &a0)?,
                }),
            ))
        }),
        def(s, "s32.rb_cofactor", "r b = d (u^2 w^2 / lambda + (mu/lambda + 1) u w + mu^2) lies in dA", || {
            let (a0, _) = downup_ore()?;
            let inst = downup_instance();
            let lhs = inst.r.nc_mul(&inst.gens.gens()[1]).map_err(err)?;
            identity(
                &lhs,
                &poly("d*((1/lambda)*u^2*w^2 + (mu/lambda + 1)*u*w + mu^2)", &a0)?,
            )
        }),
        def(s, "s32.leading_monomials", "deglex leading monomials lm(a) = d^2 and lm(b) = uwd", || {
            let inst = downup_instance();
            let names = inst.gens.presentation().generators().to_vec();
            let lm: Vec<String> = inst
                .gens
                .gens()
                .iter()
                .map(|g| g.lexp().map(|m| m.render(&names)))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            Ok(judge(lm == ["d^2", "u*w*d"], json!({"lm": lm})))
        }),
        def(s, "s32.properness", "the ideal generated by a, b is proper: 1 has remainder 1", || {
            let inst = downup_instance();
            let one = NcPoly::one(inst.gens.presentation());
            let rem = right_divide(&one, &inst.gens).map_err(err)?.remainder;
            Ok(judge(rem == one, json!({"remainder_of_one": rem})))
        }),
        def(s, "s32.delta_powers", "delta(u^t) = -p_t u^(t-1) w / lambda and delta(u^t w) = -p_t u^(t-1) w^2 / (lambda mu), 1 <= t <= 20", || {
            let (a0, ore) = downup_ore()?;
            let li = lambda_inv();
            let mu = Scalar::mu();
            let u = NcPoly::generator(&a0, 0);
            let w = NcPoly::generator(&a0, 1);
            let mut failures = Vec::new();
            for t in 1..=20u32 {
                let pt = p_t(&li, &mu, t);
                let ut = u.pow(t).map_err(err)?;
                let base = u.pow(t - 1).map_err(err)?.nc_mul(&w).map_err(err)?;
                let e1 = base.scale(&li.try_mul(&pt).map_err(err)?.neg_ref()).map_err(err)?;
                let utw = ut.nc_mul(&w).map_err(err)?;
                let c2 = li.try_mul(&mu.try_inv().map_err(err)?).map_err(err)?.try_mul(&pt).map_err(err)?;
                let e2 = base.nc_mul(&w).map_err(err)?.scale(&c2.neg_ref()).map_err(err)?;
                for (label, f, e) in [("u^t", &ut, &e1), ("u^t*w", &utw, &e2)] {
                    let leib = ore.delta(f).map_err(err)?;
                    let comm = delta_by_commutator(&ore, f).map_err(err)?;
                    if leib != *e || comm != *e {
                        failures.push(format!("{label} at t = {t}"));
                    }
                }
            }
            Ok(judge(failures.is_empty(), json!({"t_max": 20, "failures": failures})))
        }),
        def(s, "s32.p_t_recursion", "p_(t+1) - p_t = lambda^(-t) mu^t for p_t = sum_(s<t) (mu/lambda)^s, t <= 20", || {
            let li = lambda_inv();
            let mu = Scalar::mu();
            let mut bad = Vec::new();
            for t in 0..=20u32 {
                let diff = p_t(&li, &mu, t + 1).try_sub(&p_t(&li, &mu, t)).map_err(err)?;
                let expect = li
                    .pow(t as i64)
                    .map_err(err)?
                    .try_mul(&mu.pow(t as i64).map_err(err)?)
                    .map_err(err)?;
                if diff != expect {
                    bad.push(t);
                }
            }
            Ok(judge(bad.is_empty(), json!({"t_max": 20, "failures": bad})))
        }),
        def(s, "s32.ore_tower_iso", "K[u][w; theta][d; sigma, delta] maps onto A(alpha, beta, 0) by u -> u, w -> du - lambda ud, d -> d", || {
            let a0 = make_downup(Gamma::Zero);
            let tower = l2_tower().map_err(err)?;
            let images = vec![poly("u", &a0)?, poly("d*u - lambda*u*d", &a0)?, poly("d", &a0)?];
            let chk = verify_morphism(&tower, &images).map_err(err)?;
            Ok(judge(chk.ok, json!({"tower": tower.name(), "check": chk})))
        }),
        def(s, "s32.ore_data", "sigma(u) = u/lambda, sigma(w) = w/mu, delta(u) = -w/lambda, delta(w) = 0", || {
            let (a0, ore) = downup_ore()?;
            let li = lambda_inv();
            let mi = Scalar::mu().try_inv().map_err(err)?;
            let u = NcPoly::generator(&a0, 0);
            let w = NcPoly::generator(&a0, 1);
            let du = ore.delta(&u).map_err(err)?;
            let dw = ore.delta(&w).map_err(err)?;
            let ok = ore.sigma == vec![li.clone(), mi] && du == w.scale(&li.neg_ref()).map_err(err)? && dw.is_zero();
            Ok(judge(ok, json!({"sigma": ore.sigma, "delta_u": du, "delta_w": dw})))
        }),
        def(s, "s32.kernel_monotone", "generated dimensions of aA + bA are non-decreasing in the degree bound", move || {
            kernel_monotone(downup_instance, bound)
        }),
        theory(
            s,
            "s32.theory.non_free",
            "stably free right ideals from unimodular rows (Stafford): K = rA ∩ dA is stably free and not free",
            "freeness is not decided by this tool; the unimodular identity, kernel description and properness are the certified inputs",
        ),
    ];
    for b in 2..=bound {
        v.push(def(
            s,
            format!("s32.kernel.bound{b}"),
            "K = {f : (1+uw) f in dA} equals aA + bA in every degree (oracle, span and reduction agree)",
            move || kernel_check(downup_instance, b),
        ));
    }
    v
}

/// `K[u][w; theta][d; sigma, delta]` with the skew data of `A(alpha, beta, 0)`.
pub fn l2_tower() -> Result<Arc<Presentation>, crate::pbw::PbwError> {
    let li = lambda_inv();
    let mi = Scalar::mu().try_inv()?;
    let mut delta_u = Terms::new();
    delta_u.insert(Monomial::new(vec![0, 1, 0]), li.neg_ref());
    ore_tower(
        "tower",
        "u",
        &[
            OreStep {
                name: "w".into(),
                sigma: vec![mi.clone()],
                delta: vec![Terms::new()],
            },
            OreStep {
                name: "d".into(),
                sigma: vec![li, mi],
                delta: vec![delta_u, Terms::new()],
            },
        ],
    )
}

fn rand_rat<R: Rng>(rng: &mut R, nonzero: bool) -> Scalar {
    loop {
        let n = rng.gen_range(-6i64..=6);
        let d = rng.gen_range(1i64..=4);
        if !(nonzero && n == 0) {
            return Scalar::ratio(n, d);
        }
    }
}

fn closed_form_samples(count: usize, seed: u64) -> Vec<RecurrenceParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let alpha = rand_rat(&mut rng, false);
        let beta = rand_rat(&mut rng, true);
        let sum_one = out.len() % 2 == 1;
        let (alpha, gamma) = if sum_one {
            (Scalar::one().try_sub(&beta).expect("rational"), rand_rat(&mut rng, false))
        } else {
            (alpha, Scalar::zero())
        };
        let p = RecurrenceParams::new(alpha, beta, gamma, rand_rat(&mut rng, false), rand_rat(&mut rng, false));
        if fit_closed_form(&p).is_ok() {
            out.push(p);
        }
    }
    out
}

fn section4() -> Vec<CheckDef> {
    let s = Suite::Section4;
    vec![
        def(s, "s4.closed_form", "s_n = c1 lambda^n + c2 mu^n + gamma n/(2 - alpha) agrees with the recurrence for n <= 50 (20 parameter sets)", || {
            let mut bad = Vec::new();
            for (i, p) in closed_form_samples(20, 7).iter().enumerate() {
                let c = fit_closed_form(p).map_err(err)?;
                let seq = s_prefix(p, 50).map_err(err)?;
                for (n, sn) in seq.iter().enumerate() {
                    if s_closed(&c, n as u32).map_err(err)? != *sn {
                        bad.push(json!({"sample": i, "n": n}));
                        break;
                    }
                }
            }
            Ok(judge(bad.is_empty(), json!({"samples": 20, "n_max": 50, "failures": bad})))
        }),
        def(s, "s4.eigenvectors", "phi(beta x + y) = beta x + y and phi(y - x) = -beta (y - x) when alpha + beta = 1, gamma = 0 (100 samples)", || {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let mut bad = Vec::new();
            let mut n = 0;
            while n < 100 {
                let beta = rand_rat(&mut rng, true);
                if beta == Scalar::int(-1) {
                    continue;
                }
                let alpha = Scalar::one().try_sub(&beta).map_err(err)?;
                let phi = AffineAuto::new(alpha, beta.clone(), Scalar::zero());
                if !eigenvector_check(&phi).map_err(err)? {
                    bad.push(beta.to_string());
                }
                n += 1;
            }
            Ok(judge(bad.is_empty(), json!({"samples": 100, "failures": bad})))
        }),
        def(s, "s4.orbit_ideal", "phi^(-n) <x - s_0, y - s_1> = <x - s_n, y - s_(n+1)> for n <= 10 (20 samples)", || {
            let mut rng = ChaCha8Rng::seed_from_u64(13);
            let mut bad = Vec::new();
            for i in 0..20 {
                let phi = AffineAuto::new(rand_rat(&mut rng, false), rand_rat(&mut rng, true), rand_rat(&mut rng, false));
                let p = Point::new(rand_rat(&mut rng, false), rand_rat(&mut rng, false));
                for n in 0..=10 {
                    if !ideal_orbit_check(&phi, &p, n).map_err(err)? {
                        bad.push(json!({"sample": i, "n": n}));
                    }
                }
            }
            Ok(judge(bad.is_empty(), json!({"samples": 20, "n_max": 10, "failures": bad})))
        }),
        def(s, "s4.lemma_l4", "with lambda = 1, s_0 = 0, s_1 = s: s_n = s(1 - mu^n)/(1 - mu) is never 0 for mu = 2, s = 1, n <= 50", || {
            let ok = lemma_l4_check(&Scalar::int(2), &Scalar::one(), 50).map_err(err)?;
            Ok(judge(ok, json!({"mu": "2", "s": "1", "N": 50})))
        }),
        def(s, "s4.lemma_l4_orbit", "alpha + beta = 1, gamma = 0, mu = 2: the orbit of (0, 1) meets x = 0 only at n = 0 (horizon 50)", || {
            let phi = AffineAuto::new(Scalar::int(3), Scalar::int(-2), Scalar::zero());
            let rep = orbit_analysis(&phi, &Point::new(Scalar::zero(), Scalar::one()), 50).map_err(err)?;
            Ok(judge(rep.zero_x_hits == [0] && rep.period.is_none(), json!({"zero_x_hits": rep.zero_x_hits, "period": rep.period, "horizon": 50})))
        }),
        def(s, "s4.period4", "alpha = 0, beta = -1 (roots i, -i): point orbits have period 4 over Q(sqrt(-1))", || {
            let phi = AffineAuto::new(Scalar::zero(), Scalar::int(-1), Scalar::zero());
            let i = Scalar::sqrt_int(-1);
            let mut periods = Vec::new();
            for p in [Point::new(Scalar::zero(), Scalar::one()), Point::new(Scalar::one(), i)] {
                periods.push(orbit_analysis(&phi, &p, 20).map_err(err)?.period);
            }
            Ok(judge(periods.iter().all(|p| *p == Some(4)), json!({"periods": periods})))
        }),
        def(s, "s4.defining_relations", "DU^2 = alpha UDU + beta U^2D + gamma U and D^2U = alpha DUD + beta UD^2 + gamma D hold in A", || {
            let mut out = Vec::new();
            let mut ok = true;
            for g in [Gamma::Zero, Gamma::One] {
                let rels = defining_relations(&make_downup(g), &Scalar::lambda(), &Scalar::mu(), g).map_err(err)?;
                let chk = verify_relations(&rels).map_err(err)?;
                ok &= chk.ok;
                out.push(chk);
            }
            Ok(judge(ok, json!(out)))
        }),
        def(s, "s4.gwa_relations", "A is the generalized Weyl algebra K[x, y](phi, x): X- X+ = x, X+ X- = phi(x) and the twisted commutations", || {
            let mut out = Vec::new();
            let mut ok = true;
            for g in [Gamma::Zero, Gamma::One] {
                let rels = gwa_relations(&make_downup(g), &Scalar::lambda(), &Scalar::mu(), g).map_err(err)?;
                let chk = verify_relations(&rels).map_err(err)?;
                ok &= chk.ok && chk.checked == 7;
                out.push(chk);
            }
            Ok(judge(ok, json!(out)))
        }),
        def(s, "s4.normal_symbolic", "w = DU - mu UD is a normal element of A(alpha, beta, 0)", || {
            let a0 = make_downup(Gamma::Zero);
            let z = poly("d*u - mu*u*d", &a0)?;
            let rep = is_normal(&z, 1).map_err(err)?;
            Ok(judge(rep.normal, json!({"z": z, "failing": rep.failing, "right_cofactors": rep.right_cofactors})))
        }),
        def(s, "s4.normal_lambda_one", "with lambda = 1, w = DU - UD is a normal element of A(alpha, beta, 0)", || {
            let a = make_downup_with(Scalar::one(), Scalar::mu(), Gamma::Zero).map_err(err)?;
            let z = poly("d*u - u*d", &a)?;
            let rep = is_normal(&z, 1).map_err(err)?;
            Ok(judge(rep.normal, json!({"z": z, "failing": rep.failing, "right_cofactors": rep.right_cofactors})))
        }),
        def(s, "s4.not_normal_u", "u is not normal in A(alpha, beta, 1): d u = lambda u d + w and w is not in uA", || {
            let a1 = make_downup(Gamma::One);
            let rep = is_normal(&poly("u", &a1)?, 1).map_err(err)?;
            Ok(judge(!rep.normal, json!({"failing": rep.failing})))
        }),
        def(s, "s4.omega_simplification", "(beta(lambda - 1) UD + lambda(lambda - 1) DU)/(lambda^2 - lambda) = DU - mu UD", || {
            let a0 = make_downup(Gamma::Zero);
            let lhs = poly(
                "(1/(lambda^2 - lambda))*((-lambda*mu)*(lambda - 1)*u*d + lambda*(lambda - 1)*d*u)",
                &a0,
            )?;
            identity(&lhs, &poly("d*u - mu*u*d", &a0)?)
        }),
        def(s, "s4.table", "every witness row of the stable-rank table is reproduced by the classifier", || {
            let rep = build_table(&TableFixture::load(None).map_err(err)?).map_err(err)?;
            let bad: Vec<String> = rep.mismatches().iter().map(|r| format!("{} [{}]", r.algebra, r.condition)).collect();
            Ok(judge(bad.is_empty(), json!({"rows": rep.rows.len(), "mismatches": bad})))
        }),
        def(s, "s4.stafford_bound", "2 <= sr_lower <= sr_upper <= Kdim + 1 on 500 random rational parameters (Stafford: sr <= Kdim + 1)", || {
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            let mut bad = Vec::new();
            for _ in 0..500 {
                let (a, b, g) = (rand_rat(&mut rng, false), rand_rat(&mut rng, true), rand_rat(&mut rng, false));
                match classify(&a, &b, &g) {
                    Ok(r) => {
                        let (lo, hi, k) = (r.sr_lower.unwrap_or(0), r.sr_upper.unwrap_or(0), r.krull_dim.unwrap_or(0));
                        if !(2 <= lo && lo <= hi && hi <= k + 1) {
                            bad.push(format!("({a}, {b}, {g})"));
                        }
                    }
                    Err(e) => bad.push(format!("({a}, {b}, {g}): {e}")),
                }
            }
            Ok(judge(bad.is_empty(), json!({"samples": 500, "failures": bad})))
        }),
        theory(
            s,
            "s4.theory.psf",
            "every finitely generated projective A-module is stably free (PSF) for beta != 0",
            "a theorem on projective modules; not an experiment and not computed here",
        ),
        theory(
            s,
            "s4.theory.stable_rank",
            "stable range theorems (Stafford: sr <= Kdim + 1, Kmax variant; Suslin: sr(K[x,y]) = 3)",
            "the stable rank itself is never computed; the classifier applies these theorems as rules",
        ),
    ]
}

fn presentations() -> Vec<Arc<Presentation>> {
    vec![make_downup(Gamma::Zero), make_downup(Gamma::One), make_tilde(Gamma::One)]
}

fn engine(bound: u32) -> Vec<CheckDef> {
    let s = Suite::Engine;
    let deg = bound.min(3);
    let mut v = Vec::new();
    for (k, pres) in presentations().into_iter().enumerate() {
        let name = pres.name().to_string();
        let p1 = pres.clone();
        v.push(def(s, format!("eng.assoc.{name}"), "associativity (fg)h = f(gh) on 200 random triples", move || {
            let mut rng = ChaCha8Rng::seed_from_u64(100 + k as u64);
            for i in 0..200 {
                let f = random_poly(&p1, deg, 3, None, &mut rng);
                let g = random_poly(&p1, deg, 3, None, &mut rng);
                let h = random_poly(&p1, deg, 3, None, &mut rng);
                let l = f.nc_mul(&g).and_then(|x| x.nc_mul(&h)).map_err(err)?;
                let r = f.nc_mul(&g.nc_mul(&h).map_err(err)?).map_err(err)?;
                if l != r {
                    return Ok(Outcome::Fail(json!({"sample": i, "f": f, "g": g, "h": h})));
                }
            }
            Ok(Outcome::Pass(json!({"triples": 200, "max_degree": deg})))
        }));
        let p2 = pres.clone();
        v.push(def(s, format!("eng.lexp.{name}"), "leading exponents add: lexp(fg) = lexp(f) + lexp(g) on 300 random pairs", move || {
            let mut rng = ChaCha8Rng::seed_from_u64(200 + k as u64);
            let mut n = 0;
            while n < 300 {
                let f = random_poly(&p2, deg, 3, None, &mut rng);
                let g = random_poly(&p2, deg, 3, None, &mut rng);
                if f.is_zero() || g.is_zero() {
                    continue;
                }
                n += 1;
                let fg = f.nc_mul(&g).map_err(err)?;
                let (lf, lg) = (f.lexp().map_err(err)?, g.lexp().map_err(err)?);
                if fg.is_zero() || fg.lexp().map_err(err)? != lf.mul_exps(&lg) {
                    return Ok(Outcome::Fail(json!({"f": f, "g": g, "fg": fg})));
                }
            }
            Ok(Outcome::Pass(json!({"pairs": 300})))
        }));
        let p3 = pres.clone();
        v.push(def(s, format!("eng.rewrite.{name}"), "memoized products agree with naive word rewriting on 50 random pairs", move || {
            let mut rng = ChaCha8Rng::seed_from_u64(300 + k as u64);
            for _ in 0..50 {
                let f = random_poly(&p3, deg, 2, None, &mut rng);
                let g = random_poly(&p3, deg, 2, None, &mut rng);
                if f.nc_mul(&g).map_err(err)? != rewrite_product(&f, &g).map_err(err)? {
                    return Ok(Outcome::Fail(json!({"f": f, "g": g})));
                }
            }
            Ok(Outcome::Pass(json!({"pairs": 50})))
        }));
        let p4 = pres.clone();
        v.push(def(s, format!("eng.roundtrip.{name}"), "canonical text parses back to the same element (200 samples)", move || {
            let mut rng = ChaCha8Rng::seed_from_u64(400 + k as u64);
            for _ in 0..200 {
                let f = random_poly(&p4, deg, 4, None, &mut rng);
                let back = parse_poly(&f.to_canonical(), &p4).map_err(err)?;
                if back != f {
                    return Ok(Outcome::Fail(json!({"f": f, "parsed": back})));
                }
            }
            Ok(Outcome::Pass(json!({"samples": 200})))
        }));
    }
    v.push(def(s, "eng.filtration", "d-degree filtration: F_p F_q lies in F_(p+q) for (p, q) <= (4, 4)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(500);
        let mut bad = Vec::new();
        for g in [Gamma::Zero, Gamma::One] {
            let pres = make_downup(g);
            for p in 0..=4 {
                for q in 0..=4 {
                    if !filtration_check(&pres, p, q, 4, 8, &mut rng).map_err(err)? {
                        bad.push(format!("{} ({p}, {q})", pres.name()));
                    }
                }
            }
        }
        Ok(judge(bad.is_empty(), json!({"pairs_per_cell": 8, "failures": bad})))
    }));
    v.push(def(s, "eng.sigma_delta", "f d = d sigma(f) + delta(f) and the twisted Leibniz rule on 100 random elements of K[u][w]", || {
        let (a0, ore) = downup_ore()?;
        let mut rng = ChaCha8Rng::seed_from_u64(600);
        let caps = [u32::MAX, u32::MAX, 0];
        let d = NcPoly::generator(&a0, 2);
        let mut pairs = Vec::new();
        for _ in 0..100 {
            let f = random_poly(&a0, 3, 3, Some(&caps), &mut rng);
            let g = random_poly(&a0, 3, 3, Some(&caps), &mut rng);
            let (sf, df) = sigma_delta_eval(&ore, &f).map_err(err)?;
            let lhs = f.nc_mul(&d).map_err(err)?;
            let rhs = d.nc_mul(&sf).map_err(err)?.try_add(&df).map_err(err)?;
            if lhs != rhs {
                return Ok(Outcome::Fail(json!({"f": f})));
            }
            pairs.push((f, g));
        }
        let ok = validate_leibniz(&ore, &pairs).map_err(err)?;
        Ok(judge(ok, json!({"samples": 100})))
    }));
    v.push(def(s, "eng.roots_of_unity", "root-of-unity orders 1, 2, 3, 4, 6 detected exactly; 2, 3/2, (1 + sqrt 5)/2 rejected", || {
        let half = Scalar::ratio(1, 2);
        let w3 = Scalar::sqrt_int(-3).try_mul(&half).map_err(err)?.try_sub(&half).map_err(err)?;
        let w6 = Scalar::sqrt_int(-3).try_mul(&half).map_err(err)?.try_add(&half).map_err(err)?;
        let golden = Scalar::sqrt_int(5).try_add(&Scalar::one()).map_err(err)?.try_mul(&half).map_err(err)?;
        let cases = [
            (Scalar::one(), Some(1)),
            (Scalar::int(-1), Some(2)),
            (w3, Some(3)),
            (Scalar::sqrt_int(-1), Some(4)),
            (w6, Some(6)),
            (Scalar::int(2), None),
            (Scalar::ratio(3, 2), None),
            (golden, None),
        ];
        let mut got = Vec::new();
        let mut ok = true;
        for (x, want) in &cases {
            let o = is_root_of_unity(x).map_err(err)?;
            ok &= o == *want;
            got.push(json!({"x": x, "order": o}));
        }
        Ok(judge(ok, json!(got)))
    }));
    v.push(def(s, "eng.division", "right division: f = sum g_i q_i + h exactly with h reduced (200 random cases per presentation)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(700);
        for pres in presentations() {
            for _ in 0..200 {
                let gens: Vec<NcPoly> = (0..2)
                    .map(|_| random_poly(&pres, 2, 2, None, &mut rng))
                    .filter(|g| !g.is_zero())
                    .collect();
                let Ok(gens) = RightIdealGens::new(gens) else { continue };
                let f = random_poly(&pres, 4, 4, None, &mut rng);
                let red = right_divide(&f, &gens).map_err(err)?;
                let mut back = red.remainder.clone();
                for (g, q) in gens.gens().iter().zip(&red.quotients) {
                    back = back.try_add(&g.nc_mul(q).map_err(err)?).map_err(err)?;
                }
                if back != f || !crate::ideals::is_reduced(&red.remainder, &gens).map_err(err)? {
                    return Ok(Outcome::Fail(json!({"f": f, "gens": gens.gens()})));
                }
            }
        }
        Ok(Outcome::Pass(json!({"cases_per_presentation": 200})))
    }));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().to_string(), n);
        }
        assert!("section9".parse::<Suite>().is_err());
    }

    #[test]
    fn bound_below_two_is_rejected() {
        assert_eq!(verify(Suite::Engine, 1).unwrap_err(), VerifyError::BoundTooSmall(1));
    }

    #[test]
    fn ids_are_unique() {
        let ids = check_ids(Suite::All, 6);
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
    }
}
