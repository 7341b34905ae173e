use std::sync::Arc;

use serde::Serialize;

use crate::scalars::Scalar;

use super::presentation::{Rule, Terms};
use super::{Monomial, NcPoly, PbwError, Presentation};

/// Which side the coefficients sit on in the Ore commutation rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OreConvention {
    /// `r·x = x·sigma(r) + delta(r)`
    RightSigma,
}

/// Diagonal automorphism and sigma-derivation of one Ore step, `R[x; sigma, delta]`,
/// where `R` is spanned by the generators below `top`.
#[derive(Clone, Debug)]
pub struct OreData {
    pub top: usize,
    /// `sigma(x_i) = sigma[i] · x_i`
    pub sigma: Vec<Scalar>,
    /// `delta(x_i)`, expressed over the generators below `top`
    pub delta: Vec<Terms>,
    pub convention: OreConvention,
}

impl OreData {
    /// Reads sigma and delta off the rules `x_top·x_i -> c x_i x_top + tail`:
    /// `sigma(x_i) = c^{-1} x_i`, `delta(x_i) = -c^{-1} tail`.
    pub fn from_presentation(pres: &Presentation, top: usize) -> Result<OreData, PbwError> {
        let mut sigma = Vec::new();
        let mut delta = Vec::new();
        for i in 0..top {
            let (c, tail) = match pres.rule(top, i) {
                Some(r) => (r.constant.clone(), r.tail.clone()),
                None => (Scalar::one(), Terms::new()),
            };
            if tail.keys().any(|m| m.exps()[top..].iter().any(|&e| e > 0)) {
                return Err(PbwError::NotInCoefficientRing(format!(
                    "tail of {}·{} involves the top variable",
                    pres.generators()[top],
                    pres.generators()[i]
                )));
            }
            let inv = c.try_inv()?;
            let neg_inv = inv.neg_ref();
            sigma.push(inv);
            delta.push(tail.into_iter().map(|(m, a)| (m, &a * &neg_inv)).collect());
        }
        Ok(OreData {
            top,
            sigma,
            delta,
            convention: OreConvention::RightSigma,
        })
    }

    fn check_coefficient(&self, f: &NcPoly) -> Result<(), PbwError> {
        for m in f.terms().keys() {
            if m.exps()[self.top..].iter().any(|&e| e > 0) {
                return Err(PbwError::NotInCoefficientRing(format!(
                    "{f} involves {} or a later generator",
                    f.presentation().generators()[self.top]
                )));
            }
        }
        Ok(())
    }

    /// `sigma(m)` for a word in the coefficient ring: a scalar multiple of `m`.
    fn sigma_mono(&self, m: &Monomial) -> Result<Scalar, PbwError> {
        let mut s = Scalar::one();
        for (i, &e) in m.exps()[..self.top].iter().enumerate() {
            if e > 0 {
                s = s.try_mul(&self.sigma[i].pow(i64::from(e))?)?;
            }
        }
        Ok(s)
    }

    pub fn sigma(&self, f: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check_coefficient(f)?;
        let mut out = NcPoly::zero(f.presentation());
        for (m, c) in f.terms() {
            out = out.try_add(&NcPoly::monomial(
                f.presentation(),
                m.clone(),
                c.try_mul(&self.sigma_mono(m)?)?,
            ))?;
        }
        Ok(out)
    }

    /// `delta` of a normal word via the twisted Leibniz rule
    /// `delta(w x) = delta(w) sigma(x) + w delta(x)`.
    fn delta_mono(&self, pres: &Arc<Presentation>, m: &Monomial) -> Result<NcPoly, PbwError> {
        let mut prefix = NcPoly::one(pres);
        let mut acc = NcPoly::zero(pres);
        for k in m.word() {
            let dx = NcPoly::from_normal_terms(pres, self.delta[k].clone());
            let sx = NcPoly::generator(pres, k).scale(&self.sigma[k])?;
            acc = acc.nc_mul(&sx)?.try_add(&prefix.nc_mul(&dx)?)?;
            prefix = prefix.mul_gen(k);
        }
        Ok(acc)
    }

    pub fn delta(&self, f: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check_coefficient(f)?;
        let pres = f.presentation();
        let mut out = NcPoly::zero(pres);
        for (m, c) in f.terms() {
            out = out.try_add(&self.delta_mono(pres, m)?.scale(c)?)?;
        }
        Ok(out)
    }
}

/// `(sigma(f), delta(f))`, with delta extended from the generator values by
/// the twisted Leibniz rule.
pub fn sigma_delta_eval(ore: &OreData, f: &NcPoly) -> Result<(NcPoly, NcPoly), PbwError> {
    Ok((ore.sigma(f)?, ore.delta(f)?))
}

/// `f·x - x·sigma(f)`, the value that `delta(f)` must equal by definition.
pub fn delta_by_commutator(ore: &OreData, f: &NcPoly) -> Result<NcPoly, PbwError> {
    let x = NcPoly::generator(f.presentation(), ore.top);
    f.nc_mul(&x)?.try_sub(&x.nc_mul(&ore.sigma(f)?)?)
}

/// `p_t(a, b) = sum_{s < t} (a b)^s`.
pub fn p_t(a: &Scalar, b: &Scalar, t: u32) -> Scalar {
    let ab = a * b;
    let mut acc = Scalar::zero();
    let mut pw = Scalar::one();
    for _ in 0..t {
        acc = &acc + &pw;
        pw = &pw * &ab;
    }
    acc
}

/// One Ore step for `ore_tower`: generator `name` adjoined with
/// `sigma(x_i) = sigma[i] x_i` and `delta(x_i) = delta[i]`.
#[derive(Clone, Debug)]
pub struct OreStep {
    pub name: String,
    pub sigma: Vec<Scalar>,
    pub delta: Vec<Terms>,
}

/// Builds the iterated Ore extension `K[x_0][x_1; sigma_1, delta_1]...` as a
/// presentation, turning each `x_i·x_t = x_t sigma(x_i) + delta(x_i)` into
/// the rule `x_t·x_i -> s^{-1} x_i x_t - s^{-1} delta(x_i)`.
pub fn ore_tower(name: &str, base: &str, steps: &[OreStep]) -> Result<Arc<Presentation>, PbwError> {
    let mut names = vec![base.to_string()];
    names.extend(steps.iter().map(|s| s.name.clone()));
    let n = names.len();
    let mut rules = Vec::new();
    for (t0, step) in steps.iter().enumerate() {
        let t = t0 + 1;
        if step.sigma.len() != t || step.delta.len() != t {
            return Err(PbwError::InvalidPresentation(format!(
                "step {} needs sigma and delta on {t} generators",
                step.name
            )));
        }
        for i in 0..t {
            let s = &step.sigma[i];
            let inv = s.try_inv()?;
            let neg_inv = inv.neg_ref();
            let mut tail = Terms::new();
            for (m, c) in &step.delta[i] {
                if m.len() != n {
                    return Err(PbwError::InvalidPresentation("delta arity".into()));
                }
                tail.insert(m.clone(), c.try_mul(&neg_inv)?);
            }
            if inv.is_one() && tail.is_empty() {
                continue;
            }
            rules.push(Rule {
                hi: t,
                lo: i,
                constant: inv,
                tail,
            });
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Presentation::new(name, &refs, rules)
}

/// Checks `delta(fg) = delta(f) sigma(g) + f delta(g)` on the given pairs,
/// where `delta` is the commutator definition.
pub fn validate_leibniz(ore: &OreData, pairs: &[(NcPoly, NcPoly)]) -> Result<bool, PbwError> {
    for (f, g) in pairs {
        let lhs = delta_by_commutator(ore, &f.nc_mul(g)?)?;
        let rhs = delta_by_commutator(ore, f)?
            .nc_mul(&ore.sigma(g)?)?
            .try_add(&f.nc_mul(&delta_by_commutator(ore, g)?)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
