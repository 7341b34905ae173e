//! Right ideals: division with remainder, kernels `{f : r f in zS}`,
//! generation certificates and normal elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::parse::parse_poly;
use crate::pbw::{make_downup, make_tilde, Gamma, Monomial, NcPoly, PbwError, Presentation};
use crate::scalars::{nullspace, rank, solve_linear_system, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("a right ideal needs at least one generator")]
    EmptyGenerators,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("degree bound {bound} is below the required degree {needed}")]
    BoundTooSmall { needed: u32, bound: u32 },
    #[error("`{0}` is not a generator symbol")]
    UnknownSymbol(String),
}

/// Nonzero generators of a right ideal, all over one presentation.
#[derive(Clone, Debug)]
pub struct RightIdealGens {
    gens: Vec<NcPoly>,
}

impl RightIdealGens {
    pub fn new(gens: Vec<NcPoly>) -> Result<Self, IdealError> {
        let first = gens.first().ok_or(IdealError::EmptyGenerators)?;
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                return Err(IdealError::ZeroGenerator(i));
            }
            if g.presentation().signature() != first.presentation().signature() {
                return Err(PbwError::PresentationMismatch(format!(
                    "generator {i} lives in {}",
                    g.presentation().name()
                ))
                .into());
            }
        }
        Ok(RightIdealGens { gens })
    }

    pub fn gens(&self) -> &[NcPoly] {
        &self.gens
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.gens[0].presentation()
    }
}

/// `f = sum g_i q_i + remainder`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    pub quotients: Vec<NcPoly>,
    pub remainder: NcPoly,
}

/// Full right division: every term of the remainder is divisible by no
/// `lexp(g_i)`. When several generators apply, the lowest index is used.
pub fn right_divide(f: &NcPoly, gens: &RightIdealGens) -> Result<ReductionResult, IdealError> {
    let pres = gens.presentation();
    if f.presentation().signature() != pres.signature() {
        return Err(PbwError::PresentationMismatch(format!(
            "{} vs {}",
            f.presentation().name(),
            pres.name()
        ))
        .into());
    }
    let leads: Vec<Monomial> = gens
        .gens()
        .iter()
        .map(NcPoly::lexp)
        .collect::<Result<_, _>>()?;
    let mut quotients = vec![NcPoly::zero(pres); gens.gens().len()];
    let mut remainder = NcPoly::zero(pres);
    let mut p = f.clone();
    while let Ok((m, c)) = p.leading() {
        match leads.iter().position(|l| m.divisible_by(l)) {
            Some(i) => {
                let t = m.div_exps(&leads[i]);
                let gt = gens.gens()[i].mul_monomial(&t);
                let (gm, gc) = gt.leading()?;
                debug_assert_eq!(gm, m);
                let coef = c.try_div(&gc)?;
                p = p.try_sub(&gt.scale(&coef)?)?;
                quotients[i] = quotients[i].try_add(&NcPoly::monomial(pres, t, coef))?;
            }
            None => {
                let lt = NcPoly::monomial(pres, m, c);
                remainder = remainder.try_add(&lt)?;
                p = p.try_sub(&lt)?;
            }
        }
    }
    Ok(ReductionResult {
        quotients,
        remainder,
    })
}

/// `sum g_i q_i + remainder - f`, which must vanish.
pub fn reduction_defect(
    f: &NcPoly,
    gens: &RightIdealGens,
    res: &ReductionResult,
) -> Result<NcPoly, IdealError> {
    let mut acc = res.remainder.try_sub(f)?;
    for (g, q) in gens.gens().iter().zip(&res.quotients) {
        acc = acc.try_add(&g.nc_mul(q)?)?;
    }
    Ok(acc)
}

/// True iff no term of `h` is divisible by any generator's leading exponent.
pub fn is_reduced(h: &NcPoly, gens: &RightIdealGens) -> Result<bool, IdealError> {
    let leads: Vec<Monomial> = gens
        .gens()
        .iter()
        .map(NcPoly::lexp)
        .collect::<Result<_, _>>()?;
    Ok(h.terms().keys().all(|m| leads.iter().all(|l| !m.divisible_by(l))))
}

/// Basis of `{f : deg f <= bound, r f in z S}` with cofactors `r f = z q`.
#[derive(Clone, Debug, Serialize)]
pub struct KernelBasis {
    pub degree_bound: u32,
    pub r: NcPoly,
    pub z: String,
    pub basis: Vec<NcPoly>,
    pub cofactors: Vec<NcPoly>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn generator_index(pres: &Presentation, z: &str) -> Result<usize, IdealError> {
    pres.index_of(z)
        .ok_or_else(|| IdealError::UnknownSymbol(z.to_string()))
}

/// Sparse vectors over a shared, growing monomial index.
struct Coords {
    index: BTreeMap<Monomial, usize>,
}

impl Coords {
    fn new() -> Self {
        Coords {
            index: BTreeMap::new(),
        }
    }

    fn sparse(&mut self, f: &NcPoly) -> Vec<(usize, Scalar)> {
        f.terms()
            .iter()
            .map(|(m, c)| {
                let next = self.index.len();
                (*self.index.entry(m.clone()).or_insert(next), c.clone())
            })
            .collect()
    }

    fn dense(&self, sparse: &[Vec<(usize, Scalar)>]) -> Vec<Vec<Scalar>> {
        sparse
            .iter()
            .map(|s| {
                let mut v = vec![Scalar::zero(); self.index.len()];
                for (i, c) in s {
                    v[*i] = c.clone();
                }
                v
            })
            .collect()
    }
}

fn transpose(cols: &[Vec<Scalar>], nrows: usize) -> Vec<Vec<Scalar>> {
    (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

fn combine(pres: &Arc<Presentation>, monos: &[Monomial], v: &[Scalar]) -> NcPoly {
    let mut terms = crate::pbw::Terms::new();
    for (m, c) in monos.iter().zip(v) {
        if !c.is_zero() {
            terms.insert(m.clone(), c.clone());
        }
    }
    NcPoly::from_terms(pres, terms).expect("same presentation")
}

/// Kernel of `f -> remainder of r f modulo z`, over normal words of degree at
/// most `bound`. `{z}` is its own Gröbner basis (leading exponents add), so a
/// zero remainder is exactly membership in `zS`.
pub fn kernel_ideal_basis(r: &NcPoly, z: &str, bound: u32) -> Result<KernelBasis, IdealError> {
    let pres = r.presentation().clone();
    let zi = generator_index(&pres, z)?;
    let zg = RightIdealGens::new(vec![NcPoly::generator(&pres, zi)])?;
    let monos = Monomial::all_up_to(pres.ngens(), bound);
    let mut coords = Coords::new();
    let mut cols = Vec::with_capacity(monos.len());
    for m in &monos {
        let rm = r.mul_monomial(m);
        let red = right_divide(&rm, &zg)?;
        cols.push(coords.sparse(&red.remainder));
    }
    let nrows = coords.index.len();
    let matrix = transpose(&coords.dense(&cols), nrows);
    let null = nullspace(&matrix, monos.len())?;
    let mut basis = Vec::new();
    let mut cofactors = Vec::new();
    for v in null {
        let f = combine(&pres, &monos, &v);
        let red = right_divide(&r.nc_mul(&f)?, &zg)?;
        debug_assert!(red.remainder.is_zero());
        basis.push(f);
        cofactors.push(red.quotients.into_iter().next().expect("one generator"));
    }
    Ok(KernelBasis {
        degree_bound: bound,
        r: r.clone(),
        z: z.to_string(),
        basis,
        cofactors,
    })
}

/// Independent count: solves `r f - z q = 0` with both `f` (degree <= bound)
/// and `q` unknown, then projects onto `f`. Uses only products and linear algebra.
pub fn kernel_dimension_oracle(r: &NcPoly, z: &str, bound: u32) -> Result<usize, IdealError> {
    let pres = r.presentation().clone();
    let zi = generator_index(&pres, z)?;
    let zpoly = NcPoly::generator(&pres, zi);
    let rdeg = r.total_degree().unwrap_or(0);
    let fmonos = Monomial::all_up_to(pres.ngens(), bound);
    let qmonos = Monomial::all_up_to(pres.ngens(), (bound + rdeg).saturating_sub(1));
    let mut coords = Coords::new();
    let mut cols = Vec::new();
    for m in &fmonos {
        cols.push(coords.sparse(&r.mul_monomial(m)));
    }
    for m in &qmonos {
        cols.push(coords.sparse(&zpoly.mul_monomial(m).neg()));
    }
    let nrows = coords.index.len();
    let matrix = transpose(&coords.dense(&cols), nrows);
    let null = nullspace(&matrix, cols.len())?;
    let projected: Vec<Vec<Scalar>> = null.iter().map(|v| v[..fmonos.len()].to_vec()).collect();
    Ok(rank(&projected)?)
}

/// Dimension of the span of `{g m : deg g + deg m <= bound}`.
pub fn generated_dimension(gens: &RightIdealGens, bound: u32) -> Result<usize, IdealError> {
    let pres = gens.presentation();
    let mut coords = Coords::new();
    let mut vecs = Vec::new();
    for g in gens.gens() {
        let gd = g.lexp()?.degree();
        if gd > bound {
            continue;
        }
        for m in Monomial::all_up_to(pres.ngens(), bound - gd) {
            vecs.push(coords.sparse(&g.mul_monomial(&m)));
        }
    }
    Ok(rank(&coords.dense(&vecs))?)
}

/// True iff `r s + z t = 1` exactly.
pub fn verify_unimodular(r: &NcPoly, z: &NcPoly, s: &NcPoly, t: &NcPoly) -> Result<bool, IdealError> {
    let sum = r.nc_mul(s)?.try_add(&z.nc_mul(t)?)?;
    Ok(sum == NcPoly::one(r.presentation()))
}

/// `lhs = rhs` with explicit cofactors, serialized in canonical text.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub lhs: String,
    pub rhs: String,
    pub cofactors: Vec<String>,
    pub degree_bound: u32,
    pub verdict: bool,
}

/// Composite report for a candidate generating set of `{f : r f in zS}`.
#[derive(Clone, Debug, Serialize)]
pub struct StablyFreeReport {
    pub generator_certificates: Vec<Certificate>,
    pub kernel_dim: usize,
    pub generated_dim: usize,
    pub all_reduce_to_zero: bool,
    pub remainder_of_one: String,
    pub proper: bool,
    pub degree_bound: u32,
}

impl StablyFreeReport {
    pub fn passed(&self) -> bool {
        self.generator_certificates.iter().all(|c| c.verdict)
            && self.all_reduce_to_zero
            && self.kernel_dim == self.generated_dim
            && self.proper
    }
}

/// `r g = z q` for one generator, with the cofactor `q` from division by `z`.
pub fn membership_certificate(
    r: &NcPoly,
    z: &str,
    g: &NcPoly,
    bound: u32,
) -> Result<(Certificate, NcPoly), IdealError> {
    let pres = r.presentation();
    let zpoly = NcPoly::generator(pres, generator_index(pres, z)?);
    let rg = r.nc_mul(g)?;
    let red = right_divide(&rg, &RightIdealGens::new(vec![zpoly.clone()])?)?;
    let q = red.quotients.into_iter().next().expect("one generator");
    let verdict = red.remainder.is_zero() && zpoly.nc_mul(&q)? == rg;
    Ok((
        Certificate {
            lhs: rg.to_canonical(),
            rhs: format!("{z}*({q})"),
            cofactors: vec![q.to_canonical()],
            degree_bound: bound,
            verdict,
        },
        q,
    ))
}

pub fn verify_stably_free_ideal(
    r: &NcPoly,
    z: &str,
    gens: &RightIdealGens,
    bound: u32,
) -> Result<StablyFreeReport, IdealError> {
    let mut certs = Vec::new();
    for g in gens.gens() {
        certs.push(membership_certificate(r, z, g, bound)?.0);
    }
    let kernel = kernel_ideal_basis(r, z, bound)?;
    let mut all_zero = true;
    for f in &kernel.basis {
        if !right_divide(f, gens)?.remainder.is_zero() {
            all_zero = false;
        }
    }
    let one = NcPoly::one(r.presentation());
    let rem = right_divide(&one, gens)?.remainder;
    Ok(StablyFreeReport {
        generator_certificates: certs,
        kernel_dim: kernel.dim(),
        generated_dim: generated_dimension(gens, bound)?,
        all_reduce_to_zero: all_zero,
        proper: !rem.is_zero(),
        remainder_of_one: rem.to_canonical(),
        degree_bound: bound,
    })
}

/// The embedding `u -> u`, `w -> du - lambda ud` of `Ã(1)` into `A(1)`.
pub fn tilde_embedding_images() -> Vec<NcPoly> {
    let a1 = make_downup(Gamma::One);
    vec![
        parse_poly("u", &a1).expect("u"),
        parse_poly("d*u - lambda*u*d", &a1).expect("bracket"),
    ]
}

/// Image of an element of `Ã(1)` in `A(1)`.
pub fn embed_tilde(f: &NcPoly) -> Result<NcPoly, IdealError> {
    let images = tilde_embedding_images();
    let mut out = NcPoly::zero(images[0].presentation());
    for (m, c) in f.terms() {
        out = out.try_add(&NcPoly::substitute_monomial(m, &images)?.scale(c)?)?;
    }
    Ok(out)
}

/// Every element of `{f in A(1) : deg f <= bound, r f in wA}` reduces to zero
/// modulo the embedded generators, where `r` is the embedded `1 + u`.
pub fn extension_check(gens: &RightIdealGens, bound: u32) -> Result<bool, IdealError> {
    let embedded: Vec<NcPoly> = gens
        .gens()
        .iter()
        .map(embed_tilde)
        .collect::<Result<_, _>>()?;
    let egens = RightIdealGens::new(embedded)?;
    let a1 = egens.presentation().clone();
    let r = parse_poly("1 + u", &a1).map_err(|e| PbwError::InvalidPresentation(e.to_string()))?;
    let kernel = kernel_ideal_basis(&r, "w", bound)?;
    for f in &kernel.basis {
        if !right_divide(f, &egens)?.remainder.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank data for the map `(a_0, ..., a_m) -> sum a_l d^l` with `a_l` in `Ã(1)`
/// of degree at most `bound`.
#[derive(Clone, Debug, Serialize)]
pub struct LeftBasisReport {
    pub columns: usize,
    pub rank: usize,
    pub injective: bool,
}

pub fn left_basis_check(bound: u32, m: u32) -> Result<LeftBasisReport, IdealError> {
    let tilde = make_tilde(Gamma::One);
    let a1 = make_downup(Gamma::One);
    let d = NcPoly::generator_named(&a1, "d")?;
    let mut coords = Coords::new();
    let mut cols = Vec::new();
    for mono in Monomial::all_up_to(tilde.ngens(), bound) {
        let base = embed_tilde(&NcPoly::monomial(&tilde, mono, Scalar::one()))?;
        let mut img = base;
        for _ in 0..=m {
            cols.push(coords.sparse(&img));
            img = img.nc_mul(&d)?;
        }
    }
    let rk = rank(&coords.dense(&cols))?;
    Ok(LeftBasisReport {
        columns: cols.len(),
        rank: rk,
        injective: rk == cols.len(),
    })
}

/// Result of a normality test: `g z = z h_g` and `z g = h'_g z` for every generator.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    pub right_cofactors: Vec<Option<NcPoly>>,
    pub left_cofactors: Vec<Option<NcPoly>>,
    pub failing: Vec<String>,
}

fn solve_side(z: &NcPoly, target: &NcPoly, bound: u32, z_on_left: bool) -> Result<Option<NcPoly>, IdealError> {
    let pres = z.presentation();
    let monos = Monomial::all_up_to(pres.ngens(), bound);
    let mut coords = Coords::new();
    let mut cols = Vec::new();
    for m in &monos {
        let mp = NcPoly::monomial(pres, m.clone(), Scalar::one());
        let p = if z_on_left { z.nc_mul(&mp)? } else { mp.nc_mul(z)? };
        cols.push(coords.sparse(&p));
    }
    let rhs_sparse = coords.sparse(target);
    let nrows = coords.index.len();
    let matrix = transpose(&coords.dense(&cols), nrows);
    let rhs = coords.dense(&[rhs_sparse]).remove(0);
    let sol = solve_linear_system(&matrix, &rhs)?;
    Ok(sol.particular.map(|x| combine(pres, &monos, &x)))
}

/// Tests whether `z` is normal, solving for `h_g` of degree at most `bound`.
/// Leading exponents add, so `deg h_g = deg g`; a bound below that is an error.
pub fn is_normal(z: &NcPoly, bound: u32) -> Result<NormalityReport, IdealError> {
    if z.is_zero() {
        return Err(PbwError::ZeroPolynomial.into());
    }
    if bound < 1 {
        return Err(IdealError::BoundTooSmall { needed: 1, bound });
    }
    let pres = z.presentation();
    let mut right = Vec::new();
    let mut left = Vec::new();
    let mut failing = Vec::new();
    for (i, name) in pres.generators().iter().enumerate() {
        let g = NcPoly::generator(pres, i);
        let h = solve_side(z, &g.nc_mul(z)?, bound, true)?;
        let h2 = solve_side(z, &z.nc_mul(&g)?, bound, false)?;
        if h.is_none() {
            failing.push(format!("{name}·z not in zS"));
        }
        if h2.is_none() {
            failing.push(format!("z·{name} not in Sz"));
        }
        right.push(h);
        left.push(h2);
    }
    Ok(NormalityReport {
        normal: failing.is_empty(),
        right_cofactors: right,
        left_cofactors: left,
        failing,
    })
}

/// A kernel problem `{f : r f in zS}` with a candidate generating set.
#[derive(Clone, Debug)]
pub struct IdealInstance {
    pub label: &'static str,
    pub r: NcPoly,
    pub z: &'static str,
    pub gens: RightIdealGens,
}

fn must(src: &str, pres: &Arc<Presentation>) -> NcPoly {
    parse_poly(src, pres).expect("built-in expression parses")
}

/// `Ã(1)`, `r = 1 + u`, `z = w`, generators
/// `a = (w + 1/mu)(1 + u) - 1/mu` and `b = w^2 + w/mu`.
pub fn tilde_instance() -> IdealInstance {
    let t = make_tilde(Gamma::One);
    IdealInstance {
        label: "tilde",
        r: must("1 + u", &t),
        z: "w",
        gens: RightIdealGens::new(vec![
            must("(w + 1/mu)*(1 + u) - 1/mu", &t),
            must("w^2 + (1/mu)*w", &t),
        ])
        .expect("nonzero"),
    }
}

/// `A(0)`, `r = 1 + uw`, `z = d`, generators `a = d^2` and
/// `b = duw + (mu/lambda) w^2 + mu^2 d`.
pub fn downup_instance() -> IdealInstance {
    let a0 = make_downup(Gamma::Zero);
    IdealInstance {
        label: "downup",
        r: must("1 + u*w", &a0),
        z: "d",
        gens: RightIdealGens::new(vec![
            must("d^2", &a0),
            must("d*u*w + (mu/lambda)*w^2 + mu^2*d", &a0),
        ])
        .expect("nonzero"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dividing_a_generator() {
        let inst = tilde_instance();
        let a = inst.gens.gens()[0].clone();
        let res = right_divide(&a, &inst.gens).unwrap();
        assert!(res.remainder.is_zero());
        assert_eq!(res.quotients[0], NcPoly::one(a.presentation()));
        assert!(res.quotients[1].is_zero());
    }

    #[test]
    fn one_is_not_in_the_ideal() {
        let inst = tilde_instance();
        let one = NcPoly::one(inst.r.presentation());
        assert_eq!(right_divide(&one, &inst.gens).unwrap().remainder, one);
    }

    #[test]
    fn small_kernel_matches_oracle() {
        let inst = tilde_instance();
        let k = kernel_ideal_basis(&inst.r, "w", 2).unwrap();
        assert_eq!(k.dim(), kernel_dimension_oracle(&inst.r, "w", 2).unwrap());
        for (f, q) in k.basis.iter().zip(&k.cofactors) {
            let z = NcPoly::generator(f.presentation(), 1);
            assert_eq!(inst.r.nc_mul(f).unwrap(), z.nc_mul(q).unwrap());
        }
    }

    #[test]
    fn u_is_not_normal() {
        let a1 = make_downup(Gamma::One);
        let rep = is_normal(&NcPoly::generator(&a1, 0), 2).unwrap();
        assert!(!rep.normal);
        assert!(matches!(
            is_normal(&NcPoly::generator(&a1, 0), 0),
            Err(IdealError::BoundTooSmall { .. })
        ));
    }
}
