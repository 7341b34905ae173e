use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalars::Scalar;

use super::presentation::{add_term, Terms};
use super::{Monomial, PbwError, Presentation};

/// A noncommutative polynomial in PBW normal form.
#[derive(Clone)]
pub struct NcPoly {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl PartialEq for NcPoly {
    fn eq(&self, o: &Self) -> bool {
        self.pres.signature() == o.pres.signature() && self.terms == o.terms
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly[{}]({self})", self.pres.name())
    }
}

impl NcPoly {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        NcPoly {
            pres: pres.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::constant(pres, Scalar::one())
    }

    pub fn constant(pres: &Arc<Presentation>, c: Scalar) -> Self {
        Self::monomial(pres, Monomial::one(pres.ngens()), c)
    }

    pub fn monomial(pres: &Arc<Presentation>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.len(), pres.ngens(), "monomial arity");
        let mut terms = Terms::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NcPoly {
            pres: pres.clone(),
            terms,
        }
    }

    pub fn generator(pres: &Arc<Presentation>, i: usize) -> Self {
        Self::monomial(pres, Monomial::generator(pres.ngens(), i), Scalar::one())
    }

    pub fn generator_named(pres: &Arc<Presentation>, symbol: &str) -> Result<Self, PbwError> {
        let i = pres.index_of(symbol).ok_or_else(|| {
            PbwError::PresentationMismatch(format!(
                "symbol `{symbol}` is not a generator of {}",
                pres.name()
            ))
        })?;
        Ok(Self::generator(pres, i))
    }

    /// Builds from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<I>(pres: &Arc<Presentation>, terms: I) -> Result<Self, PbwError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut out = Self::zero(pres);
        for (m, c) in terms {
            assert_eq!(m.len(), pres.ngens(), "monomial arity");
            out = out.try_add(&Self::monomial(pres, m, c))?;
        }
        Ok(out)
    }

    pub(crate) fn from_normal_terms(pres: &Arc<Presentation>, terms: Terms) -> Self {
        NcPoly {
            pres: pres.clone(),
            terms,
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Deglex-maximal monomial and its coefficient.
    pub fn leading(&self) -> Result<(Monomial, Scalar), PbwError> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(PbwError::ZeroPolynomial)
    }

    pub fn lexp(&self) -> Result<Monomial, PbwError> {
        Ok(self.leading()?.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Maximal exponent of generator `i` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exps()[i]).max().unwrap_or(0)
    }

    /// Maximal exponent of `d` (0 when the presentation has no `d`).
    pub fn d_degree(&self) -> u32 {
        self.pres.index_of("d").map_or(0, |i| self.degree_in(i))
    }

    fn check_same(&self, o: &NcPoly) -> Result<(), PbwError> {
        if Arc::ptr_eq(&self.pres, &o.pres) || self.pres.signature() == o.pres.signature() {
            Ok(())
        } else {
            Err(PbwError::PresentationMismatch(format!(
                "{} vs {}",
                self.pres.name(),
                o.pres.name()
            )))
        }
    }

    pub fn try_add(&self, o: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check_same(o)?;
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            match terms.get(m) {
                Some(a) => {
                    let s = a.try_add(c)?;
                    if s.is_zero() {
                        terms.remove(m);
                    } else {
                        terms.insert(m.clone(), s);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(NcPoly {
            pres: self.pres.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, o: &NcPoly) -> Result<NcPoly, PbwError> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            pres: self.pres.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<NcPoly, PbwError> {
        self.pres.check_coefficient(s)?;
        let mut terms = Terms::new();
        if !s.is_zero() {
            for (m, c) in &self.terms {
                terms.insert(m.clone(), c.try_mul(s)?);
            }
        }
        Ok(NcPoly {
            pres: self.pres.clone(),
            terms,
        })
    }

    /// `self · x_k`.
    pub fn mul_gen(&self, k: usize) -> NcPoly {
        NcPoly {
            pres: self.pres.clone(),
            terms: self.pres.mul_terms_gen(&self.terms, k),
        }
    }

    /// `self · m` for a normal word `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> NcPoly {
        let mut terms = self.terms.clone();
        for k in m.word() {
            terms = self.pres.mul_terms_gen(&terms, k);
        }
        NcPoly {
            pres: self.pres.clone(),
            terms,
        }
    }

    /// Normal form of the product `self · o`.
    pub fn nc_mul(&self, o: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check_same(o)?;
        let mut acc = Terms::new();
        for (m2, c2) in &o.terms {
            let part = self.mul_monomial(m2);
            for (m, c) in part.terms {
                let v = c.try_mul(c2)?;
                match acc.get(&m) {
                    Some(a) => {
                        let s = a.try_add(&v)?;
                        if s.is_zero() {
                            acc.remove(&m);
                        } else {
                            acc.insert(m, s);
                        }
                    }
                    None => add_term(&mut acc, m, v),
                }
            }
        }
        Ok(NcPoly {
            pres: self.pres.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, n: u32) -> Result<NcPoly, PbwError> {
        let mut out = NcPoly::one(&self.pres);
        for _ in 0..n {
            out = out.nc_mul(self)?;
        }
        Ok(out)
    }

    /// Product of the normal-word images: `x^e` with `x_i` replaced by `images[i]`.
    pub fn substitute_monomial(m: &Monomial, images: &[NcPoly]) -> Result<NcPoly, PbwError> {
        let pres = images[0].presentation().clone();
        let mut out = NcPoly::one(&pres);
        for k in m.word() {
            out = out.nc_mul(&images[k])?;
        }
        Ok(out)
    }

    /// Canonical text: terms in descending deglex order, `coeff*u^i*w^j*d^k`.
    pub fn to_canonical(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.pres.generators();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative_looking();
            let mag = if negative { c.neg_ref() } else { c.clone() };
            let body = if m.is_one() {
                mag.to_factor_string()
            } else if mag.is_one() {
                m.render(names)
            } else {
                format!("{}*{}", mag.to_factor_string(), m.render(names))
            };
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl serde::Serialize for NcPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical())
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, o: &NcPoly) -> NcPoly {
        self.try_add(o).expect("NcPoly addition")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, o: &NcPoly) -> NcPoly {
        self.try_sub(o).expect("NcPoly subtraction")
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, o: &NcPoly) -> NcPoly {
        self.nc_mul(o).expect("NcPoly product")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(self, o: NcPoly) -> NcPoly {
        &self + &o
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(self, o: NcPoly) -> NcPoly {
        &self - &o
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, o: NcPoly) -> NcPoly {
        &self * &o
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(&self)
    }
}

impl Mul<&Scalar> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, s: &Scalar) -> NcPoly {
        self.scale(s).expect("NcPoly scaling")
    }
}
