//! `K[x, y]` with the affine automorphism `phi(x) = y`, `phi(y) = alpha y + beta x + gamma`,
//! the sequence `s_n` and orbits of points.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalars::{char_roots, is_root_of_unity, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GwaError {
    #[error("phi is not invertible when beta = 0")]
    NotInvertible,
    #[error("closed form needs distinct roots and alpha != 2")]
    DegenerateRoots,
    #[error("closed form with gamma != 0 needs alpha + beta = 1")]
    ClosedFormInapplicable,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `sum c_ij x^i y^j`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct CommPoly2 {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl CommPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(0, 0, c)
    }

    pub fn term(i: u32, j: u32, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        CommPoly2 { terms }
    }

    pub fn x() -> Self {
        Self::term(1, 0, Scalar::one())
    }

    pub fn y() -> Self {
        Self::term(0, 1, Scalar::one())
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self, ScalarError> {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            let s = match terms.get(k) {
                Some(a) => a.try_add(c)?,
                None => c.clone(),
            };
            if s.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, s);
            }
        }
        Ok(CommPoly2 { terms })
    }

    pub fn neg(&self) -> Self {
        CommPoly2 {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg_ref())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self, ScalarError> {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self, ScalarError> {
        let mut out = CommPoly2::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&CommPoly2::term(i, j, c.try_mul(s)?))?;
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, ScalarError> {
        let mut out = CommPoly2::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out = out.add(&CommPoly2::term(i + k, j + l, a.try_mul(b)?))?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self, ScalarError> {
        let mut out = CommPoly2::constant(Scalar::one());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn eval(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, ScalarError> {
        let mut acc = Scalar::zero();
        for (&(i, j), c) in &self.terms {
            let v = c
                .try_mul(&x.pow(i64::from(i))?)?
                .try_mul(&y.pow(i64::from(j))?)?;
            acc = acc.try_add(&v)?;
        }
        Ok(acc)
    }

    /// `f(px, py)`.
    pub fn substitute(&self, px: &CommPoly2, py: &CommPoly2) -> Result<Self, ScalarError> {
        let mut out = CommPoly2::zero();
        for (&(i, j), c) in &self.terms {
            out = out.add(&px.pow(i)?.mul(&py.pow(j)?)?.scale(c)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for CommPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut word = Vec::new();
            match i {
                0 => {}
                1 => word.push("x".to_string()),
                _ => word.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => word.push("y".to_string()),
                _ => word.push(format!("y^{j}")),
            }
            let neg = c.is_negative_looking();
            let mag = if neg { c.neg_ref() } else { c.clone() };
            let body = if word.is_empty() {
                mag.to_factor_string()
            } else if mag.is_one() {
                word.join("*")
            } else {
                format!("{}*{}", mag.to_factor_string(), word.join("*"))
            };
            let sep = match (first, neg) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `phi(x) = y`, `phi(y) = alpha y + beta x + gamma`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineAuto {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl AffineAuto {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Self {
        AffineAuto { alpha, beta, gamma }
    }

    pub fn is_invertible(&self) -> bool {
        !self.beta.is_zero()
    }

    fn images(&self) -> Result<(CommPoly2, CommPoly2), ScalarError> {
        let px = CommPoly2::y();
        let py = CommPoly2::y()
            .scale(&self.alpha)?
            .add(&CommPoly2::x().scale(&self.beta)?)?
            .add(&CommPoly2::constant(self.gamma.clone()))?;
        Ok((px, py))
    }

    fn inverse_images(&self) -> Result<(CommPoly2, CommPoly2), GwaError> {
        if !self.is_invertible() {
            return Err(GwaError::NotInvertible);
        }
        let binv = self.beta.try_inv()?;
        let px = CommPoly2::y()
            .sub(&CommPoly2::x().scale(&self.alpha)?)?
            .sub(&CommPoly2::constant(self.gamma.clone()))?
            .scale(&binv)?;
        Ok((px, CommPoly2::x()))
    }
}

/// `phi^power(f)`; negative powers use `phi^-1(x) = (y - alpha x - gamma)/beta`, `phi^-1(y) = x`.
pub fn phi_apply(phi: &AffineAuto, f: &CommPoly2, power: i64) -> Result<CommPoly2, GwaError> {
    let (px, py) = if power >= 0 {
        phi.images()?
    } else {
        phi.inverse_images()?
    };
    let mut out = f.clone();
    for _ in 0..power.unsigned_abs() {
        out = out.substitute(&px, &py)?;
    }
    Ok(out)
}

/// The maximal ideal `<x - s0, y - s1>`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Point {
    pub s0: Scalar,
    pub s1: Scalar,
}

impl Point {
    pub fn new(s0: Scalar, s1: Scalar) -> Self {
        Point { s0, s1 }
    }
}

/// `s_n = alpha s_{n-1} + beta s_{n-2} + gamma` from `s_0`, `s_1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecurrenceParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub s0: Scalar,
    pub s1: Scalar,
}

impl RecurrenceParams {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar, s0: Scalar, s1: Scalar) -> Self {
        RecurrenceParams {
            alpha,
            beta,
            gamma,
            s0,
            s1,
        }
    }

    pub fn from_auto(phi: &AffineAuto, p: &Point) -> Self {
        Self::new(
            phi.alpha.clone(),
            phi.beta.clone(),
            phi.gamma.clone(),
            p.s0.clone(),
            p.s1.clone(),
        )
    }
}

/// `s_0, ..., s_n` by iteration.
pub fn s_prefix(p: &RecurrenceParams, n: usize) -> Result<Vec<Scalar>, ScalarError> {
    let mut out = vec![p.s0.clone(), p.s1.clone()];
    while out.len() <= n {
        let k = out.len();
        let next = p
            .alpha
            .try_mul(&out[k - 1])?
            .try_add(&p.beta.try_mul(&out[k - 2])?)?
            .try_add(&p.gamma)?;
        out.push(next);
    }
    out.truncate(n + 1);
    Ok(out)
}

pub fn s_seq(p: &RecurrenceParams, n: usize) -> Result<Scalar, ScalarError> {
    Ok(s_prefix(p, n)?.pop().expect("nonempty"))
}

/// `s_n = c1 lambda^n + c2 mu^n + gamma n / (2 - alpha)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedFormParams {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub gamma: Scalar,
    pub c1: Scalar,
    pub c2: Scalar,
}

pub fn fit_closed_form(p: &RecurrenceParams) -> Result<ClosedFormParams, GwaError> {
    let two = Scalar::int(2);
    if p.alpha == two {
        return Err(GwaError::DegenerateRoots);
    }
    if !p.gamma.is_zero() && !p.alpha.try_add(&p.beta)?.is_one() {
        return Err(GwaError::ClosedFormInapplicable);
    }
    let roots = char_roots(&p.alpha, &p.beta)?;
    if roots.is_double() {
        return Err(GwaError::DegenerateRoots);
    }
    let (lambda, mu) = (roots.lambda, roots.mu);
    let drift = p.gamma.try_div(&two.try_sub(&p.alpha)?)?;
    let c1 = p
        .s1
        .try_sub(&drift)?
        .try_sub(&mu.try_mul(&p.s0)?)?
        .try_div(&lambda.try_sub(&mu)?)?;
    let c2 = p.s0.try_sub(&c1)?;
    Ok(ClosedFormParams {
        lambda,
        mu,
        gamma: p.gamma.clone(),
        c1,
        c2,
    })
}

pub fn s_closed(c: &ClosedFormParams, n: u32) -> Result<Scalar, GwaError> {
    let alpha = c.lambda.try_add(&c.mu)?;
    let two = Scalar::int(2);
    if c.lambda == c.mu || alpha == two {
        return Err(GwaError::DegenerateRoots);
    }
    let n64 = i64::from(n);
    let drift = c
        .gamma
        .try_mul(&Scalar::int(n64))?
        .try_div(&two.try_sub(&alpha)?)?;
    Ok(c
        .c1
        .try_mul(&c.lambda.pow(n64)?)?
        .try_add(&c.c2.try_mul(&c.mu.pow(n64)?)?)?
        .try_add(&drift)?)
}

/// `phi^n(x - s_n)` and `phi^n(y - s_{n+1})` both vanish at `(s_0, s_1)`.
pub fn ideal_orbit_check(phi: &AffineAuto, p: &Point, n: u32) -> Result<bool, GwaError> {
    if !phi.is_invertible() {
        return Err(GwaError::NotInvertible);
    }
    let s = s_prefix(&RecurrenceParams::from_auto(phi, p), n as usize + 1)?;
    let n_us = n as usize;
    let fx = CommPoly2::x().sub(&CommPoly2::constant(s[n_us].clone()))?;
    let fy = CommPoly2::y().sub(&CommPoly2::constant(s[n_us + 1].clone()))?;
    for f in [fx, fy] {
        if !phi_apply(phi, &f, i64::from(n))?.eval(&p.s0, &p.s1)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbit of a point up to a finite horizon.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitReport {
    pub horizon: usize,
    pub period: Option<usize>,
    /// all `n <= horizon` with `s_n = 0`
    pub zero_x_hits: Vec<usize>,
    pub points: Vec<(Scalar, Scalar)>,
}

pub fn orbit_analysis(phi: &AffineAuto, p: &Point, horizon: usize) -> Result<OrbitReport, GwaError> {
    if !phi.is_invertible() {
        return Err(GwaError::NotInvertible);
    }
    let s = s_prefix(&RecurrenceParams::from_auto(phi, p), horizon + 1)?;
    let points: Vec<(Scalar, Scalar)> = (0..=horizon)
        .map(|n| (s[n].clone(), s[n + 1].clone()))
        .collect();
    let period = (1..=horizon).find(|&n| points[n] == points[0]);
    let zero_x_hits = (0..=horizon).filter(|&n| s[n].is_zero()).collect();
    Ok(OrbitReport {
        horizon,
        period,
        zero_x_hits,
        points,
    })
}

/// With `lambda = 1`, `s_0 = 0`, `s_1 = s`: checks `s_n != 0` for `1 <= n <= big_n`
/// and `s_n = s (1 - mu^n) / (1 - mu)`.
pub fn lemma_l4_check(mu: &Scalar, s: &Scalar, big_n: usize) -> Result<bool, GwaError> {
    if mu.is_one() {
        return Err(GwaError::PreconditionViolated("mu = 1".into()));
    }
    if let Some(order) = is_root_of_unity(mu)? {
        return Err(GwaError::PreconditionViolated(format!(
            "mu is a root of unity of order {order}"
        )));
    }
    if s.is_zero() {
        return Err(GwaError::PreconditionViolated(
            "s = 0 gives the zero sequence".into(),
        ));
    }
    let params = RecurrenceParams::new(
        Scalar::one().try_add(mu)?,
        mu.neg_ref(),
        Scalar::zero(),
        Scalar::zero(),
        s.clone(),
    );
    let seq = s_prefix(&params, big_n)?;
    let k = s.try_div(&Scalar::one().try_sub(mu)?)?;
    for (n, v) in seq.iter().enumerate().skip(1) {
        let closed = k.try_sub(&k.try_mul(&mu.pow(n as i64)?)?)?;
        if v.is_zero() || *v != closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `phi(beta x + y) = beta x + y` and `phi(y - x) = -beta (y - x)`.
pub fn eigenvector_check(phi: &AffineAuto) -> Result<bool, GwaError> {
    let w1 = CommPoly2::x().scale(&phi.beta)?.add(&CommPoly2::y())?;
    let w2 = CommPoly2::y().sub(&CommPoly2::x())?;
    let ok1 = phi_apply(phi, &w1, 1)? == w1;
    let ok2 = phi_apply(phi, &w2, 1)? == w2.scale(&phi.beta.neg_ref())?;
    Ok(ok1 && ok2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn phi_basics() {
        let phi = AffineAuto::new(s(2), s(-1), s(0));
        assert_eq!(phi_apply(&phi, &CommPoly2::x(), 1).unwrap(), CommPoly2::y());
        let f = CommPoly2::term(2, 1, s(1));
        let back = phi_apply(&phi, &phi_apply(&phi, &f, 1).unwrap(), -1).unwrap();
        assert_eq!(back, f);
        let singular = AffineAuto::new(s(1), s(0), s(0));
        assert_eq!(
            phi_apply(&singular, &f, -1),
            Err(GwaError::NotInvertible)
        );
    }

    #[test]
    fn arithmetic_progression() {
        let p = RecurrenceParams::new(s(2), s(-1), s(0), s(0), s(1));
        for n in 0..20 {
            assert_eq!(s_seq(&p, n).unwrap(), s(n as i64));
        }
        assert_eq!(fit_closed_form(&p), Err(GwaError::DegenerateRoots));
    }

    #[test]
    fn fitted_example() {
        let p = RecurrenceParams::new(Scalar::ratio(5, 2), s(-1), s(0), s(0), s(1));
        let c = fit_closed_form(&p).unwrap();
        assert_eq!((c.c1.clone(), c.c2.clone()), (Scalar::ratio(2, 3), Scalar::ratio(-2, 3)));
        assert_eq!(s_closed(&c, 2).unwrap(), Scalar::ratio(5, 2));
    }

    #[test]
    fn display() {
        let f = CommPoly2::x().scale(&s(-2)).unwrap().add(&CommPoly2::y()).unwrap();
        assert_eq!(f.to_string(), "-2*x + y");
    }
}
