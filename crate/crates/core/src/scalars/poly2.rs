//! Polynomials over ℚ in the two commuting indeterminates `lambda` and `mu`.
//!
//! These are the numerators and denominators of [`RatFunc`](super::RatFunc).
//! Terms are kept in a `BTreeMap` keyed by [`Exp2`], whose ordering is
//! graded-lex with `lambda > mu`; the last entry is the leading term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(i, j)` standing for `lambda^i mu^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exp2(pub u32, pub u32);

impl Exp2 {
    pub fn degree(self) -> u32 {
        self.0 + self.1
    }

    pub fn divides(self, other: Exp2) -> bool {
        self.0 <= other.0 && self.1 <= other.1
    }

    fn add(self, other: Exp2) -> Exp2 {
        Exp2(self.0 + other.0, self.1 + other.1)
    }

    fn sub(self, other: Exp2) -> Exp2 {
        Exp2(self.0 - other.0, self.1 - other.1)
    }
}

impl Ord for Exp2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exp2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<Exp2, BigRational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Exp2(0, 0), c)
    }

    pub fn monomial(e: Exp2, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn lambda() -> Self {
        Self::monomial(Exp2(1, 0), BigRational::one())
    }

    pub fn mu() -> Self {
        Self::monomial(Exp2(0, 1), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exp2(0, 0))
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Exp2(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp2, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(Exp2, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn degree_mu(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exp2 {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Exp2(0, 0);
        };
        it.fold(*first, |acc, e| Exp2(acc.0.min(e.0), acc.1.min(e.1)))
    }

    fn add_term(&mut self, e: Exp2, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        if other.is_monomial() {
            let (e, c) = other.leading().unwrap();
            return self.mul_monomial(e, c);
        }
        if self.is_monomial() {
            let (e, c) = self.leading().unwrap();
            return other.mul_monomial(e, c);
        }
        let mut out = Poly2::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(*e2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, e: Exp2, c: &BigRational) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(x, k)| (x.add(e), k * c))
                .collect(),
        }
    }

    /// Divides every term by `lambda^e.0 mu^e.1`; `e` must divide the content.
    pub fn div_monomial(&self, e: Exp2) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(x, k)| (x.sub(e), k.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly2) -> Option<Poly2> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if d.is_monomial() {
            let (e, c) = d.leading().unwrap();
            if !e.divides(self.monomial_content()) && !self.is_zero() {
                return None;
            }
            return Some(self.div_monomial(e).scale(&c.recip()));
        }
        let (de, dc) = d.leading().map(|(e, c)| (e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e, c.clone())) {
            if !de.divides(re) {
                return None;
            }
            let qe = re.sub(de);
            let qc = rc / &dc;
            rem = rem.sub(&d.mul_monomial(qe, &qc));
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly2 {
        match self.leading() {
            None => Poly2::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn eval(&self, lambda: &BigRational, mu: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            acc + c * pow_rat(lambda, e.0) * pow_rat(mu, e.1)
        })
    }

    /// Greatest common divisor, normalized monic (zero only when both are zero).
    pub fn gcd(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let ca = self.monomial_content();
        let cb = other.monomial_content();
        let g_mono = Exp2(ca.0.min(cb.0), ca.1.min(cb.1));
        if self.is_monomial() || other.is_monomial() {
            return Poly2::monomial(g_mono, BigRational::one());
        }
        let a = self.div_monomial(ca);
        let b = other.div_monomial(cb);
        if a.is_one() || b.is_one() {
            return Poly2::monomial(g_mono, BigRational::one());
        }
        let ua = to_mu_coeffs(&a);
        let ub = to_mu_coeffs(&b);
        let cont_a = content(&ua);
        let cont_b = content(&ub);
        let cont_g = cont_a.gcd(&cont_b);
        let pa = div_content(&ua, &cont_a);
        let pb = div_content(&ub, &cont_b);
        let pp = primitive_prs_gcd(pa, pb);
        let mut g = from_mu_coeffs(&pp).mul(&from_mu_coeffs(&[cont_g]));
        g = g.mul_monomial(g_mono, &BigRational::one());
        g.monic()
    }
}

pub(crate) fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    num_traits::pow(x.clone(), n as usize)
}

// Dense univariate polynomials in lambda, used for the gcd in ℚ[lambda][mu].
#[derive(Clone, Debug, PartialEq)]
struct UPoly(Vec<BigRational>);

impl UPoly {
    fn trimmed(mut v: Vec<BigRational>) -> UPoly {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        UPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigRational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly(Vec::new());
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::trimmed(v)
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            v[i] += a;
        }
        for (i, b) in o.0.iter().enumerate() {
            v[i] -= b;
        }
        UPoly::trimmed(v)
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let mut r = self.0.clone();
        let dl = d.lc().clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (UPoly(Vec::new()), self.clone());
        }
        let mut q = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        (UPoly::trimmed(q), UPoly::trimmed(r))
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc().clone();
        UPoly(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact univariate division");
        q
    }
}

fn to_mu_coeffs(p: &Poly2) -> Vec<UPoly> {
    let dm = p.degree_mu() as usize;
    let mut dense: Vec<Vec<BigRational>> = vec![Vec::new(); dm + 1];
    for (e, c) in p.terms() {
        let row = &mut dense[e.1 as usize];
        if row.len() <= e.0 as usize {
            row.resize(e.0 as usize + 1, BigRational::zero());
        }
        row[e.0 as usize] = c.clone();
    }
    dense.into_iter().map(UPoly::trimmed).collect()
}

fn from_mu_coeffs(v: &[UPoly]) -> Poly2 {
    let mut out = Poly2::zero();
    for (j, u) in v.iter().enumerate() {
        for (i, c) in u.0.iter().enumerate() {
            out.add_term(Exp2(i as u32, j as u32), c.clone());
        }
    }
    out
}

fn content(v: &[UPoly]) -> UPoly {
    v.iter()
        .filter(|u| !u.is_zero())
        .fold(UPoly(Vec::new()), |acc, u| acc.gcd(u))
}

fn div_content(v: &[UPoly], c: &UPoly) -> Vec<UPoly> {
    v.iter().map(|u| u.div_exact(c)).collect()
}

fn trim_mu(mut v: Vec<UPoly>) -> Vec<UPoly> {
    while v.last().is_some_and(|u| u.is_zero()) {
        v.pop();
    }
    v
}

fn pseudo_rem(f: &[UPoly], g: &[UPoly]) -> Vec<UPoly> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    while r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        let mut next: Vec<UPoly> = r.iter().map(|c| c.mul(&lg)).collect();
        for (j, gc) in g.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&gc.mul(&lr));
        }
        r = trim_mu(next);
    }
    r
}

fn primitive_part(v: Vec<UPoly>) -> Vec<UPoly> {
    let c = content(&v);
    let mut out = div_content(&v, &c);
    // keep a rational normalization to stop coefficient growth
    if let Some(top) = out.last() {
        if !top.is_zero() {
            let l = top.lc().clone();
            out = out
                .into_iter()
                .map(|u| UPoly(u.0.into_iter().map(|c| c / &l).collect()))
                .collect();
        }
    }
    out
}

fn primitive_prs_gcd(a: Vec<UPoly>, b: Vec<UPoly>) -> Vec<UPoly> {
    let (mut f, mut g) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    loop {
        if g.len() == 1 {
            // degree zero in mu: primitive parts are coprime
            return vec![UPoly(vec![BigRational::one()])];
        }
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            return primitive_part(g);
        }
        f = g;
        g = primitive_part(r);
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: Exp2) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("lambda", e.0), ("mu", e.1)] {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == Exp2(0, 0) {
                write!(f, "{}", fmt_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", fmt_rational(&a))?;
                }
                write_monomial(f, *e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn big(n: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> Poly2 {
        let mut out = Poly2::zero();
        for ((i, j), c) in terms {
            out.add_term(Exp2(*i, *j), big(*c));
        }
        out
    }

    #[test]
    fn grlex_leading_term() {
        let f = p(&[((0, 2), 1), ((1, 1), 1), ((2, 0), 1), ((0, 0), 5)]);
        assert_eq!(f.leading().unwrap().0, Exp2(2, 0));
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // (lambda^2 - mu^2) and (lambda - mu)
        let a = p(&[((2, 0), 1), ((0, 2), -1)]);
        let b = p(&[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[((1, 0), 1), ((0, 1), 1)]));
    }

    #[test]
    fn gcd_with_shared_content_in_lambda() {
        // lambda*(lambda + mu)*(mu + 1) and (lambda + mu)*(lambda - 1)
        let x = p(&[((1, 0), 1), ((0, 1), 1)]);
        let a = x.mul(&p(&[((0, 1), 1), ((0, 0), 1)])).mul(&Poly2::lambda());
        let b = x.mul(&p(&[((1, 0), 1), ((0, 0), -1)]));
        assert_eq!(a.gcd(&b), x);
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[((1, 0), 1), ((0, 0), 1)]);
        let b = p(&[((0, 1), 1), ((0, 0), 1)]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn display_orders_terms() {
        let f = p(&[((0, 1), -3), ((2, 1), 1), ((0, 0), 1)]);
        assert_eq!(f.to_string(), "lambda^2*mu - 3*mu + 1");
    }
}
