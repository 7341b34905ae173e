use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly2::{Exp2, Poly2};

/// An element of ℚ(lambda, mu), kept as a reduced fraction whose denominator
/// is monic under graded-lex order. Two values are equal iff their
/// representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    /// Builds `num / den` in canonical form. Panics when `den` is zero.
    pub fn new(num: Poly2, den: Poly2) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::from_coprime(num, den)
    }

    fn from_coprime(num: Poly2, den: Poly2) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Poly2::zero(),
            den: Poly2::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly2::one())
    }

    pub fn from_poly(p: Poly2) -> Self {
        Self {
            num: p,
            den: Poly2::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly2::constant(c))
    }

    pub fn lambda() -> Self {
        Self::from_poly(Poly2::lambda())
    }

    pub fn mu() -> Self {
        Self::from_poly(Poly2::mu())
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Rough size, used to pick cheap pivots during elimination.
    pub fn complexity(&self) -> usize {
        self.num.len() + self.den.len() + if self.den.is_monomial() { 0 } else { 4 }
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let (a, _) = self.den.leading().unwrap();
            let (b, _) = o.den.leading().unwrap();
            let l = Exp2(a.0.max(b.0), a.1.max(b.1));
            let one = BigRational::one();
            let n1 = self.num.mul_monomial(Exp2(l.0 - a.0, l.1 - a.1), &one);
            let n2 = o.num.mul_monomial(Exp2(l.0 - b.0, l.1 - b.1), &one);
            return Self::new(n1.add(&n2), Poly2::monomial(l, one));
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d2).add(&o.num.mul(&d1));
        Self::new(num, self.den.mul(&d2))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        Self::from_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Leading coefficient of the numerator is negative.
    pub fn is_negative_looking(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    /// Evaluates at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, lambda: &BigRational, mu: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(lambda, mu);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(lambda, mu) / d)
        }
    }
}

fn needs_parens_as_denominator(p: &Poly2) -> bool {
    if p.len() > 1 {
        return true;
    }
    let (e, c) = p.leading().unwrap();
    !(c.is_one() && (e.0 == 0 || e.1 == 0))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        if self.num.len() > 1 || num.contains('/') {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if needs_parens_as_denominator(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}
