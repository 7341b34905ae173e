use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly2::fmt_rational;
use super::quad::{rational_sqrt_parts, QuadExt};
use super::ratfunc::RatFunc;
use super::ScalarError;

/// Which exact field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldContext {
    Rational,
    /// ℚ(sqrt(d))
    Quadratic(i64),
    /// ℚ(lambda, mu)
    RationalFunction,
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::Rational => write!(f, "Q"),
            FieldContext::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            FieldContext::RationalFunction => write!(f, "Q(lambda,mu)"),
        }
    }
}

/// An exact field element.
///
/// Values are kept in the smallest field containing them: a quadratic number
/// with zero irrational part, or a constant rational function, is stored as
/// a rational. Rationals combine with every context; two quadratic fields with
/// different radicands, or a quadratic field and ℚ(lambda, mu), do not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Quad(QuadExt),
    Func(RatFunc),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n / d`; panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Rat(BigRational::new(n.into(), d.into()))
    }

    pub fn lambda() -> Self {
        Scalar::Func(RatFunc::lambda())
    }

    pub fn mu() -> Self {
        Scalar::Func(RatFunc::mu())
    }

    /// `a + b·sqrt(d)`, normalized.
    pub fn quad(a: BigRational, b: BigRational, d: i64) -> Self {
        Self::from_quad(QuadExt::new(a, b, d))
    }

    /// `sqrt(n)` for an integer `n`, in ℚ when `n` is a perfect square.
    pub fn sqrt_int(n: i64) -> Self {
        let (k, d) = rational_sqrt_parts(&BigRational::from_integer(n.into()));
        if d == 1 || k.is_zero() {
            Scalar::Rat(k)
        } else {
            Self::quad(BigRational::zero(), k, d)
        }
    }

    pub fn from_quad(q: QuadExt) -> Self {
        if q.is_rational() {
            Scalar::Rat(q.a().clone())
        } else {
            Scalar::Quad(q)
        }
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        match f.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Func(f),
        }
    }

    pub fn context(&self) -> FieldContext {
        match self {
            Scalar::Rat(_) => FieldContext::Rational,
            Scalar::Quad(q) => FieldContext::Quadratic(q.d()),
            Scalar::Func(_) => FieldContext::RationalFunction,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Quad(q) => q.is_zero(),
            Scalar::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    /// Rough size estimate; small values make good elimination pivots.
    pub fn complexity(&self) -> usize {
        match self {
            Scalar::Rat(_) => 0,
            Scalar::Quad(_) => 1,
            Scalar::Func(f) => f.complexity(),
        }
    }

    pub fn is_negative_looking(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Quad(q) => q.is_negative_looking(),
            Scalar::Func(f) => f.is_negative_looking(),
        }
    }

    fn lift_quad(r: &BigRational, d: i64) -> QuadExt {
        QuadExt::new(r.clone(), BigRational::zero(), d)
    }

    fn binary(
        &self,
        o: &Self,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        quad: impl Fn(&QuadExt, &QuadExt) -> QuadExt,
        func: impl Fn(&RatFunc, &RatFunc) -> RatFunc,
    ) -> Result<Scalar, ScalarError> {
        use Scalar::*;
        Ok(match (self, o) {
            (Rat(a), Rat(b)) => Rat(rat(a, b)),
            (Quad(a), Quad(b)) if a.d() == b.d() => Self::from_quad(quad(a, b)),
            (Rat(a), Quad(b)) => Self::from_quad(quad(&Self::lift_quad(a, b.d()), b)),
            (Quad(a), Rat(b)) => Self::from_quad(quad(a, &Self::lift_quad(b, a.d()))),
            (Func(a), Func(b)) => Self::from_ratfunc(func(a, b)),
            (Rat(a), Func(b)) => Self::from_ratfunc(func(&RatFunc::constant(a.clone()), b)),
            (Func(a), Rat(b)) => Self::from_ratfunc(func(a, &RatFunc::constant(b.clone()))),
            _ => {
                return Err(ScalarError::FieldMismatch {
                    left: self.context(),
                    right: o.context(),
                })
            }
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Scalar, ScalarError> {
        self.binary(o, |a, b| a + b, QuadExt::add, RatFunc::add)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Scalar, ScalarError> {
        self.binary(o, |a, b| a - b, QuadExt::sub, RatFunc::sub)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Scalar, ScalarError> {
        if let Scalar::Rat(r) = o {
            return Ok(self.scale(r));
        }
        if let Scalar::Rat(r) = self {
            return Ok(o.scale(r));
        }
        self.binary(o, |a, b| a * b, QuadExt::mul, RatFunc::mul)
    }

    pub fn try_div(&self, o: &Self) -> Result<Scalar, ScalarError> {
        let inv = o.try_inv()?;
        self.try_mul(&inv)
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Quad(q) => Self::from_quad(q.inv()),
            Scalar::Func(f) => Self::from_ratfunc(f.inv()),
        })
    }

    /// Equality that refuses to compare across incompatible fields.
    pub fn try_eq(&self, o: &Self) -> Result<bool, ScalarError> {
        Ok(self.try_sub(o)?.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * c),
            Scalar::Quad(q) => Scalar::Quad(q.scale(c)),
            Scalar::Func(f) => Scalar::Func(f.scale(c)),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r.clone()),
            Scalar::Quad(q) => Scalar::Quad(q.neg()),
            Scalar::Func(f) => Scalar::Func(f.neg()),
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Result<Scalar, ScalarError> {
        let base = if n < 0 { self.try_inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            /// Panics on incompatible fields (and on division by zero).
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Quad(q) => write!(f, "{q}"),
            Scalar::Func(r) => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    /// Canonical text, parenthesized when it is not a single product so it
    /// can sit in front of `*` in a larger expression.
    pub fn to_factor_string(&self) -> String {
        let s = self.to_string();
        let body = s.strip_prefix('-').unwrap_or(&s);
        if body.contains(' ') || body.contains('/') {
            format!("({s})")
        } else {
            s
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse::parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_add() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
    }

    #[test]
    fn quadratic_collapses_to_rational() {
        let s2 = Scalar::sqrt_int(2);
        let x = Scalar::one() + &s2;
        let y = Scalar::int(-1) + &s2;
        assert_eq!(x * y, Scalar::one());
        assert_eq!(Scalar::sqrt_int(9), Scalar::int(3));
        assert_eq!(Scalar::sqrt_int(-12).to_string(), "2*sqrt(-3)");
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let e = Scalar::sqrt_int(2).try_add(&Scalar::sqrt_int(3)).unwrap_err();
        assert!(matches!(e, ScalarError::FieldMismatch { .. }));
        assert!(Scalar::sqrt_int(2).try_mul(&Scalar::lambda()).is_err());
        assert!(Scalar::sqrt_int(2).try_eq(&Scalar::mu()).is_err());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            Scalar::one().try_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn ratfunc_quotient() {
        let l = Scalar::lambda();
        let m = Scalar::mu();
        let q = (&l * &l - &m * &m) / (&l - &m);
        assert_eq!(q, &l + &m);
    }

    #[test]
    fn negative_power() {
        assert_eq!(Scalar::int(2).pow(-3).unwrap(), Scalar::ratio(1, 8));
        assert_eq!(Scalar::lambda().pow(-1).unwrap().to_string(), "1/lambda");
    }
}
