use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly2::fmt_rational;

/// `a + b·sqrt(d)` with `d` squarefree and not 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadExt {
    /// Panics when `d` is not a squarefree integer other than 0 and 1.
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        assert!(is_valid_radicand(d), "radicand {d} is not squarefree or is 0/1");
        Self { a, b, d }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.d, o.d);
        Self::new(&self.a + &o.a, &self.b + &o.b, self.d)
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.d, o.d);
        Self::new(&self.a - &o.a, &self.b - &o.b, self.d)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.a.clone(), -self.b.clone(), self.d)
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.d, o.d);
        let d = BigRational::from_integer(BigInt::from(self.d));
        Self::new(
            &self.a * &o.a + &self.b * &o.b * d,
            &self.a * &o.b + &self.b * &o.a,
            self.d,
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.a * c, &self.b * c, self.d)
    }

    /// `a^2 - d b^2`; nonzero for every nonzero element since `d` is not a square.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        self.conj().scale(&n.recip())
    }

    pub fn is_negative_looking(&self) -> bool {
        if self.a.is_zero() {
            self.b.is_negative()
        } else {
            self.a.is_negative()
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("sqrt({})", self.d);
        let babs = self.b.abs();
        let bpart = if babs.is_one() {
            root
        } else {
            format!("{}*{}", fmt_rational(&babs), root)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{bpart}")
            } else {
                write!(f, "{bpart}")
            }
        } else {
            let sign = if self.b.is_negative() { "-" } else { "+" };
            write!(f, "{} {sign} {bpart}", fmt_rational(&self.a))
        }
    }
}

pub fn is_valid_radicand(d: i64) -> bool {
    d != 0 && d != 1 && squarefree_decompose(&BigInt::from(d)).0.is_one()
}

/// Writes `n = k^2 * s` with `s` squarefree (sign carried by `s`).
///
/// Trial division runs up to `10^6`; a square factor above that bound would be
/// left inside `s`, which is only a concern for radicands far beyond the
/// parameter sizes this crate is used with.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut s = BigInt::from(sign);
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p <= limit {
        let mut e = 0u32;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &p;
        }
        if e % 2 == 1 {
            s *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        k *= r;
    } else {
        s *= m;
    }
    (k, s)
}

/// Square root of a rational when it is a rational square.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &n * &n == *x.numer() && &d * &d == *x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// `sqrt(x)` for rational `x`, as `(k, d)` meaning `k·sqrt(d)` with `d`
/// squarefree; `d == 1` means the root is the rational `k`.
pub fn rational_sqrt_parts(x: &BigRational) -> (BigRational, i64) {
    if x.is_zero() {
        return (BigRational::zero(), 1);
    }
    // x = p/q = p*q / q^2
    let pq = x.numer() * x.denom();
    let (k, s) = squarefree_decompose(&pq);
    let coeff = BigRational::new(k, x.denom().clone());
    (coeff, s.to_i64().expect("radicand exceeds i64"))
}
