//! Roots of `t^2 - alpha t - beta` and orders of roots of unity.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::quad::{rational_sqrt, rational_sqrt_parts, QuadExt};
use super::{FieldContext, Scalar, ScalarError};

/// The two roots `lambda`, `mu` of `t^2 - alpha t - beta`, with
/// `lambda + mu = alpha` and `lambda mu = -beta`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharRoots {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub field: FieldContext,
}

impl CharRoots {
    pub fn is_double(&self) -> bool {
        self.lambda == self.mu
    }
}

/// Square root inside the field of `x`, if one exists there or in a single
/// quadratic extension of ℚ (only when `x` is rational).
fn sqrt_in_field(x: &Scalar) -> Result<Scalar, ScalarError> {
    match x {
        Scalar::Rat(r) => {
            let (k, d) = rational_sqrt_parts(r);
            if d == 1 || k.is_zero() {
                Ok(Scalar::Rat(k))
            } else {
                Ok(Scalar::quad(BigRational::zero(), k, d))
            }
        }
        Scalar::Quad(q) => sqrt_quadratic(q).ok_or_else(|| {
            ScalarError::UnsupportedField(format!(
                "{x} has no square root in Q(sqrt({}))",
                q.d()
            ))
        }),
        Scalar::Func(_) => Err(ScalarError::UnsupportedField(
            "square roots of rational functions are not supported".into(),
        )),
    }
}

// (x + y sqrt d)^2 = A + B sqrt d with B != 0:
// y^2 = (A ± sqrt(A^2 - d B^2)) / (2d), x = B / (2y).
fn sqrt_quadratic(q: &QuadExt) -> Option<Scalar> {
    let a = q.a();
    let b = q.b();
    let d = BigRational::from_integer(q.d().into());
    let two = BigRational::from_integer(2.into());
    let s = rational_sqrt(&q.norm())?;
    for cand in [a + &s, a - &s] {
        let t = cand / (&two * &d);
        if t.is_zero() {
            continue;
        }
        if let Some(y) = rational_sqrt(&t) {
            let x = b / (&two * &y);
            let root = QuadExt::new(x, y, q.d());
            debug_assert_eq!(root.mul(&root), *q);
            return Some(Scalar::from_quad(root));
        }
    }
    None
}

/// Roots of `t^2 - alpha t - beta`.
///
/// When `alpha + beta = 1` the root `1` is returned as `lambda`. Otherwise
/// `lambda = (alpha + sqrt(disc))/2` and `mu = (alpha - sqrt(disc))/2`.
pub fn char_roots(alpha: &Scalar, beta: &Scalar) -> Result<CharRoots, ScalarError> {
    if matches!(alpha, Scalar::Func(_)) || matches!(beta, Scalar::Func(_)) {
        return Err(ScalarError::UnsupportedField(
            "characteristic roots need numeric alpha and beta".into(),
        ));
    }
    let field_in = match alpha.context() {
        FieldContext::Rational => beta.context(),
        f => f,
    };
    if alpha.try_add(beta)?.is_one() {
        let mu = beta.neg_ref();
        return Ok(CharRoots {
            field: mu.context(),
            lambda: Scalar::one(),
            mu,
        });
    }
    let disc = alpha.try_mul(alpha)?.try_add(&beta.scale(&BigRational::from_integer(4.into())))?;
    let root = sqrt_in_field(&disc)?;
    if let (FieldContext::Quadratic(d0), FieldContext::Quadratic(d1)) = (field_in, root.context()) {
        if d0 != d1 {
            return Err(ScalarError::UnsupportedField(format!(
                "roots need sqrt({d1}) on top of Q(sqrt({d0}))"
            )));
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    let lambda = alpha.try_add(&root)?.scale(&half);
    let mu = alpha.try_sub(&root)?.scale(&half);
    let field = match lambda.context() {
        FieldContext::Rational => mu.context(),
        f => f,
    };
    Ok(CharRoots { lambda, mu, field })
}

/// Candidate orders for roots of unity of algebraic degree at most two.
pub const QUADRATIC_ROOT_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

/// Exact multiplicative order of `x` if it is a root of unity, else `None`.
///
/// Only orders whose Euler totient is at most two can occur for rational or
/// quadratic numbers, so only `1, 2, 3, 4, 6` are tried.
pub fn is_root_of_unity(x: &Scalar) -> Result<Option<u32>, ScalarError> {
    if matches!(x, Scalar::Func(_)) {
        return Err(ScalarError::UnsupportedField(
            "order of a symbolic rational function is undecidable".into(),
        ));
    }
    if x.is_zero() {
        return Ok(None);
    }
    for n in QUADRATIC_ROOT_ORDERS {
        if x.pow(n as i64)?.is_one() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn double_root_one() {
        let r = char_roots(&s(2), &s(-1)).unwrap();
        assert_eq!((r.lambda, r.mu), (s(1), s(1)));
    }

    #[test]
    fn plus_minus_one() {
        let r = char_roots(&s(0), &s(1)).unwrap();
        assert_eq!((r.lambda, r.mu), (s(1), s(-1)));
    }

    #[test]
    fn golden_ratio_roots_satisfy_polynomial() {
        let r = char_roots(&s(1), &s(1)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(r.lambda, Scalar::quad(half.clone(), half.clone(), 5));
        assert_eq!(r.mu, Scalar::quad(half.clone(), -half, 5));
        for t in [&r.lambda, &r.mu] {
            // t^2 - t - 1 == 0, exactly
            let v = t * t - t - s(1);
            assert!(v.is_zero());
        }
        assert_eq!(r.field, FieldContext::Quadratic(5));
    }

    #[test]
    fn sqrt_inside_quadratic_field() {
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let x = Scalar::int(3) + Scalar::int(2) * Scalar::sqrt_int(2);
        let r = sqrt_in_field(&x).unwrap();
        assert_eq!(&r * &r, x);
        // sqrt(2) has no root in Q(sqrt 2)
        assert!(sqrt_in_field(&Scalar::sqrt_int(2)).is_err());
    }

    #[test]
    fn quadratic_input_with_square_discriminant() {
        // roots i, i: alpha = 2i, beta = 1
        let i = Scalar::sqrt_int(-1);
        let r = char_roots(&(&i * &s(2)), &s(1)).unwrap();
        assert_eq!(r.lambda, i);
        assert!(r.is_double());
    }

    #[test]
    fn orders() {
        assert_eq!(is_root_of_unity(&s(-1)).unwrap(), Some(2));
        assert_eq!(is_root_of_unity(&s(2)).unwrap(), None);
        let w = (s(-1) + Scalar::sqrt_int(-3)) / s(2);
        assert_eq!(is_root_of_unity(&w).unwrap(), Some(3));
        assert!(is_root_of_unity(&Scalar::mu()).is_err());
    }
}
