//! Stable-rank bounds for `A(alpha, beta, gamma)` from the roots of `t^2 - alpha t - beta`.

use serde::Serialize;
use thiserror::Error;

use crate::scalars::{char_roots, is_root_of_unity, FieldContext, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassifyError {
    /// `beta = 0`: the report carries the parameters but no bounds.
    #[error("beta = 0: A(alpha, beta, gamma) is not noetherian")]
    NonNoetherian(Box<ClassificationReport>),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
}

impl From<ScalarError> for ClassifyError {
    fn from(e: ScalarError) -> Self {
        ClassifyError::UnsupportedField(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Parameters {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootData {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub field: FieldContext,
    pub lambda_order: Option<u32>,
    pub mu_order: Option<u32>,
    /// order of `lambda / mu`
    pub ratio_order: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub input: Parameters,
    pub noetherian: bool,
    pub krull_dim: Option<u32>,
    pub roots: Option<RootData>,
    pub sr_lower: Option<u32>,
    pub sr_upper: Option<u32>,
    pub exact: bool,
    pub rule_trace: Vec<String>,
}

impl ClassificationReport {
    pub fn bounds_text(&self) -> String {
        match (self.sr_lower, self.sr_upper) {
            (Some(l), Some(u)) if l == u => format!("sr = {l}"),
            (Some(l), Some(u)) => format!("{l} <= sr <= {u}"),
            _ => "no bounds".into(),
        }
    }
}

pub const RULE_NOETHERIAN: &str = "noetherian iff beta != 0";
pub const RULE_KRULL: &str =
    "Krull dimension is 2 iff alpha + beta = 1 and gamma != 0 (characteristic 0), otherwise 3";
pub const RULE_LOWER: &str =
    "sr >= 2: a non-free stably free right ideal exists (rank 1 < sr forces sr >= 2)";
pub const RULE_KRULL_TWO: &str =
    "alpha + beta = 1, gamma != 0: Stafford stable range theorem with Krull dimension 2 gives sr <= 3";
pub const RULE_EXACT_THREE: &str =
    "alpha + beta = 1, gamma = 0, lambda = mu = 1 or mu not a root of unity: Kmax dimension 2 gives sr <= 3, and K[x,y] is a quotient with Suslin sr(K[x,y]) = 3, so sr = 3";
pub const RULE_THREE_FOUR: &str =
    "alpha + beta = 1, gamma = 0: K[x,y] is a quotient with Suslin sr(K[x,y]) = 3, and Krull dimension 3 gives sr <= 4";
pub const RULE_DOUBLE_ROOT: &str =
    "alpha + beta != 1, lambda = mu a root of unity: Kmax version of the stable range theorem gives sr <= 3";
pub const RULE_RATIO: &str =
    "alpha + beta != 1, gamma = 0, lambda != mu, lambda/mu not a root of unity: Kmax version of the stable range theorem gives sr <= 3";
pub const RULE_GENERIC: &str =
    "alpha + beta != 1 otherwise: Stafford stable range theorem with Krull dimension 3 gives sr <= 4";

/// Applies the decision procedure in order: noetherianity, Krull dimension,
/// roots (with `lambda = 1` when `alpha + beta = 1`), then stable-rank bounds.
pub fn classify(
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
) -> Result<ClassificationReport, ClassifyError> {
    for s in [alpha, beta, gamma] {
        if matches!(s, Scalar::Func(_)) {
            return Err(ClassifyError::UnsupportedField(format!(
                "{s} is symbolic; orders of roots of unity are undecidable"
            )));
        }
    }
    let input = Parameters {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
    };
    let mut trace = vec![RULE_NOETHERIAN.to_string()];
    if beta.is_zero() {
        return Err(ClassifyError::NonNoetherian(Box::new(ClassificationReport {
            input,
            noetherian: false,
            krull_dim: None,
            roots: None,
            sr_lower: None,
            sr_upper: None,
            exact: false,
            rule_trace: trace,
        })));
    }
    let sum_one = alpha.try_add(beta)?.is_one();
    let gamma_zero = gamma.is_zero();
    let krull = if sum_one && !gamma_zero { 2 } else { 3 };
    trace.push(RULE_KRULL.to_string());

    let roots = char_roots(alpha, beta)?;
    let (lambda, mu) = (roots.lambda.clone(), roots.mu.clone());
    let ratio = lambda.try_div(&mu)?;
    let root_data = RootData {
        lambda_order: is_root_of_unity(&lambda)?,
        mu_order: is_root_of_unity(&mu)?,
        ratio_order: is_root_of_unity(&ratio)?,
        lambda: lambda.clone(),
        mu: mu.clone(),
        field: roots.field,
    };
    trace.push(RULE_LOWER.to_string());

    let (lower, upper, rule) = if sum_one {
        if !gamma_zero {
            (2, 3, RULE_KRULL_TWO)
        } else if (lambda.is_one() && mu.is_one()) || (!mu.is_one() && root_data.mu_order.is_none())
        {
            (3, 3, RULE_EXACT_THREE)
        } else {
            (3, 4, RULE_THREE_FOUR)
        }
    } else if roots.is_double() && root_data.mu_order.is_some() {
        (2, 3, RULE_DOUBLE_ROOT)
    } else if gamma_zero && !roots.is_double() && root_data.ratio_order.is_none() {
        (2, 3, RULE_RATIO)
    } else {
        (2, 4, RULE_GENERIC)
    };
    trace.push(rule.to_string());
    Ok(ClassificationReport {
        input,
        noetherian: true,
        krull_dim: Some(krull),
        roots: Some(root_data),
        sr_lower: Some(lower),
        sr_upper: Some(upper),
        exact: lower == upper,
        rule_trace: trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: Scalar, b: Scalar, g: Scalar) -> ClassificationReport {
        classify(&a, &b, &g).unwrap()
    }

    #[test]
    fn sl2_and_heisenberg() {
        let r = c(Scalar::int(2), Scalar::int(-1), Scalar::int(-2));
        assert_eq!((r.krull_dim, r.sr_lower, r.sr_upper), (Some(2), Some(2), Some(3)));
        let r = c(Scalar::int(2), Scalar::int(-1), Scalar::int(0));
        assert!(r.exact);
        assert_eq!(r.sr_upper, Some(3));
    }

    #[test]
    fn non_noetherian_has_no_bounds() {
        match classify(&Scalar::int(1), &Scalar::int(0), &Scalar::int(0)) {
            Err(ClassifyError::NonNoetherian(r)) => {
                assert!(!r.noetherian);
                assert!(r.sr_lower.is_none());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symbolic_input_is_rejected() {
        assert!(matches!(
            classify(&Scalar::lambda(), &Scalar::int(1), &Scalar::int(0)),
            Err(ClassifyError::UnsupportedField(_))
        ));
    }
}
