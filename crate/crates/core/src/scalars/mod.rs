//! Exact coefficient fields: ℚ, ℚ(sqrt d) and ℚ(lambda, mu).

mod linalg;
mod poly2;
mod quad;
mod ratfunc;
mod roots;
mod scalar;

use thiserror::Error;

pub use linalg::{mat_vec, nullspace, rank, solve_linear_system, LinearSolution};
pub use poly2::{Exp2, Poly2};
pub use quad::{is_valid_radicand, rational_sqrt, rational_sqrt_parts, squarefree_decompose, QuadExt};
pub use ratfunc::RatFunc;
pub use roots::{char_roots, is_root_of_unity, CharRoots, QUADRATIC_ROOT_ORDERS};
pub use scalar::{FieldContext, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch {
        left: FieldContext,
        right: FieldContext,
    },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
}
