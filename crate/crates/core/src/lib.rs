//! Exact symbolic computation in noetherian down-up algebras `A(alpha, beta, gamma)`.
//!
//! - [`scalars`]: exact fields ℚ, ℚ(sqrt d), ℚ(lambda, mu), root finding and
//!   Gauss–Jordan elimination.
//! - [`pbw`]: PBW presentations over the ordered generators `u < w < d`
//!   (`w = du - lambda ud`), normal-form multiplication, Ore data and
//!   homomorphism checks.
//! - [`ideals`]: right division, kernel computations, unimodular identities,
//!   stably-free ideal certificates and normality tests.
//! - [`gwa`]: the commutative side `K[x, y]` with its affine automorphism,
//!   the sequence `s_n`, point orbits.
//! - [`classify`]: stable-rank bounds from `(alpha, beta, gamma)`.
//! - [`verify`], [`table`], [`parse`]: the check suite, the parameter table
//!   and the expression language behind the `dua` binary.

pub mod classify;
pub mod cli;
pub mod gwa;
pub mod ideals;
pub mod parse;
pub mod pbw;
pub mod scalars;
pub mod table;
pub mod verify;

pub use scalars::{FieldContext, Scalar, ScalarError};
