//! Exact linear algebra over the integers and prime fields.

mod fp;
mod hnf;
mod matrix;
mod quotient;
mod snf;

pub use fp::{inv_mod, is_prime, pow_mod, FpMatrix};
pub use hnf::{hnf, hnf_with_transform, kernel_basis, solve, Solver, Submodule};
pub use matrix::{bilinear, dot, is_zero_vec, vec_from_i64, IntMatrix};
pub use quotient::{Certificate, Lifter, Quotient, QuotientMap};
pub use snf::{cokernel_invariants, mod_p_rank, rank, smith_diagonal, snf, AbelianInvariants, Smith};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient rank mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("not a submodule")]
    NotASubmodule,
    #[error("induced map is not well defined: {0:?}")]
    NotWellDefined(Certificate),
}
