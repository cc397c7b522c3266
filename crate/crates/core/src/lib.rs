//! Repeated-root constacyclic codes over finite fields and their
//! matrix-product decomposition into nested simple-root codes.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: GF(p) and GF(p^m) arithmetic.
//! * [`polyring`]: polynomials over GF(p^m), factorization of `x^n - c`.
//! * [`lincode`]: generator matrices, canonical forms, duals, exhaustive
//!   minimum distance, monomial maps.
//! * [`constacyclic`]: constacyclic codes as divisors of `x^N - lambda`.
//! * [`matprod`]: matrix-product codes, the NSC property, the product
//!   distance bound and the dual identity.
//! * [`decomp`]: decomposition of a code of length `p^k n` into `p^k`
//!   nested codes of length `n`, plus equivalence verification.
//! * [`classify`]: batch classification and the self-check suites used by
//!   the command-line tool.

pub mod classify;
pub mod constacyclic;
pub mod decomp;
pub mod field;
pub mod lincode;
pub mod matprod;
pub mod polyring;

pub use classify::{classify, run_suite, Classification, ClassificationRow, ClassifyError};
pub use constacyclic::{ConstacyclicCode, ConstacyclicError, ConstacyclicFamily};
pub use decomp::{decompose, DecompError, DecompositionResult};
pub use field::{Field, FieldElement, FieldError, FieldSpec};
pub use lincode::{codes_equal, CodeError, GeneratorMatrix, MinDistance, MonomialMap};
pub use matprod::{MatprodError, MatrixOverField};
pub use polyring::{Factorization, PolyError, Polynomial};

use thiserror::Error;

/// Crate-wide error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Constacyclic(#[from] ConstacyclicError),
    #[error(transparent)]
    Matprod(#[from] MatprodError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
