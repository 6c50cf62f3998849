//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A degree or size guard rejected the request.  Guards keep the exact
    /// computations at desk scale; callers may raise the limit explicitly.
    #[error("degree guard: requested size {requested} exceeds limit {limit}")]
    DegreeGuard { requested: usize, limit: usize },

    /// Input text did not parse (partition, weight or functor grammar).
    #[error("parse error: {0}")]
    Parse(String),

    /// An index was outside its documented range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Shapes or dimensions of the inputs are inconsistent.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A chain complex failed validation (composite of differentials nonzero,
    /// or ranks inconsistent).
    #[error("malformed complex: {0}")]
    MalformedComplex(String),

    /// A Schur-pair Ext query that none of the rewriting rules can bring to a
    /// hook-source form.
    #[error("no hook route: {0}")]
    NoHookRoute(String),

    /// Schur atoms are formal bookkeeping only; they have no computable
    /// weight spaces (apply the Kuhn dual first).
    #[error("Schur atoms are formal only: {0}")]
    FormalAtom(String),

    /// The requested ring does not support this operation.
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    /// An exact integer solve that must succeed by construction failed;
    /// indicates an internal inconsistency, never user error.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
