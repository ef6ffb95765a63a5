//! Maximum segment sum, datatype-generically.
//!
//! The crate builds the classical list derivation (cubic specification,
//! quadratic form, Horner's rule, linear scan) and its generalisation to
//! arbitrary shape functors:
//!
//! - [`shapes`]: the four shape functors, [`Term`], s-expression syntax;
//! - [`schemes`]: fold, bounded unfold, para, `contents` and the positional
//!   distributive law over collections;
//! - [`labelled`]: the labelled variant, `subterms` and the generic scan;
//! - [`collections`]: list/bag/set collection monads and reductions;
//! - [`pruning`]: pruned terms, `prune` and generic `segs`;
//! - [`horner`]: semirings, the list algorithms and generic Horner/MSS.

pub mod collections;
pub mod horner;
pub mod labelled;
pub mod pruning;
pub mod schemes;
pub mod shapes;

use thiserror::Error;

pub use collections::{Collection, CollectionKind, ReduceOp};
pub use horner::Semiring;
pub use labelled::Labelled;
pub use pruning::Pruned;
pub use shapes::{Node, ShapeKind, Term};

/// Failure of integer carrier arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("integer overflow")]
    Overflow,
    #[error("value {0} is outside the carrier of the semiring")]
    Domain(i64),
}

pub(crate) fn checked(v: Option<i64>) -> Result<i64, ArithError> {
    v.ok_or(ArithError::Overflow)
}
