//! Exact computation of the maximal denumerant of numerical semigroups.
//!
//! The maximal denumerant of an element `s` is the number of factorizations
//! of `s` over the minimal generators that attain the maximal length. The
//! crate computes its supremum over the whole semigroup by moving to the
//! blowup semigroup, where the question becomes one of counting bounded
//! length factorizations of finitely many "adjusted" elements.
//!
//! Modules:
//!
//! - [`semigroup`]: construction, membership, Apéry sets, Frobenius number.
//! - [`factor`]: factorization enumeration, denumerants, order tables.
//! - [`engine`]: blowup, adjustment tables, R-sets and the general algorithm.
//! - [`classify`]: additive / symmetric / supersymmetric predicates and the
//!   closed-form fast paths.
//! - [`oracle`]: brute-force recomputation sharing no code with the rest.
//! - [`corpus`]: deterministic random semigroups for cross-validation.

pub mod arith;
pub mod classify;
pub mod corpus;
pub mod engine;
mod error;
pub mod factor;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use factor::{Factorization, LengthTable};
pub use semigroup::{AperySet, GeneratingSet, Generators, Semigroup};
