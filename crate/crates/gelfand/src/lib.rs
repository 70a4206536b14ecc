//! Exact-arithmetic workbench for Gelfand duality over topological fields.
//!
//! The library works with finite-dimensional commutative unital algebras
//! over Q, F_p, and Q_p (at a fixed working precision), presented by
//! structure constants. It computes spectra, enumerates characters
//! (maximal ideals with residue field F), builds the Gelfand map into an
//! algebra of functions on the character space, manipulates the Boolean
//! algebra of idempotents, and checks the axioms of the canonical
//! uniformity induced by spectral entourages — all in exact arithmetic,
//! with p-adic precision tracked honestly rather than rounded away.
//!
//! Start with [`field::FieldDescriptor`] to pick a base field, then
//! [`algebra::Algebra`] to describe an algebra and the functions in
//! [`spectrum`] and [`duality`] to interrogate it. The `examples/`
//! directory of the crate walks through every major capability.

pub mod algebra;
pub mod cli;
pub mod duality;
pub mod error;
pub mod field;
pub mod files;
pub mod linalg;
pub mod poly;
pub mod profinite;
pub mod report;
pub mod spectrum;

pub use error::{Error, Result};
