//! Exact homological algebra for strict polynomial functors.
//!
//! The crate computes Ext groups between Weyl and Schur functors over the
//! integers and over prime fields by building specialization complexes:
//! evaluate a functor on column spaces of every rank, decompose into weight
//! spaces, and connect adjacent ranks by alternating sums of the coordinate
//! merge maps.  Everything is carried out in exact integer arithmetic; prime
//! field answers are reductions of integral data, never floating point.
//!
//! Module map:
//! - [`exactlin`]: sparse integer matrices, Smith/Hermite normal forms, chain
//!   complexes, homology, mapping cones.
//! - [`combinat`]: partitions, weights, ordered set partitions, Kostka
//!   numbers, Pieri strips, digit complements.
//! - [`polyfun`]: functor expressions, weight spaces, specialization and
//!   generization matrices, Weyl module models, straightening.
//! - [`speccomplex`]: filtered specialization complexes and the Ext / stable
//!   cohomology queries built on top of them.
//! - [`twistedkoszul`]: contraction, Koszul and twisted Koszul operators,
//!   their divided powers, and the chain maps they induce.
//! - [`series`]: bivariate generating functions for Ext dimensions of two-row,
//!   two-column and hook pairs, and the GL_2 block predicate.
//! - [`resolutions`]: shapes of resolutions by divided / exterior power
//!   tensors, with symmetric function Euler checks.

pub mod combinat;
pub mod error;
pub mod exactlin;
pub mod polyfun;
pub mod resolutions;
pub mod series;
pub mod speccomplex;
pub mod twistedkoszul;

pub use error::{Error, Result};
