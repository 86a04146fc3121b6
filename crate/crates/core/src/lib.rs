//! Exact representations of pure braid groups.
//!
//! A pure braid is pushed through one of two pipelines and lands in a matrix
//! group over the Laurent ring `Z[t^±1, s^±1, r^±1]`:
//!
//! * projection from a chosen strand to a braid in the cylinder, the power
//!   map `z -> z^d` producing a virtual cylinder braid, then the matrix
//!   representation `rho` ([`homs`], [`rep`]);
//! * normalisation of two strands to the punctures `0, 1`, detection of
//!   concyclic moments as classical or flat crossings, then `rho_tilde`
//!   ([`geom`], [`rep`]).
//!
//! The [`geom`] module recomputes the first pipeline from actual strand
//! trajectories and serves as an independent check of the algebraic one.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod geom;
pub mod homs;
pub mod laurent;
pub mod relcheck;
pub mod rep;
pub mod sample;
pub mod word;

pub use error::Error;
pub use laurent::{Assignment, LaurentPoly, Matrix, Monomial, RationalMatrix, Var};
pub use word::{Family, GroupId, Letter, LetterKind, Word};
