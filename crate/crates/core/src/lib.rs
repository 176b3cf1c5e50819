//! Exact tools for Seidel switching on small simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the immutable [`Graph`] value, [`VertexSet`] and
//!   [`Permutation`], with [`graph6`] as the interchange format.
//! * [`switching`] implements switching by a vertex subset and the algebraic
//!   identities it satisfies.
//! * [`iso`] provides canonical forms, isomorphism witnesses, automorphism
//!   groups and similarity orbits.
//! * [`invariants`] computes the Seidel characteristic polynomial exactly.
//! * [`iss`] enumerates identity switches and checks the edge criterion.
//! * [`classes`] builds switching classes and per-order censuses.
//! * [`generators`] constructs named families and fixture graphs.
//! * [`verify`] drives every check over exhaustive sweeps and produces
//!   [`findings::Finding`] records.

pub mod classes;
pub mod enumerate;
pub mod error;
pub mod findings;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod iso;
pub mod iss;
pub mod switching;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Permutation, VertexSet, MAX_ORDER};
pub use iso::CanonicalForm;
