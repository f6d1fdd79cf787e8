//! Combinatorial link diagrams from Conway notation, Kauffman state
//! enumeration, adequacy classification, bracket/Jones polynomials, and the
//! adequacy number / adequacy polynomial invariants of alternating link
//! families.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `adeq-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bracket;
pub mod cohomology;
pub mod conway;
pub mod diagram;
pub mod graph;
pub mod invariants;
pub mod polyhedra;
pub mod state;
pub mod tangle;

pub use bracket::LaurentPoly;
pub use conway::{ConwayExpr, FamilySpec};
pub use diagram::Diagram;
pub use graph::Multigraph;
pub use state::{AdequacyClass, KauffmanState};
