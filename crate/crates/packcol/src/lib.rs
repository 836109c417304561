//! Toolkit for packing `(1^j, 2^k)`-colorings of planar graphs with maximum
//! degree four.
//!
//! A packing `(1^j, 2^k)`-coloring partitions the vertex set into `j`
//! independent sets (the 1-colors) and `k` 2-independent sets (the 2-colors;
//! pairwise distance at least three). The crate bundles:
//!
//! * [`graph`] — simple graphs, plane embeddings via rotation systems, and
//!   small-graph exact invariants (independence number, diameter);
//! * [`solver`] — validity checking and exact backtracking search for packing
//!   colorings, including extension of partial colorings with an
//!   undetermined-1-color marker;
//! * [`claws`] — the catalogs of boundary-claw pre-colorings used by the
//!   configuration verifier, with their symmetry reductions;
//! * [`config`] — reducible-configuration checking: enumerate all consistent
//!   boundary pre-colorings of a configuration and report the ones that do
//!   not extend;
//! * [`discharge`] — the discharging auditor: exact rational charges, the two
//!   redistribution rules, and the structural-predicate checks;
//! * [`appendix`] — the claw/matrix input file format for configurations.

pub mod appendix;
pub mod claws;
pub mod color;
pub mod config;
pub mod discharge;
pub mod embedding;
pub mod enumerate;
pub mod graph;
pub mod oracle;
pub mod planegen;
pub mod predicates;
pub mod solver;

pub use color::{Color, PackingSpec, PartialColoring, Slot};
pub use embedding::PlaneEmbedding;
pub use graph::Graph;
