//! Finite residuated lattices: validation and classification, filter
//! lattices, comaximal filter graphs and zero-divisor graphs, canonical
//! forms, and exhaustive enumeration up to isomorphism.

#![allow(clippy::needless_range_loop)]
pub mod algebra;
pub mod canon;
pub mod elements;
pub mod enumerate;
pub mod filters;
pub mod graph;
pub mod io;
pub mod lattice;

pub use algebra::{ClassFlags, ResiduatedLattice, ValidationReport};
pub use elements::ElemSet;
pub use filters::{Filter, FilterLattice};
pub use graph::LabeledGraph;
pub use lattice::Lattice;
