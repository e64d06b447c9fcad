//! Algorithms for the forbidden-subgraph complexity framework.
//!
//! A problem is *C123* when it is efficiently solvable on bounded treewidth,
//! hard on subcubic graphs, and stays hard under a fixed number of edge
//! subdivisions of subcubic graphs. For such problems, restricting to
//! ℋ-subgraph-free inputs is tractable exactly when ℋ contains a disjoint
//! union of paths and subdivided claws. This crate provides:
//!
//! * [`graph`]: simple undirected graphs, k-subdivision and disjoint union,
//! * [`pattern`]: recognition of the class 𝒮, the family dichotomy and its
//!   hardness witnesses,
//! * [`iso`]: subgraph containment and ℋ-subgraph-freeness,
//! * [`width`]: exact pathwidth (vertex separation) and treewidth,
//! * [`oracles`]: exact small-instance solvers for every C123 problem,
//! * [`reductions`]: the hardness gadgets and the subdivision claims checked
//!   against the oracles.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod error;
pub mod graph;
pub mod iso;
pub mod oracles;
pub mod pattern;
pub mod reductions;
pub mod width;

pub use error::{Error, Result};
pub use graph::{Graph, StructStats};
