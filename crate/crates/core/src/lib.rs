//! Directed normalizing graphs of finite groups.
//!
//! For a finite group `G` the directed normalizing graph has an arrow `x -> y`
//! whenever `<x>` is normal in `<x, y>`. This crate builds that graph (and the
//! subgraph left after deleting the bidirectional universal vertices), computes
//! universal-vertex sets, strongly connected components and diameters, classifies
//! groups (Dedekind, nilpotent, Frobenius, 2-Frobenius, ...), and checks a registry
//! of structural statements about these graphs against concrete groups.

pub mod analysis;
pub mod arith;
pub mod bitset;
pub mod digraph;
pub mod builders;
pub mod classify;
pub mod error;
pub mod group;
pub mod norm_graph;
pub mod perm;
pub mod report;
pub mod structure;
pub mod verify;

pub use bitset::BitSet;
pub use builders::{build, parse_spec, GroupSpec};
pub use error::{Error, Result};
pub use group::{Group, Subgroup};
