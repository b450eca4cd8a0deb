//! Exact solvers for maximum weight connected matching.

pub mod blossom;
pub mod chordal;
pub mod cycle;
pub mod dispatch;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod random;
pub mod reductions;
pub mod tree;
pub mod treedecomp;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Edge, Matching, Solution, VertexId, VertexWeightedGraph, Weight, WeightedGraph};
