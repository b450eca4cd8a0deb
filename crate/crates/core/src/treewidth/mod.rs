//! Rank-based dynamic programming over tree decompositions.

pub mod dp;
pub mod partition;
pub mod wps;

pub use dp::{solve_for_pi, solve_treewidth, solve_treewidth_auto, solve_treewidth_with, DpOptions, DpStats};
pub use partition::Partition;
pub use wps::{
    op_glue, op_insert, op_join, op_project, op_shift, op_union, opt, reduce, rmc, Entry, WeightedPartitionSet,
};
