//! Seeded instances shared by the benchmarks.

use wcm_core::random::{random_chordal, random_connected, random_partial_ktree, random_tree, rng};
use wcm_core::treedecomp::TreeDecomposition;
use wcm_core::WeightedGraph;

pub fn tree(n: usize) -> WeightedGraph {
    random_tree(&mut rng(n as u64), n, -10, 10)
}

pub fn cycle(n: usize) -> WeightedGraph {
    let ws: Vec<i64> = (0..n as i64).map(|i| (i * 37 % 21) - 10).collect();
    wcm_core::random::cycle_with_weights(&ws)
}

pub fn chordal(n: usize) -> WeightedGraph {
    random_chordal(&mut rng(n as u64), n, 0, 10)
}

pub fn partial_ktree(n: usize, k: usize) -> (WeightedGraph, TreeDecomposition) {
    random_partial_ktree(&mut rng((n * 31 + k) as u64), n, k, 0.6, -5, 10)
}

pub fn sparse(n: usize) -> WeightedGraph {
    random_connected(&mut rng(n as u64), n, 0.15, -5, 10)
}
