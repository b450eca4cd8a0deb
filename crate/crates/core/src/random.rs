//! Seeded random instances for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{VertexId, Weight, WeightedGraph};
use crate::treedecomp::TreeDecomposition;

pub use rand_chacha::ChaCha8Rng as Rng64;

pub fn rng(seed: u64) -> Rng64 {
    rand::SeedableRng::seed_from_u64(seed)
}

fn weight(rng: &mut impl Rng, lo: Weight, hi: Weight) -> Weight {
    rng.random_range(lo..=hi)
}

/// Uniform random recursive tree on shuffled labels.
pub fn random_tree(rng: &mut impl Rng, n: usize, lo: Weight, hi: Weight) -> WeightedGraph {
    let mut label: Vec<VertexId> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<_> = (1..n)
        .map(|i| {
            let p = rng.random_range(0..i);
            (label[p], label[i], weight(rng, lo, hi))
        })
        .collect();
    WeightedGraph::new(n, edges).expect("tree edges are simple")
}

pub fn cycle_with_weights(weights: &[Weight]) -> WeightedGraph {
    let n = weights.len();
    WeightedGraph::new(n, weights.iter().enumerate().map(|(i, &w)| (i, (i + 1) % n, w)))
        .expect("cycle of length at least 3")
}

/// Connected chordal graph: each new vertex joins a random non-empty part of
/// a clique seen so far, so it is simplicial when added.
pub fn random_chordal(rng: &mut impl Rng, n: usize, lo: Weight, hi: Weight) -> WeightedGraph {
    let mut cliques: Vec<Vec<VertexId>> = vec![vec![0]];
    let mut edges = Vec::new();
    for v in 1..n {
        let base = cliques[rng.random_range(0..cliques.len())].clone();
        let mut part: Vec<VertexId> = base.iter().copied().filter(|_| rng.random_bool(0.6)).collect();
        if part.is_empty() {
            part.push(base[rng.random_range(0..base.len())]);
        }
        for &u in &part {
            edges.push((u, v, weight(rng, lo, hi)));
        }
        part.push(v);
        cliques.push(part);
    }
    WeightedGraph::new(n, edges).expect("chordal construction is simple")
}

/// Random tree plus each remaining pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64, lo: Weight, hi: Weight) -> WeightedGraph {
    let tree = random_tree(rng, n, lo, hi);
    let mut edges: Vec<_> = tree.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v, weight(rng, lo, hi)));
            }
        }
    }
    WeightedGraph::new(n, edges).expect("no duplicate pairs")
}

/// Connected partial `k`-tree with a width-`k` decomposition. Each new vertex
/// is attached to a `k`-subset of an existing bag, keeping every such edge with
/// probability `keep` and at least one of them.
pub fn random_partial_ktree(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    keep: f64,
    lo: Weight,
    hi: Weight,
) -> (WeightedGraph, TreeDecomposition) {
    let first = n.min(k + 1);
    let mut edges = Vec::new();
    for v in 1..first {
        for u in 0..v {
            if u + 1 == v || rng.random_bool(keep) {
                edges.push((u, v, weight(rng, lo, hi)));
            }
        }
    }
    let mut bags = vec![(0..first).collect::<Vec<_>>()];
    let mut tree_edges = Vec::new();
    for v in first..n {
        let from = rng.random_range(0..bags.len());
        let mut base = bags[from].clone();
        base.shuffle(rng);
        base.truncate(k);
        let anchor = rng.random_range(0..base.len());
        for (i, &u) in base.iter().enumerate() {
            if i == anchor || rng.random_bool(keep) {
                edges.push((u, v, weight(rng, lo, hi)));
            }
        }
        base.push(v);
        bags.push(base);
        tree_edges.push((from, bags.len() - 1));
    }
    let g = WeightedGraph::new(n, edges).expect("partial k-tree is simple");
    (g, TreeDecomposition::new(bags, tree_edges))
}
