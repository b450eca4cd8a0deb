//! Maximum weight connected matching on paths and cycles.

use crate::error::{precondition, Result};
use crate::graph::{is_connected, Matching, Solution, VertexId, Weight, WeightedGraph};
use crate::tree::solve_tree;

/// Cyclic vertex order `v_0 .. v_{n-1}` and the edge index joining `v_i` to `v_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleScan {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

impl CycleScan {
    pub fn new(g: &WeightedGraph) -> Result<Self> {
        let n = g.n();
        if n < 3 || !is_connected(g) || (0..n).any(|v| g.degree(v) != 2) {
            return precondition("cycle solver needs a connected 2-regular graph");
        }
        let mut vertices = vec![0];
        let mut edges = Vec::with_capacity(n);
        let mut prev_edge = usize::MAX;
        let mut x = 0;
        for _ in 0..n {
            let &(y, e) = g.adjacency(x).iter().find(|&&(_, e)| e != prev_edge).unwrap();
            edges.push(e);
            prev_edge = e;
            if y != 0 {
                vertices.push(y);
            }
            x = y;
        }
        Ok(CycleScan { vertices, edges })
    }

    /// Best alternating arc through `edges[anchor]`, as (weight, edge indices).
    pub fn anchored(&self, g: &WeightedGraph, anchor: usize) -> (Weight, Vec<usize>) {
        let n = self.edges.len();
        let at = |k: usize| self.edges[(anchor + k) % n];
        let limit = n / 2 - 1;
        // Edges two, four, ... steps ahead of the anchor and behind it.
        let ahead: Vec<Weight> = prefix_sums((1..=limit).map(|t| g.weight(at(2 * t))));
        let behind: Vec<Weight> = prefix_sums((1..=limit).map(|t| g.weight(at(n - 2 * t))));
        let mut behind_best = Vec::with_capacity(behind.len());
        let mut arg = 0;
        for (j, &s) in behind.iter().enumerate() {
            if s > behind[arg] {
                arg = j;
            }
            behind_best.push((behind[arg], arg));
        }
        let mut best = (Weight::MIN, 0, 0);
        for (i, &p) in ahead.iter().enumerate() {
            let (s, j) = behind_best[limit - i];
            if p + s > best.0 {
                best = (p + s, i, j);
            }
        }
        let (gain, i, j) = best;
        let mut chosen = vec![at(0)];
        chosen.extend((1..=i).map(|t| at(2 * t)));
        chosen.extend((1..=j).map(|t| at(n - 2 * t)));
        (g.weight(at(0)) + gain, chosen)
    }
}

fn prefix_sums(values: impl Iterator<Item = Weight>) -> Vec<Weight> {
    let mut out = vec![0];
    for w in values {
        out.push(out.last().unwrap() + w);
    }
    out
}

pub fn solve_cycle(g: &WeightedGraph) -> Result<Solution> {
    let scan = CycleScan::new(g)?;
    let n = g.n();
    let mut best = Solution::default();
    for anchor in [n - 1, n - 2] {
        let (w, edges) = scan.anchored(g, anchor);
        if w > best.weight {
            best = Solution::new(Matching::new(g, edges)?);
        }
    }
    // Neither anchor taken: the vertex they share is free, leaving a path.
    let (path, map) = g.induced(&scan.vertices[..n - 1]);
    let inner = solve_tree(&path)?;
    if inner.weight > best.weight {
        let edges = inner.matching.edges().iter().map(|&e| {
            let pe = path.edge(e);
            g.edge_between(map[pe.u], map[pe.v]).unwrap()
        });
        best = Solution::new(Matching::new(g, edges)?);
    }
    Ok(best)
}

pub fn solve_degree_two(g: &WeightedGraph) -> Result<Solution> {
    if g.max_degree() > 2 {
        return precondition("degree-two solver needs maximum degree at most 2");
    }
    if !is_connected(g) {
        return precondition("degree-two solver needs a connected graph");
    }
    if g.m() + 1 == g.n() || g.n() == 0 {
        solve_tree(g)
    } else {
        solve_cycle(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_by_matching_connected;
    use crate::graph::tests::{complete, cycle, path};

    fn solve(g: &WeightedGraph) -> Weight {
        let s = solve_degree_two(g).unwrap();
        assert!(induced_by_matching_connected(g, &s.matching).unwrap());
        assert_eq!(s.matching.weight(), s.weight);
        s.weight
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(solve(&cycle(&[1; 4])), 2);
        assert_eq!(solve(&cycle(&[5, -2, -3])), 5);
        assert_eq!(solve(&cycle(&[1; 6])), 3);
        assert_eq!(solve(&cycle(&[1; 5])), 2);
    }

    #[test]
    fn path_examples() {
        assert_eq!(solve(&path(&[4])), 4);
        assert_eq!(solve(&WeightedGraph::empty(1)), 0);
    }

    #[test]
    fn rejects_high_degree() {
        assert!(solve_degree_two(&complete(4, 1)).is_err());
        assert!(solve_cycle(&path(&[1, 1])).is_err());
    }

    #[test]
    fn scan_walks_the_cycle() {
        let g = WeightedGraph::new(5, [(0, 3, 1), (3, 1, 1), (1, 4, 1), (4, 2, 1), (2, 0, 1)]).unwrap();
        let scan = CycleScan::new(&g).unwrap();
        assert_eq!(scan.vertices, vec![0, 2, 4, 1, 3]);
        for (i, &e) in scan.edges.iter().enumerate() {
            let (a, b) = (scan.vertices[i], scan.vertices[(i + 1) % 5]);
            assert_eq!(g.edge(e).key(), (a.min(b), a.max(b)));
        }
    }
}
