//! Linear-time maximum weight connected matching on trees.

use crate::error::{precondition, Error, Result};
use crate::graph::{is_connected, Matching, Solution, VertexId, Weight, WeightedGraph};

/// Per-vertex tables of the rooted tree recurrence.
///
/// `best[v]` is the heaviest connected matching of the subtree at `v` in which
/// `v` is matched to one of its children, `free[v]` the sum of the positive
/// `best` values of the children, and `via[v]` the child achieving `best[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDpState {
    pub root: VertexId,
    pub parent: Vec<Option<(VertexId, usize)>>,
    pub best: Vec<Weight>,
    pub free: Vec<Weight>,
    pub via: Vec<Option<(VertexId, usize)>>,
    /// Vertices in breadth-first order from the root.
    pub order: Vec<VertexId>,
}

impl TreeDpState {
    pub fn children<'a>(&'a self, g: &'a WeightedGraph, v: VertexId) -> impl Iterator<Item = (VertexId, usize)> + 'a {
        let up = self.parent[v].map(|(p, _)| p);
        g.adjacency(v).iter().copied().filter(move |&(u, _)| Some(u) != up)
    }

    /// Vertex with the largest `best` value, lowest id first on ties.
    pub fn top(&self) -> Option<VertexId> {
        let mut h = None;
        for v in 0..self.best.len() {
            if self.via[v].is_some() && h.is_none_or(|x: VertexId| self.best[v] > self.best[x]) {
                h = Some(v);
            }
        }
        h
    }
}

fn check_tree(g: &WeightedGraph) -> Result<()> {
    if g.n() > 0 && (g.m() != g.n() - 1 || !is_connected(g)) {
        return precondition("tree solver needs a connected acyclic graph");
    }
    Ok(())
}

pub fn tree_dp(g: &WeightedGraph, root: VertexId) -> Result<TreeDpState> {
    check_tree(g)?;
    let n = g.n();
    if root >= n.max(1) {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);
    if n > 0 {
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            let up = parent[x].map(|(p, _)| p);
            for &(y, e) in g.adjacency(x) {
                if Some(y) != up {
                    parent[y] = Some((x, e));
                    order.push(y);
                }
            }
        }
    }

    let mut best = vec![0; n];
    let mut free = vec![0; n];
    let mut via = vec![None; n];
    for &v in order.iter().rev() {
        let up = parent[v].map(|(p, _)| p);
        let mut sum = 0;
        for &(u, _) in g.adjacency(v) {
            if Some(u) != up {
                sum += best[u].max(0);
            }
        }
        free[v] = sum;
        for &(u, e) in g.adjacency(v) {
            if Some(u) == up {
                continue;
            }
            let f = free[u] + g.weight(e) + sum - best[u].max(0);
            if via[v].is_none() || f > best[v] {
                best[v] = f;
                via[v] = Some((u, e));
            }
        }
    }
    Ok(TreeDpState {
        root,
        parent,
        best,
        free,
        via,
        order,
    })
}

/// Rebuilds the matching behind `best[h]`.
pub fn reconstruct(g: &WeightedGraph, dp: &TreeDpState, h: VertexId) -> Result<Matching> {
    let mut edges = Vec::new();
    let mut stack = vec![h];
    while let Some(x) = stack.pop() {
        let Some((b, e)) = dp.via[x] else { continue };
        edges.push(e);
        for (s, _) in dp.children(g, x).chain(dp.children(g, b)) {
            if s != b && dp.best[s] > 0 {
                stack.push(s);
            }
        }
    }
    Matching::new(g, edges)
}

pub fn solve_tree_rooted(g: &WeightedGraph, root: VertexId) -> Result<Solution> {
    let dp = tree_dp(g, root)?;
    match dp.top() {
        Some(h) if dp.best[h] > 0 => Ok(Solution::new(reconstruct(g, &dp, h)?)),
        _ => Ok(Solution::default()),
    }
}

pub fn solve_tree(g: &WeightedGraph) -> Result<Solution> {
    solve_tree_rooted(g, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_by_matching_connected;
    use crate::graph::tests::{cycle, path};

    fn solve(g: &WeightedGraph) -> Weight {
        let s = solve_tree(g).unwrap();
        assert!(induced_by_matching_connected(g, &s.matching).unwrap());
        assert_eq!(s.matching.weight(), s.weight);
        s.weight
    }

    #[test]
    fn examples() {
        let s = solve_tree(&path(&[7])).unwrap();
        assert_eq!((s.weight, s.matching.edges()), (7, &[0][..]));
        assert_eq!(solve(&path(&[3, -1, 4])), 7);
        let star = WeightedGraph::new(4, [(0, 1, 2), (0, 2, 3), (0, 3, -5)]).unwrap();
        assert_eq!(solve(&star), 3);
        let s = solve_tree(&path(&[-1, -1, -1])).unwrap();
        assert_eq!(s.weight, 0);
        assert!(s.matching.is_empty());
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(solve(&WeightedGraph::empty(0)), 0);
        assert_eq!(solve(&WeightedGraph::empty(1)), 0);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(solve_tree(&cycle(&[1, 1, 1])).is_err());
        let forest = WeightedGraph::new(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        assert!(solve_tree(&forest).is_err());
    }

    #[test]
    fn free_is_sum_of_positive_children() {
        let g = WeightedGraph::new(7, [(0, 1, 4), (0, 2, -2), (1, 3, 5), (1, 4, 1), (2, 5, 3), (2, 6, 2)]).unwrap();
        let dp = tree_dp(&g, 0).unwrap();
        for v in 0..7 {
            let sum: Weight = dp.children(&g, v).map(|(u, _)| dp.best[u].max(0)).sum();
            assert_eq!(dp.free[v], sum);
        }
        // 0-1 plus 2-5 hanging off the root.
        assert_eq!(dp.best[0], 4 + 3);
        assert_eq!(solve(&g), 7);
    }

    #[test]
    fn ties_pick_smallest_child() {
        let star = WeightedGraph::new(3, [(0, 2, 5), (0, 1, 5)]).unwrap();
        let dp = tree_dp(&star, 0).unwrap();
        assert_eq!(dp.via[0].map(|(u, _)| u), Some(1));
    }
}
