//! Exhaustive solvers used as ground truth.

use crate::error::{Error, Result};
use crate::graph::{Matching, VertexId, VertexWeightedGraph, Weight, WeightedGraph};

pub const DEFAULT_EDGE_LIMIT: usize = 24;
pub const DEFAULT_VERTEX_LIMIT: usize = 20;
pub const MWPM_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Weight,
    pub witness: Matching,
    pub explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WcsOracleResult {
    pub optimum: Weight,
    pub witness: Vec<VertexId>,
    pub explored: u64,
}

/// Search state for growing connected matchings one edge at a time.
struct Grower<'a> {
    g: &'a WeightedGraph,
    order: Vec<usize>,
    saturated: Vec<bool>,
    excluded: Vec<bool>,
    chosen: Vec<usize>,
    weight: Weight,
    prune: bool,
    best: Weight,
    best_edges: Vec<usize>,
    explored: u64,
}

impl<'a> Grower<'a> {
    fn new(g: &'a WeightedGraph, prune: bool) -> Self {
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.sort_by_key(|&i| (-g.weight(i), i));
        Grower {
            g,
            order,
            saturated: vec![false; g.n()],
            excluded: vec![false; g.m()],
            chosen: Vec::new(),
            weight: 0,
            prune,
            best: 0,
            best_edges: Vec::new(),
            explored: 0,
        }
    }

    fn live(&self, i: usize) -> bool {
        let e = self.g.edge(i);
        !self.excluded[i] && !self.saturated[e.u] && !self.saturated[e.v]
    }

    fn take(&mut self, i: usize) {
        let e = self.g.edge(i);
        self.saturated[e.u] = true;
        self.saturated[e.v] = true;
        self.chosen.push(i);
        self.weight += e.w;
    }

    fn untake(&mut self, i: usize) {
        let e = self.g.edge(i);
        self.saturated[e.u] = false;
        self.saturated[e.v] = false;
        self.chosen.pop();
        self.weight -= e.w;
    }

    /// Optimistic value of any completion of the current matching.
    fn bound(&self) -> Weight {
        let g = self.g;
        let mut best_at = vec![None::<Weight>; g.n()];
        let mut positive = 0;
        for i in 0..g.m() {
            if self.live(i) {
                let e = g.edge(i);
                positive += e.w.max(0);
                for x in [e.u, e.v] {
                    best_at[x] = Some(best_at[x].map_or(e.w, |b: Weight| b.max(e.w)));
                }
            }
        }
        let mut seen = self.saturated.clone();
        let mut stack: Vec<VertexId> = (0..g.n()).filter(|&v| self.saturated[v]).collect();
        let mut halves = 0;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if !seen[y] {
                    if let Some(b) = best_at[y] {
                        seen[y] = true;
                        halves += b.max(0);
                        stack.push(y);
                    }
                }
            }
        }
        self.weight + positive.min(halves / 2)
    }

    fn record(&mut self) {
        self.explored += 1;
        if self.weight > self.best {
            self.best = self.weight;
            self.best_edges = self.chosen.clone();
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize], Weight)) {
        visit(&[], 0);
        self.explored += 1;
        for k in 0..self.order.len() {
            let a = self.order[k];
            self.take(a);
            self.grow(visit);
            self.untake(a);
            self.excluded[a] = true;
        }
    }

    fn grow(&mut self, visit: &mut dyn FnMut(&[usize], Weight)) {
        if self.prune && self.bound() <= self.best {
            return;
        }
        let frontier = self.order.iter().copied().find(|&i| {
            if !self.live(i) {
                return false;
            }
            let e = self.g.edge(i);
            [e.u, e.v]
                .iter()
                .any(|&x| self.g.neighbors(x).any(|y| self.saturated[y]))
        });
        match frontier {
            None => {
                self.record();
                visit(&self.chosen, self.weight);
            }
            Some(i) => {
                self.take(i);
                self.grow(visit);
                self.untake(i);
                self.excluded[i] = true;
                self.grow(visit);
                self.excluded[i] = false;
            }
        }
    }
}

fn check_edge_limit(g: &WeightedGraph, edge_limit: usize) -> Result<()> {
    if g.m() > edge_limit {
        return Err(Error::LimitExceeded {
            what: "edges",
            actual: g.m(),
            limit: edge_limit,
        });
    }
    Ok(())
}

/// Maximum weight connected matching by exhaustive branch and bound.
///
/// Matchings are grown from an anchor edge and only ever extended by edges
/// touching `N(V(M))`, so every partial matching is connected and each
/// connected matching is reached exactly once.
pub fn brute_mwcm(g: &WeightedGraph, edge_limit: usize) -> Result<OracleResult> {
    check_edge_limit(g, edge_limit)?;
    let mut grower = Grower::new(g, true);
    grower.run(&mut |_, _| {});
    Ok(OracleResult {
        optimum: grower.best,
        witness: Matching::new(g, grower.best_edges.iter().copied())?,
        explored: grower.explored,
    })
}

/// Calls `visit` once for every connected matching of `g`, the empty one included.
pub fn for_each_connected_matching(
    g: &WeightedGraph,
    edge_limit: usize,
    mut visit: impl FnMut(&[usize], Weight),
) -> Result<u64> {
    check_edge_limit(g, edge_limit)?;
    let mut grower = Grower::new(g, false);
    grower.run(&mut visit);
    Ok(grower.explored)
}

/// Maximum weight connected vertex subset, by checking every subset.
pub fn brute_wcs(g: &VertexWeightedGraph, vertex_limit: usize) -> Result<WcsOracleResult> {
    let n = g.n();
    if n > vertex_limit || n >= 31 {
        return Err(Error::LimitExceeded {
            what: "vertices",
            actual: n,
            limit: vertex_limit.min(30),
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &u| acc | 1 << u))
        .collect();
    let total = 1usize << n;
    let mut connected = vec![false; total];
    let mut weight = vec![0 as Weight; total];
    let mut best = (0, 0usize);
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        weight[mask] = weight[mask & (mask - 1)] + g.weight(low);
        connected[mask] = if mask.count_ones() == 1 {
            true
        } else {
            (0..n).any(|v| {
                let rest = mask & !(1 << v);
                mask >> v & 1 == 1 && connected[rest] && adj[v] as usize & rest != 0
            })
        };
        if connected[mask] && weight[mask] > best.0 {
            best = (weight[mask], mask);
        }
    }
    Ok(WcsOracleResult {
        optimum: best.0,
        witness: (0..n).filter(|&v| best.1 >> v & 1 == 1).collect(),
        explored: total as u64,
    })
}

/// Maximum weight perfect matching by pairing the lowest free vertex in every way.
pub fn brute_mwpm(g: &WeightedGraph) -> Result<OracleResult> {
    let n = g.n();
    if n > MWPM_VERTEX_LIMIT {
        return Err(Error::LimitExceeded {
            what: "vertices",
            actual: n,
            limit: MWPM_VERTEX_LIMIT,
        });
    }
    if n % 2 == 1 {
        return Err(Error::NoPerfectMatching);
    }

    fn go(
        g: &WeightedGraph,
        free: &mut [bool],
        chosen: &mut Vec<usize>,
        weight: Weight,
        best: &mut Option<(Weight, Vec<usize>)>,
        explored: &mut u64,
    ) {
        let Some(v) = free.iter().position(|&f| f) else {
            *explored += 1;
            if best.as_ref().is_none_or(|(b, _)| weight > *b) {
                *best = Some((weight, chosen.clone()));
            }
            return;
        };
        free[v] = false;
        for &(u, e) in g.adjacency(v) {
            if free[u] {
                free[u] = false;
                chosen.push(e);
                go(g, free, chosen, weight + g.weight(e), best, explored);
                chosen.pop();
                free[u] = true;
            }
        }
        free[v] = true;
    }

    let mut best = None;
    let mut explored = 0;
    go(g, &mut vec![true; n], &mut Vec::new(), 0, &mut best, &mut explored);
    let (optimum, edges) = best.ok_or(Error::NoPerfectMatching)?;
    Ok(OracleResult {
        optimum,
        witness: Matching::new(g, edges)?,
        explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_by_matching_connected;
    use crate::graph::tests::{complete, cycle, path};

    fn opt(g: &WeightedGraph) -> Weight {
        let r = brute_mwcm(g, 64).unwrap();
        assert!(induced_by_matching_connected(g, &r.witness).unwrap());
        assert_eq!(r.witness.weight(), r.optimum);
        r.optimum
    }

    #[test]
    fn mwcm_examples() {
        let r = brute_mwcm(&path(&[-3]), 24).unwrap();
        assert_eq!(r.optimum, 0);
        assert!(r.witness.is_empty());
        assert_eq!(opt(&path(&[2, 3])), 3);
        assert_eq!(opt(&path(&[3, -1, 4])), 7);
        assert_eq!(opt(&cycle(&[1; 4])), 2);
        assert_eq!(opt(&cycle(&[1; 5])), 2);
        assert_eq!(opt(&cycle(&[1; 6])), 3);
        assert_eq!(opt(&cycle(&[5, -2, -3])), 5);
    }

    #[test]
    fn mwcm_edge_limit() {
        let g = complete(8, 1);
        assert_eq!(
            brute_mwcm(&g, 24).unwrap_err(),
            Error::LimitExceeded {
                what: "edges",
                actual: 28,
                limit: 24
            }
        );
    }

    #[test]
    fn enumeration_counts_p4() {
        // Connected matchings of P_4: {}, three singletons, and the two end edges.
        let mut seen = Vec::new();
        for_each_connected_matching(&path(&[1, 1, 1]), 24, |m, _| {
            let mut m = m.to_vec();
            m.sort();
            seen.push(m);
        })
        .unwrap();
        seen.sort();
        assert_eq!(seen, vec![vec![], vec![0], vec![0, 2], vec![1], vec![2]]);
    }

    fn vwg(weights: Vec<Weight>, edges: Vec<(usize, usize)>) -> VertexWeightedGraph {
        VertexWeightedGraph::new(weights, edges).unwrap()
    }

    #[test]
    fn wcs_examples() {
        assert_eq!(brute_wcs(&vwg(vec![5], vec![]), 20).unwrap().optimum, 5);
        let tri = vwg(vec![1, -1, 1], vec![(0, 1), (1, 2), (0, 2)]);
        assert_eq!(brute_wcs(&tri, 20).unwrap().optimum, 2);
        let p = vwg(vec![4, -5, 4], vec![(0, 1), (1, 2)]);
        let r = brute_wcs(&p, 20).unwrap();
        assert_eq!(r.optimum, 4);
        assert_eq!(r.witness.len(), 1);
    }

    #[test]
    fn mwpm_examples() {
        assert_eq!(brute_mwpm(&path(&[5])).unwrap().optimum, 5);
        let k4 = WeightedGraph::new(4, [(0, 1, 1), (2, 3, 1), (0, 2, 5), (1, 3, 5), (0, 3, 0), (1, 2, 0)]).unwrap();
        assert_eq!(brute_mwpm(&k4).unwrap().optimum, 10);
        assert_eq!(brute_mwpm(&path(&[1, 1])).unwrap_err(), Error::NoPerfectMatching);
        let two_stars = WeightedGraph::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(brute_mwpm(&two_stars).unwrap_err(), Error::NoPerfectMatching);
    }
}
