//! Weighted graphs, matchings and structural queries.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type Weight = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: Weight,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Undirected simple graph with signed integer edge weights.
///
/// Adjacency lists hold `(neighbour, edge index)` pairs sorted by neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, usize)>>,
}

impl WeightedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let edges: Vec<Edge> = edges.into_iter().map(|(u, v, w)| Edge { u, v, w }).collect();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        for (x, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|p| p[0].0 == p[1].0) {
                return Err(Error::ParallelEdge(x.min(pair[0].0), x.max(pair[0].0)));
            }
        }
        Ok(WeightedGraph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn weight(&self, i: usize) -> Weight {
        self.edges[i].w
    }

    pub fn adjacency(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(x, _)| x).ok().map(|pos| list[pos].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Subgraph induced by `vertices`, relabelled densely in the given order.
    /// Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, vertices: &[VertexId]) -> (WeightedGraph, Vec<VertexId>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            if index[e.u] != usize::MAX && index[e.v] != usize::MAX {
                edges.push((index[e.u], index[e.v], e.w));
            }
        }
        let g = WeightedGraph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, vertices.to_vec())
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn total_positive_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.w.max(0)).sum()
    }
}

pub fn is_connected(g: &WeightedGraph) -> bool {
    g.n() == 0 || g.components().len() == 1
}

/// Whether `vertices` induce a connected subgraph. The empty set counts as connected.
pub fn is_connected_subset(g: &WeightedGraph, vertices: &[VertexId]) -> bool {
    let Some(&start) = vertices.first() else {
        return true;
    };
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &(y, _) in g.adjacency(x) {
            if inside[y] && !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    let distinct = inside.iter().filter(|&&b| b).count();
    reached == distinct
}

/// Vertex-disjoint set of edges of a [`WeightedGraph`], with cached weight and
/// saturated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<usize>,
    weight: Weight,
    saturated: Vec<VertexId>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn new(g: &WeightedGraph, edges: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        let mut owner: Vec<usize> = vec![usize::MAX; g.n()];
        let mut weight = 0;
        let mut saturated = Vec::with_capacity(edges.len() * 2);
        for &i in &edges {
            if i >= g.m() {
                return Err(Error::EdgeOutOfRange { index: i, m: g.m() });
            }
            let e = g.edge(i);
            for x in [e.u, e.v] {
                if owner[x] != usize::MAX {
                    return Err(Error::SharedEndpoint(owner[x], i, x));
                }
                owner[x] = i;
                saturated.push(x);
            }
            weight += e.w;
        }
        saturated.sort_unstable();
        Ok(Matching {
            edges,
            weight,
            saturated,
        })
    }

    /// Builds a matching from endpoint pairs, looking each edge up in `g`.
    pub fn from_pairs(g: &WeightedGraph, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut idx = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for x in [u, v] {
                if x >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
                }
            }
            idx.push(g.edge_between(u, v).ok_or(Error::NoSuchEdge(u, v))?);
        }
        Matching::new(g, idx)
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn saturated(&self) -> &[VertexId] {
        &self.saturated
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_saturated(&self, v: VertexId) -> bool {
        self.saturated.binary_search(&v).is_ok()
    }

    /// Endpoint pairs with `u < v`, sorted.
    pub fn pairs(&self, g: &WeightedGraph) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self.edges.iter().map(|&i| g.edge(i).key()).collect();
        out.sort_unstable();
        out
    }

    /// Recomputes weight and saturated set from `g`; used to detect stale caches.
    pub fn recheck(&self, g: &WeightedGraph) -> Result<()> {
        let fresh = Matching::new(g, self.edges.iter().copied())?;
        if fresh != *self {
            return Err(Error::Certificate("cached matching data disagrees with graph".into()));
        }
        Ok(())
    }
}

/// A connected matching together with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Solution {
    pub weight: Weight,
    pub matching: Matching,
}

impl Solution {
    pub fn new(matching: Matching) -> Self {
        Solution {
            weight: matching.weight(),
            matching,
        }
    }
}

/// Whether `G[V(m)]` is connected. Revalidates `m` against `g`.
pub fn induced_by_matching_connected(g: &WeightedGraph, m: &Matching) -> Result<bool> {
    m.recheck(g)?;
    Ok(is_connected_subset(g, m.saturated()))
}

/// Undirected simple graph with vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexWeightedGraph {
    weights: Vec<Weight>,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl VertexWeightedGraph {
    pub fn new(weights: Vec<Weight>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = weights.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (x, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(p) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::ParallelEdge(x.min(p[0]), x.max(p[0])));
            }
        }
        Ok(VertexWeightedGraph { weights, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> Weight {
        self.weights[v]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Unit-weight view of the underlying edge set, for structural queries.
    pub fn skeleton(&self) -> WeightedGraph {
        WeightedGraph::new(self.n(), self.edges.iter().map(|&(u, v)| (u, v, 0))).expect("validated on construction")
    }

    pub fn subset_connected(&self, vertices: &[VertexId]) -> bool {
        is_connected_subset(&self.skeleton(), vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClassReport {
    pub connected: bool,
    pub is_tree: bool,
    pub max_degree: usize,
    pub is_path: bool,
    pub is_cycle: bool,
    /// `true` marks the second colour class.
    pub bipartition: Option<Vec<bool>>,
    pub chordal_peo: Option<Vec<VertexId>>,
    pub all_weights_nonnegative: bool,
}

pub fn classify(g: &WeightedGraph) -> GraphClassReport {
    let connected = is_connected(g);
    let n = g.n();
    let max_degree = g.max_degree();
    let is_tree = connected && n > 0 && g.m() == n - 1;
    let is_path = is_tree && max_degree <= 2;
    let is_cycle = connected && n >= 3 && (0..n).all(|v| g.degree(v) == 2);
    let peo = maximum_cardinality_search(g);
    GraphClassReport {
        connected,
        is_tree,
        max_degree,
        is_path,
        is_cycle,
        bipartition: two_coloring(g),
        chordal_peo: is_perfect_elimination_ordering(g, &peo).then_some(peo),
        all_weights_nonnegative: g.edges().iter().all(|e| e.w >= 0),
    }
}

pub fn two_coloring(g: &WeightedGraph) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Reverse visit order of maximum cardinality search. A graph is chordal iff
/// this order is a perfect elimination ordering.
pub fn maximum_cardinality_search(g: &WeightedGraph) -> Vec<VertexId> {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).rev().collect();
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !visited[v] && label[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !visited[u] {
                label[u] += 1;
                buckets[label[u]].push(u);
                top = top.max(label[u]);
            }
        }
    }
    order.reverse();
    order
}

/// Checks that every vertex's later neighbours in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &WeightedGraph, order: &[VertexId]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    // Each vertex hands its later neighbours (minus the earliest) to that earliest one.
    let mut demands: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &v in order {
        let later: Vec<VertexId> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            demands[parent].extend(later.iter().copied().filter(|&u| u != parent));
        }
    }
    let mut mark = vec![false; n];
    for (p, wanted) in demands.iter().enumerate() {
        if wanted.is_empty() {
            continue;
        }
        for u in g.neighbors(p) {
            mark[u] = true;
        }
        let ok = wanted.iter().all(|&u| mark[u]);
        for u in g.neighbors(p) {
            mark[u] = false;
        }
        if !ok {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &WeightedGraph) -> bool {
    is_perfect_elimination_ordering(g, &maximum_cardinality_search(g))
}

/// Cut vertices, sorted ascending.
pub fn articulation_points(g: &WeightedGraph) -> Vec<VertexId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent edge, next adjacency position)
        let mut stack: Vec<(VertexId, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (x, via, pos) = *frame;
            if pos < g.degree(x) {
                frame.2 += 1;
                let (y, e) = g.adjacency(x)[pos];
                if e == via {
                    continue;
                }
                if disc[y] == usize::MAX {
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, e, 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if p != root && low[x] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub fn bfs_distances(g: &WeightedGraph, s: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Largest unweighted distance between two vertices.
pub fn diameter(g: &WeightedGraph) -> Result<usize> {
    let mut best = 0;
    for s in 0..g.n() {
        let dist = bfs_distances(g, s);
        let far = *dist.iter().max().unwrap();
        if far == usize::MAX {
            return Err(Error::Disconnected);
        }
        best = best.max(far);
    }
    Ok(best)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn path(weights: &[Weight]) -> WeightedGraph {
        let edges = weights.iter().enumerate().map(|(i, &w)| (i, i + 1, w));
        WeightedGraph::new(weights.len() + 1, edges).unwrap()
    }

    pub fn cycle(weights: &[Weight]) -> WeightedGraph {
        let n = weights.len();
        let edges = weights.iter().enumerate().map(|(i, &w)| (i, (i + 1) % n, w));
        WeightedGraph::new(n, edges).unwrap()
    }

    pub fn complete(n: usize, w: Weight) -> WeightedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, w));
            }
        }
        WeightedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(WeightedGraph::new(2, [(0, 0, 1)]).unwrap_err(), Error::SelfLoop(0));
        assert_eq!(
            WeightedGraph::new(2, [(0, 1, 1), (1, 0, 2)]).unwrap_err(),
            Error::ParallelEdge(0, 1)
        );
        assert!(matches!(
            WeightedGraph::new(2, [(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&path(&[1])));
        let two = WeightedGraph::new(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        assert!(!is_connected(&two));
        assert!(is_connected(&WeightedGraph::empty(0)));
    }

    #[test]
    fn matching_connectivity() {
        let p4 = path(&[3, -1, 4]);
        let m = Matching::new(&p4, [0, 2]).unwrap();
        assert_eq!(m.weight(), 7);
        assert!(induced_by_matching_connected(&p4, &m).unwrap());

        let p5 = path(&[1, 1, 1, 1]);
        let m = Matching::new(&p5, [0, 3]).unwrap();
        assert!(!induced_by_matching_connected(&p5, &m).unwrap());

        assert!(induced_by_matching_connected(&p5, &Matching::empty()).unwrap());
    }

    #[test]
    fn matching_rejects_overlap_and_range() {
        let p3 = path(&[2, 3]);
        assert_eq!(Matching::new(&p3, [0, 1]).unwrap_err(), Error::SharedEndpoint(0, 1, 1));
        assert!(matches!(
            Matching::new(&p3, [5]),
            Err(Error::EdgeOutOfRange { index: 5, m: 2 })
        ));
    }

    #[test]
    fn classify_examples() {
        let c5 = classify(&cycle(&[1; 5]));
        assert!(c5.connected && c5.is_cycle);
        assert!(c5.bipartition.is_none());
        assert!(c5.chordal_peo.is_none());

        let k4 = classify(&complete(4, 1));
        assert!(k4.chordal_peo.is_some());
        assert!(k4.bipartition.is_none());

        let star = WeightedGraph::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        let s = classify(&star);
        assert!(s.is_tree && !s.is_path);
        assert!(s.bipartition.is_some() && s.chordal_peo.is_some());
        assert_eq!(s.max_degree, 3);
    }

    #[test]
    fn articulation_examples() {
        assert_eq!(articulation_points(&path(&[1, 1])), vec![1]);
        assert!(articulation_points(&cycle(&[1; 6])).is_empty());
        let bowtie = WeightedGraph::new(5, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1), (4, 2, 1)]).unwrap();
        assert_eq!(articulation_points(&bowtie), vec![2]);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path(&[1])).unwrap(), 1);
        assert_eq!(diameter(&path(&[1, 1, 1])).unwrap(), 3);
        assert_eq!(diameter(&cycle(&[1; 6])).unwrap(), 3);
        let two = WeightedGraph::new(4, [(0, 1, 1), (2, 3, 1)]).unwrap();
        assert_eq!(diameter(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn peo_rejects_bad_order() {
        // C_4 plus chord 0-2 is chordal, but eliminating 1 first needs 0,2 adjacent.
        let g = WeightedGraph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)]).unwrap();
        assert!(is_chordal(&g));
        assert!(is_perfect_elimination_ordering(&g, &[1, 3, 0, 2]));
        let c4 = cycle(&[1; 4]);
        assert!(!is_perfect_elimination_ordering(&c4, &[0, 1, 2, 3]));
    }
}
