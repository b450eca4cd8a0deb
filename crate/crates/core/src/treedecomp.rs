//! Tree decompositions: validation, elimination heuristics and nice form.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<VertexId>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<VertexId>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, edges }
    }

    /// Largest bag size minus one; `-1` only for a decomposition without vertices.
    pub fn width(&self) -> isize {
        self.bags.iter().map(|b| b.len() as isize).max().unwrap_or(0) - 1
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

fn invalid<T>(msg: String) -> Result<T> {
    Err(Error::Decomposition(msg))
}

/// Checks the three decomposition axioms and returns the width.
pub fn validate_td(g: &WeightedGraph, td: &TreeDecomposition) -> Result<isize> {
    let nb = td.bags.len();
    for &(a, b) in &td.edges {
        if a >= nb || b >= nb || a == b {
            return invalid(format!("bad tree edge {a}-{b}"));
        }
    }
    if nb > 0 && td.edges.len() != nb - 1 {
        return invalid(format!("{} tree edges for {nb} bags", td.edges.len()));
    }
    let adj = td.tree_adjacency();
    if nb > 0 {
        let mut seen = vec![false; nb];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if let Some(b) = seen.iter().position(|s| !s) {
            return invalid(format!("bag {b} is not connected to bag 0"));
        }
    }

    let mut holders = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return invalid(format!("bag {i} holds unknown vertex {v}"));
            }
            holders[v].push(i);
        }
    }
    if let Some(v) = holders.iter().position(Vec::is_empty) {
        return invalid(format!("vertex {v} is in no bag"));
    }
    for e in g.edges() {
        let covered = holders[e.u].iter().any(|&i| td.bags[i].binary_search(&e.v).is_ok());
        if !covered {
            return invalid(format!("edge {}-{} is in no bag", e.u, e.v));
        }
    }
    let mut inside = vec![false; nb];
    for (v, list) in holders.iter().enumerate() {
        for &i in list {
            inside[i] = true;
        }
        let mut reached = 1;
        let mut seen = vec![false; nb];
        seen[list[0]] = true;
        let mut stack = vec![list[0]];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        for &i in list {
            inside[i] = false;
        }
        if reached != list.len() {
            return invalid(format!("bags holding vertex {v} are not connected"));
        }
    }
    Ok(td.width())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Heuristic {
    MinDegree,
    #[default]
    MinFill,
}

/// Decomposition from a greedy elimination ordering.
pub fn heuristic_td(g: &WeightedGraph, method: Heuristic) -> TreeDecomposition {
    let n = g.n();
    let mut adj: Vec<BTreeSet<VertexId>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut alive = vec![true; n];
    let mut position = vec![0; n];
    let mut bags = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let score = |v: VertexId| -> usize {
            match method {
                Heuristic::MinDegree => adj[v].len(),
                Heuristic::MinFill => {
                    let nb: Vec<_> = adj[v].iter().copied().collect();
                    let mut missing = 0;
                    for (i, &a) in nb.iter().enumerate() {
                        missing += nb[i + 1..].iter().filter(|b| !adj[a].contains(b)).count();
                    }
                    missing
                }
            }
        };
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (score(v), adj[v].len(), v))
            .unwrap();
        alive[v] = false;
        position[v] = step;
        order.push(v);
        let nb: Vec<VertexId> = adj[v].iter().copied().collect();
        let mut bag = nb.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push((bag, nb.clone()));
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, (_, nb)) in bags.iter().enumerate() {
        match nb.iter().min_by_key(|&&u| position[u]) {
            Some(&u) => edges.push((i, position[u])),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags.into_iter().map(|(b, _)| b).collect(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(VertexId),
    Forget(VertexId),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<VertexId>,
    pub children: Vec<usize>,
}

/// Rooted nice decomposition. Children precede parents in `nodes`, and the
/// root is the last node: an empty bag that forgets `pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub pi: VertexId,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> isize {
        self.nodes.iter().map(|x| x.bag.len() as isize).max().unwrap_or(0) - 1
    }

    fn push(&mut self, kind: NodeKind, bag: Vec<VertexId>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, mut at: usize, v: VertexId) -> usize {
        let mut bag = self.nodes[at].bag.clone();
        let pos = bag.binary_search(&v).unwrap_err();
        bag.insert(pos, v);
        at = self.push(NodeKind::Introduce(v), bag, vec![at]);
        at
    }

    fn forget(&mut self, at: usize, v: VertexId) -> usize {
        let mut bag = self.nodes[at].bag.clone();
        bag.retain(|&x| x != v);
        self.push(NodeKind::Forget(v), bag, vec![at])
    }

    pub fn as_td(&self) -> TreeDecomposition {
        let mut edges = Vec::new();
        for (i, x) in self.nodes.iter().enumerate() {
            for &c in &x.children {
                edges.push((c, i));
            }
        }
        TreeDecomposition::new(self.nodes.iter().map(|x| x.bag.clone()).collect(), edges)
    }

    /// Checks the node-kind rules and that each vertex is forgotten exactly once.
    pub fn check_shape(&self) -> Result<()> {
        let mut forgotten = BTreeSet::new();
        for (i, x) in self.nodes.iter().enumerate() {
            let child_bag = |k: usize| &self.nodes[x.children[k]].bag;
            if x.children.iter().any(|&c| c >= i) {
                return invalid(format!("node {i} precedes a child"));
            }
            let ok = match x.kind {
                NodeKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    x.children.len() == 1 && {
                        let mut b = child_bag(0).clone();
                        b.push(v);
                        b.sort_unstable();
                        !child_bag(0).contains(&v) && b == x.bag
                    }
                }
                NodeKind::Forget(v) => {
                    x.children.len() == 1 && {
                        let mut b = x.bag.clone();
                        b.push(v);
                        b.sort_unstable();
                        !x.bag.contains(&v) && b == *child_bag(0) && forgotten.insert(v)
                    }
                }
                NodeKind::Join => x.children.len() == 2 && *child_bag(0) == x.bag && *child_bag(1) == x.bag,
            };
            if !ok {
                return invalid(format!("node {i} breaks the {:?} rule", x.kind));
            }
        }
        let root = &self.nodes[self.root()];
        if !root.bag.is_empty() || root.kind != NodeKind::Forget(self.pi) {
            return invalid("root must be an empty bag forgetting pi".into());
        }
        Ok(())
    }
}

/// Nice form of `td` whose root is the empty bag reached by forgetting `pi` last.
pub fn make_nice(td: &TreeDecomposition, pi: VertexId) -> Result<NiceTreeDecomposition> {
    let Some(top) = td.bags.iter().position(|b| b.binary_search(&pi).is_ok()) else {
        return invalid(format!("vertex {pi} is in no bag"));
    };
    let adj = td.tree_adjacency();
    let nb = td.bags.len();
    let mut parent = vec![usize::MAX; nb];
    let mut order = vec![top];
    parent[top] = top;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
    }
    if order.len() != nb {
        return invalid("bag tree is disconnected".into());
    }

    let mut nice = NiceTreeDecomposition { nodes: Vec::new(), pi };
    let mut built = vec![usize::MAX; nb];
    for &t in order.iter().rev() {
        let bag = &td.bags[t];
        let mut tops = Vec::new();
        for &c in &adj[t] {
            if c == parent[t] && t != top {
                continue;
            }
            let mut at = built[c];
            for &v in &td.bags[c] {
                if bag.binary_search(&v).is_err() {
                    at = nice.forget(at, v);
                }
            }
            for &v in bag {
                if nice.nodes[at].bag.binary_search(&v).is_err() {
                    at = nice.introduce(at, v);
                }
            }
            tops.push(at);
        }
        if tops.is_empty() {
            let mut at = nice.push(NodeKind::Leaf, Vec::new(), Vec::new());
            for &v in bag {
                at = nice.introduce(at, v);
            }
            tops.push(at);
        }
        let mut at = tops[0];
        for &other in &tops[1..] {
            at = nice.push(NodeKind::Join, bag.clone(), vec![at, other]);
        }
        built[t] = at;
    }
    let mut at = built[top];
    for &v in &td.bags[top] {
        if v != pi {
            at = nice.forget(at, v);
        }
    }
    nice.forget(at, pi);
    Ok(nice)
}
