//! Source problems of the reductions, with checkers and tiny exact solvers.

use rand::Rng;

use crate::error::{precondition, Error, Result};
use crate::graph::{is_connected_subset, VertexId, WeightedGraph};

pub type Literal = i32;

/// CNF formula over variables `1..=vars`; a literal's sign is its polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<Literal>>,
}

fn source_error<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Source(msg.into()))
}

impl Cnf {
    pub fn new(vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return precondition(format!("clause {} is empty", j + 1));
            }
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > vars {
                    return precondition(format!("clause {} has literal {l} outside 1..={vars}", j + 1));
                }
            }
        }
        Ok(Cnf { vars, clauses })
    }

    pub fn require_three(&self) -> Result<()> {
        match self.clauses.iter().position(|c| c.len() != 3) {
            Some(j) => precondition(format!(
                "clause {} has {} literals, expected 3",
                j + 1,
                self.clauses[j].len()
            )),
            None => Ok(()),
        }
    }

    /// Every clause all positive or all negative.
    pub fn require_monotone(&self) -> Result<()> {
        for (j, c) in self.clauses.iter().enumerate() {
            if !(c.iter().all(|&l| l > 0) || c.iter().all(|&l| l < 0)) {
                return precondition(format!("clause {} is not monotone", j + 1));
            }
        }
        Ok(())
    }

    pub fn literal_true(l: Literal, assignment: &[bool]) -> bool {
        assignment[l.unsigned_abs() as usize - 1] == (l > 0)
    }

    /// Index of the first clause the assignment falsifies.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| !c.iter().any(|&l| Self::literal_true(l, assignment)))
    }

    pub fn check(&self, assignment: &[bool]) -> Result<()> {
        if assignment.len() != self.vars {
            return source_error(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.vars
            ));
        }
        match self.first_unsatisfied(assignment) {
            Some(j) => source_error(format!("clause {} is not satisfied", j + 1)),
            None => Ok(()),
        }
    }

    /// Satisfying assignment by truth table, `vars ≤ 20`.
    pub fn brute_satisfy(&self) -> Result<Option<Vec<bool>>> {
        if self.vars > 20 {
            return Err(Error::LimitExceeded {
                what: "variables",
                actual: self.vars,
                limit: 20,
            });
        }
        for mask in 0u32..1 << self.vars {
            let a: Vec<bool> = (0..self.vars).map(|i| mask >> i & 1 == 1).collect();
            if self.first_unsatisfied(&a).is_none() {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    /// Clause with duplicate literals removed and sorted, for set semantics.
    pub fn normalized(clause: &[Literal]) -> Vec<Literal> {
        let mut c = clause.to_vec();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Three literals per clause over distinct variables, random polarity.
    pub fn random_3sat(rng: &mut impl Rng, vars: usize, clauses: usize) -> Cnf {
        assert!(vars >= 3, "3SAT needs three variables");
        let clauses = (0..clauses)
            .map(|_| {
                let picked = rand::seq::index::sample(rng, vars, 3);
                picked
                    .into_iter()
                    .map(|v| {
                        let l = v as Literal + 1;
                        if rng.random_bool(0.5) {
                            l
                        } else {
                            -l
                        }
                    })
                    .collect()
            })
            .collect();
        Cnf { vars, clauses }
    }

    /// Monotone three-literal clauses over distinct variables.
    pub fn random_monotone(rng: &mut impl Rng, vars: usize, clauses: usize) -> Cnf {
        let mut f = Self::random_3sat(rng, vars, clauses);
        for c in &mut f.clauses {
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            for l in c.iter_mut() {
                *l = l.abs() * sign;
            }
        }
        f
    }
}

/// Steiner tree instance `(G′, R, k′)`. Edge weights of `graph` are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerInstance {
    pub graph: WeightedGraph,
    pub terminals: Vec<VertexId>,
    pub budget: usize,
}

/// Subtree of `G′` given by vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SteinerTree {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl SteinerTree {
    fn normalize(mut self) -> Self {
        for e in &mut self.edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        self.edges.sort_unstable();
        self.vertices.sort_unstable();
        self.vertices.dedup();
        self
    }
}

impl SteinerInstance {
    pub fn new(graph: WeightedGraph, mut terminals: Vec<VertexId>, budget: usize) -> Result<Self> {
        terminals.sort_unstable();
        terminals.dedup();
        if let Some(&t) = terminals.iter().find(|&&t| t >= graph.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: t,
                n: graph.n(),
            });
        }
        Ok(SteinerInstance {
            graph,
            terminals,
            budget,
        })
    }

    /// Accepts trees of `G′` spanning `R` with at most `k′` edges.
    pub fn check(&self, tree: &SteinerTree) -> Result<()> {
        let g = &self.graph;
        let mut inside = vec![false; g.n()];
        for &v in &tree.vertices {
            if v >= g.n() {
                return source_error(format!("vertex {} not in the graph", v + 1));
            }
            inside[v] = true;
        }
        for &(u, v) in &tree.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return source_error(format!("edge {}-{} not in the graph", u + 1, v + 1));
            }
            if !inside[u] || !inside[v] {
                return source_error(format!("edge {}-{} leaves the tree's vertex set", u + 1, v + 1));
            }
        }
        if let Some(&t) = self.terminals.iter().find(|&&t| !inside[t]) {
            return source_error(format!("terminal {} not covered", t + 1));
        }
        let n = tree.vertices.len();
        if n == 0 || tree.edges.len() + 1 != n {
            return source_error("not a tree: edge count must be vertex count minus one");
        }
        let tree_graph = WeightedGraph::new(g.n(), tree.edges.iter().map(|&(u, v)| (u, v, 1)))
            .map_err(|e| Error::Source(e.to_string()))?;
        if !is_connected_subset(&tree_graph, &tree.vertices) {
            return source_error("not a tree: disconnected");
        }
        if tree.edges.len() > self.budget {
            return source_error(format!(
                "tree has {} edges, budget is {}",
                tree.edges.len(),
                self.budget
            ));
        }
        Ok(())
    }

    /// Smallest tree spanning `R` within budget, by enumerating vertex sets
    /// that contain `R` and taking a BFS spanning tree. `n ≤ 20`.
    pub fn brute_solve(&self) -> Result<Option<SteinerTree>> {
        let g = &self.graph;
        if g.n() > 20 {
            return Err(Error::LimitExceeded {
                what: "vertices",
                actual: g.n(),
                limit: 20,
            });
        }
        let required: u32 = self.terminals.iter().map(|&t| 1u32 << t).sum();
        let mut best: Option<Vec<VertexId>> = None;
        for mask in 0u32..1 << g.n() {
            if mask & required != required || mask == 0 {
                continue;
            }
            let vs: Vec<VertexId> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            if is_connected_subset(g, &vs) && best.as_ref().is_none_or(|b| vs.len() < b.len()) {
                best = Some(vs);
            }
        }
        let Some(vs) = best else { return Ok(None) };
        let tree = spanning_tree(g, &vs);
        Ok((tree.edges.len() <= self.budget).then_some(tree))
    }
}

/// BFS spanning tree of `G[vs]`; `vs` must induce a connected subgraph.
pub(crate) fn spanning_tree(g: &WeightedGraph, vs: &[VertexId]) -> SteinerTree {
    let mut inside = vec![false; g.n()];
    for &v in vs {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    if let Some(&s) = vs.iter().min() {
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    edges.push((x, y));
                    queue.push_back(y);
                }
            }
        }
    }
    SteinerTree {
        vertices: vs.to_vec(),
        edges,
    }
    .normalize()
}

/// Set cover instance over universe `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    pub budget: usize,
}

impl SetCoverInstance {
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        let mut covered = vec![false; universe];
        for (j, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return precondition(format!("set {} is empty", j + 1));
            }
            for &x in s {
                if x >= universe {
                    return precondition(format!("set {} has element {} outside the universe", j + 1, x + 1));
                }
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return precondition(format!("element {} is in no set", x + 1));
        }
        Ok(SetCoverInstance { universe, sets, budget })
    }

    pub fn check(&self, chosen: &[usize]) -> Result<()> {
        let mut covered = vec![false; self.universe];
        let mut distinct = chosen.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        for &j in &distinct {
            let Some(s) = self.sets.get(j) else {
                return source_error(format!("set {} does not exist", j + 1));
            };
            for &x in s {
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return source_error(format!("element {} is not covered", x + 1));
        }
        if distinct.len() > self.budget {
            return source_error(format!("cover uses {} sets, budget is {}", distinct.len(), self.budget));
        }
        Ok(())
    }
}
