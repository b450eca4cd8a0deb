//! Solver selection and certificate checks.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::chordal::solve_chordal;
use crate::cycle::solve_degree_two;
use crate::error::{precondition, Error, Result};
use crate::graph::{
    classify, is_chordal, is_connected_subset, Matching, Solution, VertexId, VertexWeightedGraph, Weight, WeightedGraph,
};
use crate::oracle::{brute_mwcm, DEFAULT_EDGE_LIMIT};
use crate::tree::solve_tree;
use crate::treedecomp::{heuristic_td, validate_td, Heuristic, TreeDecomposition};
use crate::treewidth::solve_treewidth;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverChoice {
    #[default]
    Auto,
    Brute,
    Tree,
    Cycle,
    Chordal,
    Treewidth,
}

impl SolverChoice {
    pub const ALL: [SolverChoice; 6] = [
        SolverChoice::Auto,
        SolverChoice::Brute,
        SolverChoice::Tree,
        SolverChoice::Cycle,
        SolverChoice::Chordal,
        SolverChoice::Treewidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverChoice::Auto => "auto",
            SolverChoice::Brute => "brute",
            SolverChoice::Tree => "tree",
            SolverChoice::Cycle => "cycle",
            SolverChoice::Chordal => "chordal",
            SolverChoice::Treewidth => "treewidth",
        }
    }
}

impl fmt::Display for SolverChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SolverChoice::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown solver {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub solver: SolverChoice,
    /// Decomposition of the whole graph, used by the treewidth solver.
    pub td: Option<TreeDecomposition>,
    /// Largest edge count handed to the exhaustive solver.
    pub brute_limit: usize,
}

impl Default for SolveRequest {
    fn default() -> Self {
        SolveRequest {
            solver: SolverChoice::Auto,
            td: None,
            brute_limit: DEFAULT_EDGE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: Solution,
    /// Solver used on each component with at least one edge, in component order.
    pub used: Vec<SolverChoice>,
}

/// Solver `auto` picks for a connected graph.
pub fn auto_choice(g: &WeightedGraph, brute_limit: usize) -> SolverChoice {
    let report = classify(g);
    if report.is_tree {
        SolverChoice::Tree
    } else if report.max_degree <= 2 {
        SolverChoice::Cycle
    } else if report.chordal_peo.is_some() && report.all_weights_nonnegative {
        SolverChoice::Chordal
    } else if g.m() <= brute_limit {
        SolverChoice::Brute
    } else {
        SolverChoice::Treewidth
    }
}

/// Restriction of `td` to `vertices`, renumbered by position in `vertices`.
fn restrict(td: &TreeDecomposition, vertices: &[VertexId], n: usize) -> TreeDecomposition {
    let mut index = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let bags = td
        .bags
        .iter()
        .map(|b| {
            b.iter()
                .filter(|&&v| index[v] != usize::MAX)
                .map(|&v| index[v])
                .collect()
        })
        .collect();
    TreeDecomposition::new(bags, td.edges.clone())
}

fn solve_connected(
    g: &WeightedGraph,
    choice: SolverChoice,
    td: Option<TreeDecomposition>,
    brute_limit: usize,
) -> Result<(Solution, SolverChoice)> {
    let choice = match choice {
        SolverChoice::Auto if td.is_some() => SolverChoice::Treewidth,
        SolverChoice::Auto => auto_choice(g, brute_limit),
        c => c,
    };
    let sol = match choice {
        SolverChoice::Tree => solve_tree(g)?,
        SolverChoice::Cycle => solve_degree_two(g)?,
        SolverChoice::Chordal => {
            if !is_chordal(g) {
                return precondition("chordal solver needs a chordal graph");
            }
            if let Some(e) = g.edges().iter().find(|e| e.w < 0) {
                return precondition(format!(
                    "chordal solver needs non-negative weights, edge {}-{} has weight {}",
                    e.u + 1,
                    e.v + 1,
                    e.w
                ));
            }
            solve_chordal(g)?
        }
        SolverChoice::Brute => {
            let r = brute_mwcm(g, brute_limit)?;
            Solution::new(r.witness)
        }
        SolverChoice::Treewidth => {
            let td = td.unwrap_or_else(|| heuristic_td(g, Heuristic::MinFill));
            solve_treewidth(g, &td)?
        }
        SolverChoice::Auto => unreachable!("resolved above"),
    };
    Ok((sol, choice))
}

/// Solves every component with at least one edge and keeps the best.
pub fn dispatch_solve(g: &WeightedGraph, req: &SolveRequest) -> Result<SolveReport> {
    if let Some(td) = &req.td {
        validate_td(g, td)?;
    }
    let parts: Vec<Vec<VertexId>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    let whole = parts.len() == 1 && parts[0].len() == g.n();
    let results: Vec<(Solution, SolverChoice, Vec<VertexId>)> = parts
        .into_par_iter()
        .map(|part| {
            let (sub, map) = g.induced(&part);
            let td = match &req.td {
                Some(td) if whole => Some(td.clone()),
                Some(td) => Some(restrict(td, &part, g.n())),
                None => None,
            };
            let (sol, used) = solve_connected(&sub, req.solver, td, req.brute_limit)?;
            Ok((sol, used, map))
        })
        .collect::<Result<_>>()?;
    let mut best = Solution::default();
    let mut used = Vec::new();
    for (sol, choice, map) in results {
        used.push(choice);
        if sol.weight > best.weight {
            let (sub, _) = g.induced(&map);
            let pairs: Vec<_> = sol
                .matching
                .pairs(&sub)
                .into_iter()
                .map(|(u, v)| (map[u], map[v]))
                .collect();
            best = Solution::new(Matching::from_pairs(g, &pairs)?);
        }
    }
    Ok(SolveReport { solution: best, used })
}

/// Accepts iff `G[V(m)]` is connected and `w(m) ≥ k`. Invalid matchings are errors.
pub fn verify_certificate(g: &WeightedGraph, m: &Matching, k: Weight) -> Result<bool> {
    m.recheck(g)?;
    Ok(is_connected_subset(g, m.saturated()) && m.weight() >= k)
}

/// Accepts iff `G[vs]` is connected and the total weight is at least `k`.
pub fn verify_vertex_set(g: &VertexWeightedGraph, vs: &[VertexId], k: Weight) -> Result<bool> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Certificate(format!("vertex {} listed twice", w[0] + 1)));
        }
    }
    if let Some(&v) = sorted.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let weight: Weight = sorted.iter().map(|&v| g.weight(v)).sum();
    Ok(g.subset_connected(&sorted) && weight >= k)
}
