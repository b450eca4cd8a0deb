//! Maximum weight connected matching on chordal graphs with non-negative
//! weights, through a perfect matching of the zero-weight completion.

use crate::blossom::max_weight_perfect_matching;
use crate::error::{precondition, Result};
use crate::graph::{classify, induced_by_matching_connected, Matching, Solution, VertexId, Weight, WeightedGraph};
use crate::treewidth::solve_treewidth_auto;

/// Complete graph on `V` (plus a parity vertex when `|V|` is odd). Edge `i` for
/// `i < g.m()` is edge `i` of the base graph; every later edge weighs 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalCompletion {
    pub base_m: usize,
    pub gp: WeightedGraph,
    pub parity: Option<VertexId>,
    pub fill: Vec<bool>,
}

pub fn build_gp(g: &WeightedGraph) -> ChordalCompletion {
    let n = g.n();
    let parity = (n % 2 == 1).then_some(n);
    let np = n + parity.is_some() as usize;
    let mut edges: Vec<(VertexId, VertexId, i64)> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
    for u in 0..np {
        for v in u + 1..np {
            if v >= n || !g.has_edge(u, v) {
                edges.push((u, v, 0));
            }
        }
    }
    let fill = (0..edges.len()).map(|i| i >= g.m()).collect();
    let gp = WeightedGraph::new(np, edges).expect("completion of a simple graph is simple");
    ChordalCompletion {
        base_m: g.m(),
        gp,
        parity,
        fill,
    }
}

/// Outcome of the completion route. `extraction` is `M_p ∩ E` grown by a
/// maximal set of zero-weight edges; it is optimal whenever it is connected,
/// since every connected matching extends to a perfect matching of `G_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalRun {
    pub mp_weight: Weight,
    pub extraction: Matching,
    pub extraction_connected: bool,
    pub solution: Solution,
}

fn check(g: &WeightedGraph) -> Result<()> {
    let report = classify(g);
    if !report.connected {
        return precondition("chordal solver needs a connected graph");
    }
    if report.chordal_peo.is_none() {
        return precondition("chordal solver needs a chordal graph");
    }
    if !report.all_weights_nonnegative {
        return precondition("chordal solver needs non-negative edge weights");
    }
    Ok(())
}

/// `M_p ∩ E(G)`, then zero-weight edges between unsaturated vertices in key order.
pub fn extract(g: &WeightedGraph, mp: &Matching) -> Result<Matching> {
    let mut edges: Vec<usize> = mp.edges().iter().copied().filter(|&i| i < g.m()).collect();
    let mut saturated = vec![false; g.n()];
    for &i in &edges {
        let e = g.edge(i);
        saturated[e.u] = true;
        saturated[e.v] = true;
    }
    let mut zero: Vec<usize> = (0..g.m()).filter(|&i| g.weight(i) == 0).collect();
    zero.sort_by_key(|&i| g.edge(i).key());
    for i in zero {
        let (u, v) = g.edge(i).key();
        if !saturated[u] && !saturated[v] {
            saturated[u] = true;
            saturated[v] = true;
            edges.push(i);
        }
    }
    Matching::new(g, edges)
}

/// Completion route with an exact fallback: when the extraction is not
/// connected the optimum is recomputed by the tree decomposition DP.
pub fn solve_chordal_run(g: &WeightedGraph) -> Result<ChordalRun> {
    check(g)?;
    let completion = build_gp(g);
    let mp = max_weight_perfect_matching(&completion.gp)?;
    let extraction = extract(g, &mp)?;
    debug_assert_eq!(extraction.weight(), mp.weight());
    let extraction_connected = induced_by_matching_connected(g, &extraction)?;
    let solution = if extraction_connected {
        Solution::new(extraction.clone())
    } else {
        solve_treewidth_auto(g)?
    };
    Ok(ChordalRun {
        mp_weight: mp.weight(),
        extraction,
        extraction_connected,
        solution,
    })
}

pub fn solve_chordal(g: &WeightedGraph) -> Result<Solution> {
    solve_chordal_run(g).map(|r| r.solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    #[test]
    fn completion_shapes() {
        let p3 = build_gp(&path(&[1, 1]));
        assert_eq!(p3.gp.n(), 4);
        assert_eq!(p3.gp.m(), 6);
        assert_eq!(p3.parity, Some(3));
        assert_eq!(p3.fill.iter().filter(|&&f| f).count(), 4);

        let k4 = build_gp(&complete(4, 1));
        assert_eq!((k4.gp.n(), k4.gp.m(), k4.parity), (4, 6, None));
        assert!(k4.fill.iter().all(|&f| !f));

        let k2 = build_gp(&path(&[3]));
        assert_eq!((k2.gp.n(), k2.gp.m()), (2, 1));
    }

    #[test]
    fn examples() {
        let s = solve_chordal(&complete(4, 1)).unwrap();
        assert_eq!(s.weight, 2);
        assert!(induced_by_matching_connected(&complete(4, 1), &s.matching).unwrap());
        let s = solve_chordal(&path(&[0])).unwrap();
        assert_eq!(s.weight, 0);
        assert_eq!(s.matching.len(), 1);
    }

    #[test]
    fn disconnected_extraction_falls_back() {
        let g = path(&[2, 1, 1, 2]);
        let run = solve_chordal_run(&g).unwrap();
        assert_eq!(run.mp_weight, 4);
        assert_eq!(run.extraction.weight(), 4);
        assert!(!run.extraction_connected);
        assert_eq!(run.solution.weight, 3);
        assert!(induced_by_matching_connected(&g, &run.solution.matching).unwrap());
    }

    #[test]
    fn preconditions() {
        assert!(solve_chordal(&path(&[1, -1])).is_err());
        assert!(solve_chordal(&cycle(&[1; 4])).is_err());
    }
}
