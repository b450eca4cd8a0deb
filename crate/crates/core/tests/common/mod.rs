#![allow(dead_code)]

use rand::seq::index::sample;
use rand::Rng;
use wcm_core::graph::WeightedGraph;
use wcm_core::random::{random_connected, rng};
use wcm_core::reductions::{Cnf, SteinerInstance};

/// Edge limit that lets the exhaustive solver run on every gadget instance here.
pub const BRUTE: usize = 4096;

/// Three variables and at most three clauses, as in the desk-scale suite.
pub fn small_3sat(seed: u64, count: usize) -> Vec<Cnf> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = r.random_range(0..=3);
            Cnf::random_3sat(&mut r, 3, m)
        })
        .collect()
}

/// Three variables and between four and eight distinct sign patterns, so
/// some formulas are unsatisfiable.
pub fn dense_3sat(seed: u64, count: usize) -> Vec<Cnf> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = r.random_range(4..=8);
            let clauses = sample(&mut r, 8, m)
                .into_iter()
                .map(|p| (0..3).map(|i| if p >> i & 1 == 1 { i + 1 } else { -(i + 1) }).collect())
                .collect();
            Cnf::new(3, clauses).unwrap()
        })
        .collect()
}

pub fn small_monotone(seed: u64, count: usize) -> Vec<Cnf> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = r.random_range(0..=3);
            Cnf::random_monotone(&mut r, 3, m)
        })
        .collect()
}

/// Five variables and ten to twenty distinct monotone triples; all twenty
/// together are unsatisfiable.
pub fn dense_monotone(seed: u64, count: usize) -> Vec<Cnf> {
    let mut triples = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                triples.push(vec![a, b, c]);
                triples.push(vec![-a, -b, -c]);
            }
        }
    }
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let m = if i == 0 { 20 } else { r.random_range(10..=20) };
            let clauses = sample(&mut r, 20, m).into_iter().map(|j| triples[j].clone()).collect();
            Cnf::new(5, clauses).unwrap()
        })
        .collect()
}

pub fn satisfiable(f: &Cnf) -> bool {
    f.brute_satisfy().unwrap().is_some()
}

fn unweighted(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
    WeightedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, 1))).unwrap()
}

/// `C_3` and `P_3` with every non-empty terminal set and budgets 1 to 3.
pub fn tiny_steiner() -> Vec<SteinerInstance> {
    let graphs = [
        unweighted(3, &[(0, 1), (1, 2), (2, 0)]),
        unweighted(3, &[(0, 1), (1, 2)]),
    ];
    let mut out = Vec::new();
    for g in &graphs {
        for mask in 1..8usize {
            let terminals: Vec<usize> = (0..3).filter(|&v| mask >> v & 1 == 1).collect();
            for budget in 1..=3 {
                out.push(SteinerInstance::new(g.clone(), terminals.clone(), budget).unwrap());
            }
        }
    }
    out
}

/// Small random connected graphs with random terminals and budgets.
pub fn random_steiner(seed: u64, count: usize) -> Vec<SteinerInstance> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(2..=5);
            let g = random_connected(&mut r, n, 0.3, 1, 1);
            let t = r.random_range(1..=n);
            let terminals = sample(&mut r, n, t).into_vec();
            let budget = r.random_range(1..n.max(2));
            SteinerInstance::new(g, terminals, budget).unwrap()
        })
        .collect()
}
