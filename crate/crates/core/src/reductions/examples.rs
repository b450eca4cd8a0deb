//! Worked instances. Letters name vertices `a = 0, b = 1, …`.

use super::source::{Cnf, SetCoverInstance, SteinerInstance, SteinerTree};
use crate::graph::{VertexWeightedGraph, Weight, WeightedGraph};

/// `(x1 ∨ ¬x2 ∨ ¬x4) ∧ (x1 ∨ ¬x3 ∨ x5) ∧ (¬x1 ∨ ¬x2 ∨ x4) ∧ (x2 ∨ x3 ∨ x5)`,
/// used for both the starlike and the bipartite constructions.
pub fn sat_formula() -> Cnf {
    Cnf::new(5, vec![vec![1, -2, -4], vec![1, -3, 5], vec![-1, -2, 4], vec![2, 3, 5]]).unwrap()
}

/// `(F, T, F, F, T)`.
pub fn sat_assignment() -> Vec<bool> {
    vec![false, true, false, false, true]
}

/// `(x1 ∨ ¬x2 ∨ ¬x4) ∧ (x1 ∨ ¬x3 ∨ ¬x4) ∧ (¬x1 ∨ ¬x2 ∨ x4) ∧ (x2 ∨ ¬x3 ∨ ¬x4)`.
pub fn diameter_formula() -> Cnf {
    Cnf::new(
        4,
        vec![vec![1, -2, -4], vec![1, -3, -4], vec![-1, -2, 4], vec![2, -3, -4]],
    )
    .unwrap()
}

/// `(x1 ∨ x2 ∨ x5) ∧ (x2 ∨ x3 ∨ x4) ∧ (¬x2 ∨ ¬x4 ∨ ¬x5)`.
pub fn monotone_formula() -> Cnf {
    Cnf::new(5, vec![vec![1, 2, 5], vec![2, 3, 4], vec![-2, -4, -5]]).unwrap()
}

/// `(T, F, T, T, T)`.
pub fn monotone_assignment() -> Vec<bool> {
    vec![true, false, true, true, true]
}

fn unweighted(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
    WeightedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, 1))).unwrap()
}

/// Triangle `abc`, `R = {a, b}`, `k′ = 1`.
pub fn steiner_triangle() -> SteinerInstance {
    SteinerInstance::new(unweighted(3, &[(0, 1), (1, 2), (0, 2)]), vec![0, 1], 1).unwrap()
}

/// Six vertices `a…f` with edges `ab bc ca bd ce de ef eb`, `R = {a, c, d}`,
/// `k′ = 3`. The drawing of this graph is lost; this reconstruction matches
/// its stated parameters and admits the three named trees.
pub fn steiner_six() -> SteinerInstance {
    let edges = [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5), (1, 4)];
    SteinerInstance::new(unweighted(6, &edges), vec![0, 2, 3], 3).unwrap()
}

/// `G[{a,c,d,e}]`, `G[{a,b,c,d}] − ab`, `G[{a,b,c,d}] − bc`.
pub fn steiner_six_trees() -> Vec<SteinerTree> {
    vec![
        SteinerTree {
            vertices: vec![0, 2, 3, 4],
            edges: vec![(0, 2), (2, 4), (3, 4)],
        },
        SteinerTree {
            vertices: vec![0, 1, 2, 3],
            edges: vec![(0, 2), (1, 2), (1, 3)],
        },
        SteinerTree {
            vertices: vec![0, 1, 2, 3],
            edges: vec![(0, 1), (0, 2), (1, 3)],
        },
    ]
}

/// `U = {a…g}`; `T = {a,b,e}`, `W = {a,b,c,d}`, `X = {c,f}`, `Y = {e,f,g}`,
/// `Z = {d}`; `k′ = 2`.
pub fn set_cover() -> SetCoverInstance {
    SetCoverInstance::new(
        7,
        vec![vec![0, 1, 4], vec![0, 1, 2, 3], vec![2, 5], vec![4, 5, 6], vec![3]],
        2,
    )
    .unwrap()
}

/// `{W, Y}`.
pub fn set_cover_solution() -> Vec<usize> {
    vec![1, 3]
}

/// Vertices `a…h` weighing `6, 2, −1, 6, 4, −4, −2, 5` on the path
/// `a b c d e` with the branch `b f g h`; `k′ = 17`. Only the weights and
/// the edge `bf` survive from the drawing.
pub fn wcs_graph() -> (VertexWeightedGraph, Weight) {
    let g = VertexWeightedGraph::new(
        vec![6, 2, -1, 6, 4, -4, -2, 5],
        vec![(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6), (6, 7)],
    )
    .unwrap();
    (g, 17)
}

/// `{a, b, c, d, e}`.
pub fn wcs_solution() -> Vec<usize> {
    vec![0, 1, 2, 3, 4]
}
