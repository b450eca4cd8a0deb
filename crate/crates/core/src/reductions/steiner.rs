//! Steiner tree to a planar subcubic instance with weights in `{−1, 1}`.

use super::label::Label::{self, *};
use super::source::{spanning_tree, SteinerInstance, SteinerTree};
use super::{matching_of, Builder, LabeledInstance, ReductionKind, SourceInstance};
use crate::error::{precondition, Error, Result};
use crate::graph::{is_connected, Matching, VertexId, Weight, WeightedGraph};

/// `q = Δ(G′)`, `p = q(|V′| − |R|) + 1`, `r = p|E′| + 1`, `k = r|R| − pk′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteinerParams {
    pub q: Weight,
    pub p: Weight,
    pub r: Weight,
    pub k: Weight,
}

impl SteinerParams {
    pub fn of(inst: &SteinerInstance) -> Self {
        let g = &inst.graph;
        let terminals = inst.terminals.len() as Weight;
        let q = g.max_degree() as Weight;
        let p = q * (g.n() as Weight - terminals) + 1;
        let r = p * g.m() as Weight + 1;
        let k = r * terminals - p * inst.budget as Weight;
        SteinerParams { q, p, r, k }
    }
}

fn steiner(inst: &LabeledInstance) -> &SteinerInstance {
    match &inst.source {
        SourceInstance::Steiner(s) => s,
        _ => unreachable!("steiner instances keep their source"),
    }
}

/// Length of the gadget for `w`: `2r` for terminals, `2q` otherwise.
fn gadget_len(s: &SteinerInstance, params: &SteinerParams, w: VertexId) -> usize {
    let half = if s.terminals.binary_search(&w).is_ok() {
        params.r
    } else {
        params.q
    };
    2 * half as usize
}

/// Label of position `t` on the gadget of `w`. The port for the `i`-th
/// neighbour of `w`, in adjacency order, sits at `⌊i·len/d⌋`; these are
/// distinct because `len ≥ 2d`.
fn gadget_label(g: &WeightedGraph, len: usize, w: VertexId, t: usize) -> Label {
    let d = g.degree(w);
    if d > 0 {
        let i = (t * d).div_ceil(len);
        if i < d && i * len / d == t {
            return Port(w, g.adjacency(w)[i].0);
        }
    }
    Cycle(w, t)
}

pub fn gen_planar_subcubic(s: &SteinerInstance) -> Result<LabeledInstance> {
    let g = &s.graph;
    if s.terminals.is_empty() {
        return precondition("steiner instance needs at least one terminal");
    }
    if !is_connected(g) {
        return precondition("steiner instance needs a connected graph");
    }
    let params = SteinerParams::of(s);
    let mut b = Builder::new();
    for w in 0..g.n() {
        let len = gadget_len(s, &params, w);
        let at = |t| gadget_label(g, len, w, t);
        for t in 0..len {
            b.vertex(at(t));
        }
        for t in 0..len.saturating_sub(1) {
            b.edge(at(t), at(t + 1), 1);
        }
        if len >= 3 {
            b.edge(at(len - 1), at(0), 1);
        }
    }
    let len = 2 * params.p as usize;
    for e in g.edges() {
        let (w, u) = e.key();
        for t in 0..len - 1 {
            b.edge(Path(w, u, t), Path(w, u, t + 1), -1);
        }
        b.edge(Port(w, u), Path(w, u, 0), -1);
        b.edge(Path(w, u, len - 1), Port(u, w), -1);
    }
    Ok(b.finish(ReductionKind::Steiner, params.k, SourceInstance::Steiner(s.clone())))
}

/// Perfect matchings of the gadgets of `V_T` and of the paths of `E_T`.
pub(super) fn lift(inst: &LabeledInstance, tree: &SteinerTree) -> Result<Matching> {
    let s = steiner(inst);
    let g = &s.graph;
    let params = SteinerParams::of(s);
    let mut pairs = Vec::new();
    for &w in &tree.vertices {
        let len = gadget_len(s, &params, w);
        for t in (0..len).step_by(2) {
            pairs.push((gadget_label(g, len, w, t), gadget_label(g, len, w, t + 1)));
        }
    }
    let len = 2 * params.p as usize;
    for &(a, c) in &tree.edges {
        let (w, u) = (a.min(c), a.max(c));
        for t in (0..len).step_by(2) {
            pairs.push((Path(w, u, t), Path(w, u, t + 1)));
        }
    }
    matching_of(inst, &pairs)
}

/// `V_T` holds vertices whose gadget meets `V(M)`; `E_T` holds edges whose
/// path is fully saturated. The result is a spanning tree of the part of
/// `(V_T, E_T)` holding the terminals, with non-terminal leaves pruned.
pub(super) fn project(inst: &LabeledInstance, m: &Matching) -> Result<SteinerTree> {
    let s = steiner(inst);
    let g = &s.graph;
    let params = SteinerParams::of(s);
    let touched: Vec<bool> = (0..g.n())
        .map(|w| {
            let len = gadget_len(s, &params, w);
            (0..len).any(|t| m.is_saturated(inst.at(gadget_label(g, len, w, t))))
        })
        .collect();
    let len = 2 * params.p as usize;
    let kept: Vec<(VertexId, VertexId, Weight)> = g
        .edges()
        .iter()
        .map(|e| e.key())
        .filter(|&(w, u)| touched[w] && touched[u] && (0..len).all(|t| m.is_saturated(inst.at(Path(w, u, t)))))
        .map(|(w, u)| (w, u, 1))
        .collect();
    let h = WeightedGraph::new(g.n(), kept)?;
    let root = s.terminals[0];
    let part = h
        .components()
        .into_iter()
        .find(|c| c.contains(&root))
        .expect("every vertex lies in a component");
    if let Some(&t) = s.terminals.iter().find(|t| !part.contains(t)) {
        return Err(Error::Certificate(format!(
            "terminals {} and {} are not joined by saturated paths",
            root + 1,
            t + 1
        )));
    }
    Ok(prune(s, spanning_tree(&h, &part)))
}

fn prune(s: &SteinerInstance, mut tree: SteinerTree) -> SteinerTree {
    loop {
        let mut degree = vec![0usize; s.graph.n()];
        for &(u, v) in &tree.edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let leaf = tree
            .vertices
            .iter()
            .copied()
            .find(|&v| degree[v] == 1 && s.terminals.binary_search(&v).is_err());
        let Some(v) = leaf else { return tree };
        tree.vertices.retain(|&x| x != v);
        tree.edges.retain(|&(a, b)| a != v && b != v);
    }
}
