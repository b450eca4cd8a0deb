//! Weighted connected subgraph: the reduction to connected matchings and
//! the set cover construction that produces it.

use super::label::Label::*;
use super::source::SetCoverInstance;
use super::{matching_of, Builder, LabeledInstance, ReductionKind, SourceInstance, TargetGraph};
use crate::error::{Error, Result};
use crate::graph::{Matching, VertexId, VertexWeightedGraph, Weight};

/// Weight of a vertex set inducing a connected subgraph; the empty set weighs 0.
pub(super) fn check_wcs(g: &VertexWeightedGraph, vs: &[VertexId]) -> Result<Weight> {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Certificate("repeated vertex".into()));
    }
    if let Some(&v) = sorted.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.subset_connected(&sorted) {
        return Err(Error::Certificate(
            "chosen vertices do not induce a connected subgraph".into(),
        ));
    }
    Ok(sorted.iter().map(|&v| g.weight(v)).sum())
}

/// `q = 1 + Σ` positive vertex weights. Each vertex `w` becomes an edge
/// `v_w u_w` of weight `weight(w)` and each edge `xy` becomes `v_x v_y` of
/// weight `−q`; `k = k′`.
pub fn gen_wcs_to_wcm(gvw: &VertexWeightedGraph, k: Weight) -> LabeledInstance {
    let q = wcs_q(gvw);
    let mut b = Builder::new();
    for w in 0..gvw.n() {
        b.edge(Vert(w), Pair(w), gvw.weight(w));
    }
    for &(x, y) in gvw.edges() {
        b.edge(Vert(x), Vert(y), -q);
    }
    b.finish(
        ReductionKind::WcsToWcm,
        k,
        SourceInstance::Wcs { graph: gvw.clone(), k },
    )
}

pub fn wcs_q(gvw: &VertexWeightedGraph) -> Weight {
    1 + gvw.weights().iter().filter(|&&w| w > 0).sum::<Weight>()
}

pub(super) fn lift_wcs(inst: &LabeledInstance, vs: &[VertexId]) -> Result<Matching> {
    let pairs: Vec<_> = vs.iter().map(|&w| (Vert(w), Pair(w))).collect();
    matching_of(inst, &pairs)
}

/// Vertices whose pendant edge is matched. A matching that uses a `−q` edge
/// weighs below zero, so then the empty set already meets `k′`.
pub(super) fn project_wcs(inst: &LabeledInstance, m: &Matching) -> Result<Vec<VertexId>> {
    let g = inst.edge_graph()?;
    if m.edges().iter().any(|&i| {
        let e = g.edge(i);
        matches!((inst.label(e.u), inst.label(e.v)), (Vert(_), Vert(_)))
    }) {
        return Ok(Vec::new());
    }
    let mut out: Vec<VertexId> = m
        .edges()
        .iter()
        .map(|&i| match inst.label(g.edge(i).u) {
            Vert(w) | Pair(w) => w,
            l => unreachable!("unexpected label {l}"),
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Hub `h` and element vertices `s_u` weigh `p + 1`, set vertices `c_T`
/// weigh `−1`; `k = (q + 1)(p + 1) − k′` with `q = |U|`, `p = |S|`.
pub fn gen_setcover_to_wcs(inst: &SetCoverInstance) -> LabeledInstance {
    let q = inst.universe as Weight;
    let p = inst.sets.len() as Weight;
    let mut labels = vec![Hub];
    labels.extend((0..inst.universe).map(Element));
    labels.extend((0..inst.sets.len()).map(Set));
    let mut weights = vec![p + 1; 1 + inst.universe];
    weights.extend(std::iter::repeat_n(-1, inst.sets.len()));
    let set_vertex = |j: usize| 1 + inst.universe + j;
    let mut edges = Vec::new();
    for (j, s) in inst.sets.iter().enumerate() {
        let mut members = s.clone();
        members.sort_unstable();
        members.dedup();
        edges.extend(members.into_iter().map(|u| (1 + u, set_vertex(j))));
    }
    edges.extend((0..inst.sets.len()).map(|j| (0, set_vertex(j))));
    let g = VertexWeightedGraph::new(weights, edges).expect("set cover graph is simple");
    let k = (q + 1) * (p + 1) - inst.budget as Weight;
    LabeledInstance::new(
        ReductionKind::SetCoverToWcs,
        TargetGraph::Vertex(g),
        k,
        labels,
        SourceInstance::SetCover(inst.clone()),
    )
}

fn cover(inst: &LabeledInstance) -> &SetCoverInstance {
    match &inst.source {
        SourceInstance::SetCover(s) => s,
        _ => unreachable!("set cover instances keep their source"),
    }
}

pub(super) fn lift_cover(inst: &LabeledInstance, chosen: &[usize]) -> Result<Vec<VertexId>> {
    let s = cover(inst);
    let mut sets = chosen.to_vec();
    sets.sort_unstable();
    sets.dedup();
    let mut out: Vec<VertexId> = (0..=s.universe).collect();
    out.extend(sets.into_iter().map(|j| inst.at(Set(j))));
    Ok(out)
}

/// Sets whose vertex is chosen; with a budget of at least `|S|` every set.
pub(super) fn project_cover(inst: &LabeledInstance, vs: &[VertexId]) -> Result<Vec<usize>> {
    let s = cover(inst);
    if s.budget >= s.sets.len() {
        return Ok((0..s.sets.len()).collect());
    }
    let mut out: Vec<usize> = vs
        .iter()
        .filter_map(|&v| match inst.label(v) {
            Set(j) => Some(j),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_mwcm, brute_wcs};
    use crate::random::rng;
    use crate::reductions::{lift_certificate, project_certificate, Certificate, SourceSolution};
    use rand::Rng;

    #[test]
    fn single_vertex() {
        let g = VertexWeightedGraph::new(vec![5], vec![]).unwrap();
        let inst = gen_wcs_to_wcm(&g, 5);
        let h = inst.edge_graph().unwrap();
        assert_eq!((h.n(), h.m(), h.weight(0), wcs_q(&g)), (2, 1, 5, 6));
    }

    #[test]
    fn optima_agree_on_random_graphs() {
        let mut r = rng(11);
        for _ in 0..60 {
            let n = r.random_range(1..=7);
            let weights = (0..n).map(|_| r.random_range(-6..=6)).collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if r.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = VertexWeightedGraph::new(weights, edges).unwrap();
            let wcs = brute_wcs(&g, 20).unwrap();
            let inst = gen_wcs_to_wcm(&g, wcs.optimum);
            let m = brute_mwcm(inst.edge_graph().unwrap(), 64).unwrap();
            assert_eq!(m.optimum, wcs.optimum);
            let cert = Certificate::Matching(m.witness);
            let SourceSolution::Vertices(vs) = project_certificate(&inst, &cert).unwrap() else {
                panic!()
            };
            assert!(check_wcs(&g, &vs).unwrap() >= wcs.optimum);
            let back = lift_certificate(&inst, &SourceSolution::Vertices(wcs.witness)).unwrap();
            assert!(inst.check_certificate(&back).is_ok());
        }
    }

    #[test]
    fn tiny_set_cover() {
        let s = SetCoverInstance::new(1, vec![vec![0]], 1).unwrap();
        let inst = gen_setcover_to_wcs(&s);
        assert_eq!(inst.k, 3);
        let g = inst.vertex_graph().unwrap();
        let best = brute_wcs(g, 20).unwrap();
        assert_eq!(best.optimum, 3);
        assert_eq!(best.witness.len(), 3);
        let cert = Certificate::Vertices(best.witness);
        assert_eq!(
            project_certificate(&inst, &cert).unwrap(),
            SourceSolution::Sets(vec![0])
        );
    }

    #[test]
    fn set_cover_round_trip() {
        let s = SetCoverInstance::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3]], 2).unwrap();
        let inst = gen_setcover_to_wcs(&s);
        let g = inst.vertex_graph().unwrap();
        assert_eq!(inst.k, 5 * 5 - 2);
        assert_eq!(brute_wcs(g, 20).unwrap().optimum, inst.k);
        let sol = SourceSolution::Sets(vec![0, 2]);
        let cert = lift_certificate(&inst, &sol).unwrap();
        assert_eq!(project_certificate(&inst, &cert).unwrap(), sol);
        assert!(lift_certificate(&inst, &SourceSolution::Sets(vec![0, 1])).is_err());
    }
}
