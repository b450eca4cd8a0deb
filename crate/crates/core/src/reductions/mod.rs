//! Gadget constructions as instance generators, with label maps and
//! certificate translation in both directions.

mod label;
mod sat;
mod source;
mod steiner;
mod wcs;

pub mod examples;

use std::collections::HashMap;
use std::fmt;

pub use label::Label;
pub use sat::{gen_bip4, gen_crosscomp, gen_planar_bipartite, gen_starlike};
pub use source::{Cnf, Literal, SetCoverInstance, SteinerInstance, SteinerTree};
pub use steiner::{gen_planar_subcubic, SteinerParams};
pub use wcs::{gen_setcover_to_wcs, gen_wcs_to_wcm, wcs_q};

use crate::error::{Error, Result};
use crate::graph::{induced_by_matching_connected, Matching, VertexId, VertexWeightedGraph, Weight, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Starlike,
    Bip4,
    Steiner,
    PlanarBipartite,
    CrossComp,
    WcsToWcm,
    SetCoverToWcs,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 7] = [
        ReductionKind::Starlike,
        ReductionKind::Bip4,
        ReductionKind::Steiner,
        ReductionKind::PlanarBipartite,
        ReductionKind::CrossComp,
        ReductionKind::WcsToWcm,
        ReductionKind::SetCoverToWcs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Starlike => "starlike",
            ReductionKind::Bip4 => "bip4",
            ReductionKind::Steiner => "steiner",
            ReductionKind::PlanarBipartite => "planar-bipartite",
            ReductionKind::CrossComp => "crosscomp",
            ReductionKind::WcsToWcm => "wcs",
            ReductionKind::SetCoverToWcs => "setcover",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown reduction kind {s:?}")))
    }
}

/// Generated graph: edge weights for matching targets, vertex weights for
/// the set cover target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetGraph {
    Edge(WeightedGraph),
    Vertex(VertexWeightedGraph),
}

/// The input a generator was run on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceInstance {
    Cnf(Cnf),
    Family(Vec<Cnf>),
    Steiner(SteinerInstance),
    Wcs { graph: VertexWeightedGraph, k: Weight },
    SetCover(SetCoverInstance),
}

/// Solution of the source problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSolution {
    Assignment(Vec<bool>),
    /// Satisfied member of a composed family, 0-based.
    Selected {
        instance: usize,
        assignment: Vec<bool>,
    },
    Tree(SteinerTree),
    Sets(Vec<usize>),
    Vertices(Vec<VertexId>),
}

/// Solution of the generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Matching(Matching),
    Vertices(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    pub kind: ReductionKind,
    pub graph: TargetGraph,
    pub k: Weight,
    pub labels: Vec<Label>,
    pub source: SourceInstance,
    index: HashMap<Label, VertexId>,
}

impl LabeledInstance {
    pub(crate) fn new(
        kind: ReductionKind,
        graph: TargetGraph,
        k: Weight,
        labels: Vec<Label>,
        source: SourceInstance,
    ) -> Self {
        let index = labels.iter().enumerate().map(|(v, &l)| (l, v)).collect();
        LabeledInstance {
            kind,
            graph,
            k,
            labels,
            source,
            index,
        }
    }

    pub fn edge_graph(&self) -> Result<&WeightedGraph> {
        match &self.graph {
            TargetGraph::Edge(g) => Ok(g),
            TargetGraph::Vertex(_) => Err(Error::Precondition(format!(
                "{} instances are vertex weighted",
                self.kind
            ))),
        }
    }

    pub fn vertex_graph(&self) -> Result<&VertexWeightedGraph> {
        match &self.graph {
            TargetGraph::Vertex(g) => Ok(g),
            TargetGraph::Edge(_) => Err(Error::Precondition(format!(
                "{} instances are edge weighted",
                self.kind
            ))),
        }
    }

    pub fn vertex(&self, l: Label) -> Option<VertexId> {
        self.index.get(&l).copied()
    }

    pub(crate) fn at(&self, l: Label) -> VertexId {
        self.index[&l]
    }

    pub fn label(&self, v: VertexId) -> Label {
        self.labels[v]
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Accepts a target certificate of weight at least `k` whose saturated
    /// (or chosen) vertices induce a connected subgraph.
    pub fn check_certificate(&self, cert: &Certificate) -> Result<()> {
        match (cert, &self.graph) {
            (Certificate::Matching(m), TargetGraph::Edge(g)) => {
                m.recheck(g)?;
                if !induced_by_matching_connected(g, m)? {
                    return Err(Error::Certificate(
                        "matched vertices do not induce a connected subgraph".into(),
                    ));
                }
                if m.weight() < self.k {
                    return Err(Error::Certificate(format!("weight {} is below {}", m.weight(), self.k)));
                }
                Ok(())
            }
            (Certificate::Vertices(vs), TargetGraph::Vertex(g)) => {
                let w = wcs::check_wcs(g, vs)?;
                if w < self.k {
                    return Err(Error::Certificate(format!("weight {w} is below {}", self.k)));
                }
                Ok(())
            }
            _ => Err(Error::Certificate(format!("wrong certificate type for {}", self.kind))),
        }
    }

    /// Independent check of a source solution against the source instance.
    pub fn check_source(&self, sol: &SourceSolution) -> Result<()> {
        match (&self.source, sol) {
            (SourceInstance::Cnf(f), SourceSolution::Assignment(a)) => f.check(a),
            (SourceInstance::Family(fs), SourceSolution::Selected { instance, assignment }) => {
                match fs.get(*instance) {
                    Some(f) => f.check(assignment),
                    None => Err(Error::Source(format!("no instance {}", instance + 1))),
                }
            }
            (SourceInstance::Steiner(s), SourceSolution::Tree(t)) => s.check(t),
            (SourceInstance::SetCover(s), SourceSolution::Sets(c)) => s.check(c),
            (SourceInstance::Wcs { graph, k }, SourceSolution::Vertices(vs)) => {
                let w = wcs::check_wcs(graph, vs).map_err(|e| Error::Source(e.to_string()))?;
                if w < *k {
                    return Err(Error::Source(format!("weight {w} is below {k}")));
                }
                Ok(())
            }
            _ => Err(Error::Source(format!("wrong solution type for {}", self.kind))),
        }
    }
}

/// Collects labeled vertices and edges; repeated edges keep their first weight.
pub(crate) struct Builder {
    labels: Vec<Label>,
    index: HashMap<Label, VertexId>,
    edges: Vec<(VertexId, VertexId, Weight)>,
    seen: std::collections::HashSet<(VertexId, VertexId)>,
}

impl Builder {
    pub(crate) fn new() -> Self {
        Builder {
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            seen: Default::default(),
        }
    }

    pub(crate) fn vertex(&mut self, l: Label) -> VertexId {
        if let Some(&v) = self.index.get(&l) {
            return v;
        }
        self.labels.push(l);
        self.index.insert(l, self.labels.len() - 1);
        self.labels.len() - 1
    }

    pub(crate) fn edge(&mut self, a: Label, b: Label, w: Weight) {
        let (u, v) = (self.vertex(a), self.vertex(b));
        if self.seen.insert((u.min(v), u.max(v))) {
            self.edges.push((u, v, w));
        }
    }

    pub(crate) fn finish(self, kind: ReductionKind, k: Weight, source: SourceInstance) -> LabeledInstance {
        let g = WeightedGraph::new(self.labels.len(), self.edges).expect("generated graphs are simple");
        LabeledInstance::new(kind, TargetGraph::Edge(g), k, self.labels, source)
    }
}

/// Runs the generator of `kind` on `source`.
pub fn generate(kind: ReductionKind, source: &SourceInstance) -> Result<LabeledInstance> {
    match (kind, source) {
        (ReductionKind::Starlike, SourceInstance::Cnf(f)) => gen_starlike(f),
        (ReductionKind::Bip4, SourceInstance::Cnf(f)) => gen_bip4(f),
        (ReductionKind::PlanarBipartite, SourceInstance::Cnf(f)) => gen_planar_bipartite(f),
        (ReductionKind::CrossComp, SourceInstance::Family(fs)) => gen_crosscomp(fs),
        (ReductionKind::Steiner, SourceInstance::Steiner(s)) => gen_planar_subcubic(s),
        (ReductionKind::WcsToWcm, SourceInstance::Wcs { graph, k }) => Ok(gen_wcs_to_wcm(graph, *k)),
        (ReductionKind::SetCoverToWcs, SourceInstance::SetCover(s)) => Ok(gen_setcover_to_wcs(s)),
        _ => Err(Error::Precondition(format!("wrong source instance for {kind}"))),
    }
}

/// Source solution to a certificate of the generated instance. The source
/// solution is checked first and the result is checked before returning.
pub fn lift_certificate(inst: &LabeledInstance, sol: &SourceSolution) -> Result<Certificate> {
    inst.check_source(sol)?;
    let cert = match (inst.kind, sol) {
        (
            ReductionKind::Starlike | ReductionKind::Bip4 | ReductionKind::PlanarBipartite,
            SourceSolution::Assignment(a),
        ) => Certificate::Matching(sat::lift_assignment(inst, a)?),
        (ReductionKind::CrossComp, SourceSolution::Selected { instance, assignment }) => {
            Certificate::Matching(sat::lift_selected(inst, *instance, assignment)?)
        }
        (ReductionKind::Steiner, SourceSolution::Tree(t)) => Certificate::Matching(steiner::lift(inst, t)?),
        (ReductionKind::WcsToWcm, SourceSolution::Vertices(vs)) => Certificate::Matching(wcs::lift_wcs(inst, vs)?),
        (ReductionKind::SetCoverToWcs, SourceSolution::Sets(c)) => Certificate::Vertices(wcs::lift_cover(inst, c)?),
        _ => return Err(Error::Source(format!("wrong solution type for {}", inst.kind))),
    };
    inst.check_certificate(&cert)?;
    Ok(cert)
}

/// Certificate of weight at least `k` to a source solution, which is checked
/// before returning.
pub fn project_certificate(inst: &LabeledInstance, cert: &Certificate) -> Result<SourceSolution> {
    inst.check_certificate(cert)?;
    let sol = match (inst.kind, cert) {
        (ReductionKind::Starlike | ReductionKind::Bip4 | ReductionKind::PlanarBipartite, Certificate::Matching(m)) => {
            SourceSolution::Assignment(sat::project_assignment(inst, m))
        }
        (ReductionKind::CrossComp, Certificate::Matching(m)) => sat::project_selected(inst, m)?,
        (ReductionKind::Steiner, Certificate::Matching(m)) => SourceSolution::Tree(steiner::project(inst, m)?),
        (ReductionKind::WcsToWcm, Certificate::Matching(m)) => SourceSolution::Vertices(wcs::project_wcs(inst, m)?),
        (ReductionKind::SetCoverToWcs, Certificate::Vertices(vs)) => {
            SourceSolution::Sets(wcs::project_cover(inst, vs)?)
        }
        _ => return Err(Error::Certificate(format!("wrong certificate type for {}", inst.kind))),
    };
    inst.check_source(&sol)?;
    Ok(sol)
}

/// Matching made of the edges between labeled endpoint pairs.
pub(crate) fn matching_of(inst: &LabeledInstance, pairs: &[(Label, Label)]) -> Result<Matching> {
    let g = inst.edge_graph()?;
    let pairs: Vec<(VertexId, VertexId)> = pairs.iter().map(|&(a, b)| (inst.at(a), inst.at(b))).collect();
    Matching::from_pairs(g, &pairs)
}

/// Whether the labeled pair is an edge of `m`.
pub(crate) fn has_pair(inst: &LabeledInstance, m: &Matching, a: Label, b: Label) -> bool {
    let (Some(u), Some(v)) = (inst.vertex(a), inst.vertex(b)) else {
        return false;
    };
    let Ok(g) = inst.edge_graph() else { return false };
    g.edge_between(u, v).is_some_and(|i| m.edges().contains(&i))
}
