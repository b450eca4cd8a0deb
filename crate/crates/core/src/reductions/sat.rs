//! Constructions from satisfiability: starlike, bipartite of diameter four,
//! planar bipartite and the OR-cross-composition.

use super::label::Label::{self, *};
use super::source::{Cnf, Literal};
use super::{has_pair, matching_of, Builder, LabeledInstance, ReductionKind, SourceInstance, SourceSolution};
use crate::error::{precondition, Error, Result};
use crate::graph::{Matching, Weight};

fn literal_vertex(l: Literal) -> Label {
    let i = l.unsigned_abs() as usize - 1;
    if l > 0 {
        Pos(i)
    } else {
        Neg(i)
    }
}

/// `k = |X| + |C|`; weights in `{−1, 1}`.
pub fn gen_starlike(f: &Cnf) -> Result<LabeledInstance> {
    f.require_three()?;
    let mut b = Builder::new();
    for i in 0..f.vars {
        b.edge(Var(i), Pos(i), 1);
        b.edge(Var(i), Neg(i), 1);
        b.edge(Pos(i), Neg(i), -1);
    }
    for i in 0..f.vars {
        for j in i + 1..f.vars {
            for a in [Pos(i), Neg(i)] {
                for c in [Pos(j), Neg(j)] {
                    b.edge(a, c, -1);
                }
            }
        }
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        b.edge(ClausePlus(j), ClauseMinus(j), 1);
        for &l in clause {
            b.edge(ClauseMinus(j), literal_vertex(l), -1);
            b.edge(ClausePlus(j), literal_vertex(l), -1);
        }
    }
    let k = (f.vars + f.clauses.len()) as Weight;
    Ok(b.finish(ReductionKind::Starlike, k, SourceInstance::Cnf(f.clone())))
}

/// `k = |X| + |C| + 1`; weights in `{0, 1}`. The extra vertex `u` joins every
/// `c_j^+` and is left out when there are no clauses.
pub fn gen_bip4(f: &Cnf) -> Result<LabeledInstance> {
    f.require_three()?;
    let mut b = Builder::new();
    b.edge(HPlus, HMinus, 1);
    for i in 0..f.vars {
        b.edge(Var(i), Pos(i), 1);
        b.edge(Var(i), Neg(i), 1);
        b.edge(Var(i), HPlus, 0);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        b.edge(ClausePlus(j), ClauseMinus(j), 1);
        for &l in clause {
            b.edge(ClausePlus(j), literal_vertex(l), 0);
        }
    }
    for j in 0..f.clauses.len() {
        b.edge(ClausePlus(j), U, 0);
    }
    for i in 0..f.vars {
        b.edge(Pos(i), HMinus, 0);
        b.edge(Neg(i), HMinus, 0);
    }
    for i in 0..f.vars {
        for j in 0..f.vars {
            if i != j {
                b.edge(Var(i), Pos(j), 0);
                b.edge(Var(i), Neg(j), 0);
            }
        }
    }
    let k = (f.vars + f.clauses.len() + 1) as Weight;
    Ok(b.finish(ReductionKind::Bip4, k, SourceInstance::Cnf(f.clone())))
}

/// `k = 2|X| + |C|`; weights in `{0, 1}`. Variables sit on a ring
/// `x_1 v_1 x_2 v_2 … x_n v_n` of zero-weight edges, each `v_i` carries a
/// pendant `u_i`, and each clause joins its literal vertices by zero-weight
/// edges.
pub fn gen_planar_bipartite(f: &Cnf) -> Result<LabeledInstance> {
    f.require_monotone()?;
    let n = f.vars;
    let mut b = Builder::new();
    for i in 0..n {
        b.edge(Var(i), Pos(i), 1);
        b.edge(Var(i), Neg(i), 1);
        b.edge(Ring(i), Pendant(i), 1);
    }
    for i in 0..n {
        b.edge(Ring(i), Var(i), 0);
        b.edge(Ring(i), Var((i + 1) % n), 0);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        for &l in clause {
            b.edge(ClausePlus(j), literal_vertex(l), 0);
        }
        b.edge(ClausePlus(j), ClauseMinus(j), 1);
    }
    let k = (2 * n + f.clauses.len()) as Weight;
    Ok(b.finish(ReductionKind::PlanarBipartite, k, SourceInstance::Cnf(f.clone())))
}

/// Distinct clauses of the family in order of first appearance, and for each
/// formula the indices of its clauses.
fn clause_union(fs: &[Cnf]) -> (Vec<Vec<Literal>>, Vec<Vec<usize>>) {
    let mut all: Vec<Vec<Literal>> = Vec::new();
    let mut members = Vec::new();
    for f in fs {
        let mut mine = Vec::new();
        for c in &f.clauses {
            let c = Cnf::normalized(c);
            let j = match all.iter().position(|d| *d == c) {
                Some(j) => j,
                None => {
                    all.push(c);
                    all.len() - 1
                }
            };
            mine.push(j);
        }
        members.push(mine);
    }
    (all, members)
}

/// `k = |C| + |X| + 2` over the union `C` of all clause sets. Labels: `c.j+`
/// is `c_j`, `c.j-` is `c_j′`, `h+` is `h` and `h-` is `h′`.
pub fn gen_crosscomp(fs: &[Cnf]) -> Result<LabeledInstance> {
    let Some(first) = fs.first() else {
        return precondition("cross-composition needs at least one instance");
    };
    let n = first.vars;
    for (l, f) in fs.iter().enumerate() {
        if f.vars != n {
            return precondition(format!(
                "instance {} has {} variables, instance 1 has {n}",
                l + 1,
                f.vars
            ));
        }
        f.require_three()
            .map_err(|e| Error::Precondition(format!("instance {}: {e}", l + 1)))?;
    }
    let (all, members) = clause_union(fs);
    let mut b = Builder::new();
    for j in 0..all.len() {
        b.edge(ClausePlus(j), ClauseMinus(j), 1);
    }
    for i in 0..n {
        b.edge(Neg(i), Star(i), 1);
        b.edge(Star(i), Pos(i), 1);
    }
    for (j, c) in all.iter().enumerate() {
        for &l in c {
            b.edge(literal_vertex(l), ClausePlus(j), 0);
        }
    }
    b.edge(HPlus, HMinus, 1);
    for i in 0..n {
        b.edge(HPlus, Star(i), 0);
    }
    for l in 0..fs.len() {
        b.edge(Q, Selector(l), 1);
    }
    for (l, mine) in members.iter().enumerate() {
        b.edge(HPlus, Selector(l), 0);
        for j in (0..all.len()).filter(|j| !mine.contains(j)) {
            b.edge(ClauseMinus(j), Selector(l), 0);
        }
    }
    let k = (all.len() + n + 2) as Weight;
    Ok(b.finish(ReductionKind::CrossComp, k, SourceInstance::Family(fs.to_vec())))
}

fn formula(inst: &LabeledInstance) -> &Cnf {
    match &inst.source {
        SourceInstance::Cnf(f) => f,
        _ => unreachable!("assignment reductions keep their formula"),
    }
}

/// Variable edge by truth value, clause edges, and the hub edge for bip4.
pub(super) fn lift_assignment(inst: &LabeledInstance, a: &[bool]) -> Result<Matching> {
    let f = formula(inst);
    let mut pairs: Vec<(Label, Label)> = (0..f.vars)
        .map(|i| (Var(i), if a[i] { Pos(i) } else { Neg(i) }))
        .collect();
    pairs.extend((0..f.clauses.len()).map(|j| (ClausePlus(j), ClauseMinus(j))));
    match inst.kind {
        ReductionKind::Bip4 => pairs.push((HPlus, HMinus)),
        ReductionKind::PlanarBipartite => pairs.extend((0..f.vars).map(|i| (Ring(i), Pendant(i)))),
        _ => {}
    }
    matching_of(inst, &pairs)
}

/// `x_i = T` iff `x_i^+` is saturated.
pub(super) fn project_assignment(inst: &LabeledInstance, m: &Matching) -> Vec<bool> {
    let f = formula(inst);
    (0..f.vars).map(|i| m.is_saturated(inst.at(Pos(i)))).collect()
}

pub(super) fn lift_selected(inst: &LabeledInstance, l: usize, a: &[bool]) -> Result<Matching> {
    let SourceInstance::Family(fs) = &inst.source else {
        unreachable!("cross-composition keeps its family")
    };
    let n = fs[0].vars;
    let clauses = (0..).take_while(|&j| inst.vertex(ClausePlus(j)).is_some()).count();
    let mut pairs: Vec<(Label, Label)> = (0..n).map(|i| (Star(i), if a[i] { Pos(i) } else { Neg(i) })).collect();
    pairs.extend((0..clauses).map(|j| (ClausePlus(j), ClauseMinus(j))));
    pairs.push((HPlus, HMinus));
    pairs.push((Q, Selector(l)));
    matching_of(inst, &pairs)
}

/// The instance is the selector matched to `q`; `x_i = T` iff `x_i^+x_i^*`
/// is matched.
pub(super) fn project_selected(inst: &LabeledInstance, m: &Matching) -> Result<SourceSolution> {
    let SourceInstance::Family(fs) = &inst.source else {
        unreachable!("cross-composition keeps its family")
    };
    let instance = (0..fs.len())
        .find(|&l| has_pair(inst, m, Q, Selector(l)))
        .ok_or_else(|| Error::Certificate("no selector edge is matched".into()))?;
    let assignment = (0..fs[0].vars).map(|i| has_pair(inst, m, Star(i), Pos(i))).collect();
    Ok(SourceSolution::Selected { instance, assignment })
}
