mod common;

use common::*;
use rand::Rng;
use wcm_core::graph::{VertexWeightedGraph, WeightedGraph};
use wcm_core::io;
use wcm_core::oracle::{brute_mwcm, brute_wcs};
use wcm_core::random::{random_connected, rng};
use wcm_core::reductions::{
    examples, gen_bip4, gen_crosscomp, gen_planar_bipartite, gen_planar_subcubic, gen_setcover_to_wcs, gen_starlike,
    gen_wcs_to_wcm, generate, lift_certificate, project_certificate, Certificate, Cnf, LabeledInstance, ReductionKind,
    SetCoverInstance, SourceSolution,
};

fn edge(inst: &LabeledInstance) -> &WeightedGraph {
    inst.edge_graph().unwrap()
}

/// Lifted certificates verify, and projecting them yields accepted source solutions.
fn round_trip(inst: &LabeledInstance, sol: SourceSolution) {
    let cert = lift_certificate(inst, &sol).unwrap();
    inst.check_certificate(&cert).unwrap();
    let back = project_certificate(inst, &cert).unwrap();
    inst.check_source(&back).unwrap();
}

/// The optimum reaches `k` exactly when the source is a yes-instance, and
/// then the oracle witness projects to an accepted source solution.
fn brute_agrees(inst: &LabeledInstance, yes: bool) {
    let res = brute_mwcm(edge(inst), BRUTE).unwrap();
    assert_eq!(res.optimum >= inst.k, yes, "{} instance, k = {}", inst.kind, inst.k);
    if yes {
        let sol = project_certificate(inst, &Certificate::Matching(res.witness)).unwrap();
        inst.check_source(&sol).unwrap();
    }
}

fn file_round_trip(inst: &LabeledInstance) {
    let text = io::write_target(inst);
    let again = match inst.vertex_graph() {
        Ok(_) => {
            let (g, k) = io::parse_wcs(&text).unwrap();
            io::write_wcs(&g, k)
        }
        Err(_) => io::write_graph(&io::parse_graph(&format!("c {}\n{text}", inst.kind)).unwrap()),
    };
    assert_eq!(again, text);
    let map = io::write_map(inst.k, &inst.labels);
    assert_eq!(io::parse_map(&map).unwrap(), (inst.k, inst.labels.clone()));
    let source = io::write_source(&inst.source);
    let regenerated = generate(inst.kind, &io::parse_source(inst.kind, &source).unwrap()).unwrap();
    assert_eq!(regenerated, *inst);
}

#[test]
fn sat_gadgets_round_trip_and_agree_with_truth_tables() {
    let mut formulas = vec![examples::sat_formula(), examples::diameter_formula()];
    formulas.extend(small_3sat(11, 30));
    formulas.extend(dense_3sat(12, 30));
    for f in &formulas {
        let a = f.brute_satisfy().unwrap();
        for inst in [gen_starlike(f).unwrap(), gen_bip4(f).unwrap()] {
            brute_agrees(&inst, a.is_some());
            file_round_trip(&inst);
            if let Some(a) = &a {
                round_trip(&inst, SourceSolution::Assignment(a.clone()));
            }
        }
    }
}

#[test]
fn planar_bipartite_round_trips() {
    let mut formulas = vec![examples::monotone_formula()];
    formulas.extend(small_monotone(13, 15));
    formulas.extend(dense_monotone(14, 6));
    for f in &formulas {
        let inst = gen_planar_bipartite(f).unwrap();
        let a = f.brute_satisfy().unwrap();
        brute_agrees(&inst, a.is_some());
        file_round_trip(&inst);
        if let Some(a) = a {
            round_trip(&inst, SourceSolution::Assignment(a));
        }
    }
}

#[test]
fn cross_composition_selects_a_satisfied_member() {
    let pool = dense_3sat(15, 24);
    for t in 1..=3 {
        for group in pool.chunks(t) {
            let inst = gen_crosscomp(group).unwrap();
            let yes = group.iter().any(satisfiable);
            brute_agrees(&inst, yes);
            file_round_trip(&inst);
            for (l, f) in group.iter().enumerate() {
                if let Some(a) = f.brute_satisfy().unwrap() {
                    round_trip(
                        &inst,
                        SourceSolution::Selected {
                            instance: l,
                            assignment: a,
                        },
                    );
                }
            }
        }
    }
}

#[test]
fn steiner_yes_instances_match_on_tiny_graphs() {
    let mut yes = 0;
    let instances = tiny_steiner();
    for s in &instances {
        let inst = gen_planar_subcubic(s).unwrap();
        let tree = s.brute_solve().unwrap();
        brute_agrees(&inst, tree.is_some());
        if let Some(t) = tree {
            round_trip(&inst, SourceSolution::Tree(t));
            yes += 1;
        }
    }
    assert!(yes > 0 && yes < instances.len());
}

#[test]
fn steiner_examples_lift_every_named_tree() {
    let six = examples::steiner_six();
    let inst = gen_planar_subcubic(&six).unwrap();
    file_round_trip(&inst);
    for t in examples::steiner_six_trees() {
        round_trip(&inst, SourceSolution::Tree(t));
    }
    for s in random_steiner(16, 10) {
        let inst = gen_planar_subcubic(&s).unwrap();
        if let Some(t) = s.brute_solve().unwrap() {
            round_trip(&inst, SourceSolution::Tree(t));
        }
    }
}

fn random_wcs(seed: u64) -> (VertexWeightedGraph, i64) {
    let mut r = rng(seed);
    let n = r.random_range(1..=7);
    let skeleton = random_connected(&mut r, n, 0.3, 1, 1);
    let weights = (0..n).map(|_| r.random_range(-6..=6)).collect();
    let edges = skeleton.edges().iter().map(|e| (e.u, e.v)).collect();
    let k = r.random_range(-2..=10);
    (VertexWeightedGraph::new(weights, edges).unwrap(), k)
}

#[test]
fn wcs_instances_keep_their_answers() {
    for seed in 0..40 {
        let (g, k) = random_wcs(seed);
        let inst = gen_wcs_to_wcm(&g, k);
        let best = brute_wcs(&g, 20).unwrap();
        brute_agrees(&inst, best.optimum >= k);
        file_round_trip(&inst);
        if best.optimum >= k {
            round_trip(&inst, SourceSolution::Vertices(best.witness));
        }
    }
    let (g, k) = examples::wcs_graph();
    round_trip(
        &gen_wcs_to_wcm(&g, k),
        SourceSolution::Vertices(examples::wcs_solution()),
    );
}

/// Smallest covers by checking every family of sets.
fn min_cover(s: &SetCoverInstance) -> Vec<usize> {
    let p = s.sets.len();
    (0u32..1 << p)
        .map(|mask| (0..p).filter(|&j| mask >> j & 1 == 1).collect::<Vec<_>>())
        .filter(|c| (0..s.universe).all(|u| c.iter().any(|&j| s.sets[j].contains(&u))))
        .min_by_key(|c| c.len())
        .unwrap()
}

#[test]
fn set_cover_instances_keep_their_answers() {
    let mut r = rng(17);
    let mut instances = vec![examples::set_cover()];
    for _ in 0..30 {
        let q = r.random_range(1..=4);
        let p = r.random_range(1..=4);
        let mut sets: Vec<Vec<usize>> = (0..p)
            .map(|_| (0..q).filter(|_| r.random_bool(0.4)).collect::<Vec<_>>())
            .map(|s: Vec<usize>| if s.is_empty() { vec![0] } else { s })
            .collect();
        sets[0] = (0..q).collect();
        let budget = r.random_range(1..=p);
        instances.push(SetCoverInstance::new(q, sets, budget).unwrap());
    }
    for s in &instances {
        let inst = gen_setcover_to_wcs(s);
        let cover = min_cover(s);
        let yes = cover.len() <= s.budget;
        let g = inst.vertex_graph().unwrap();
        let best = brute_wcs(g, 20).unwrap();
        assert_eq!(best.optimum >= inst.k, yes, "{s:?}");
        file_round_trip(&inst);
        if yes {
            round_trip(&inst, SourceSolution::Sets(cover));
            let sol = project_certificate(&inst, &Certificate::Vertices(best.witness)).unwrap();
            inst.check_source(&sol).unwrap();
        }
    }
}

#[test]
fn generators_reject_bad_sources() {
    let four = Cnf::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
    assert!(gen_starlike(&four).is_err());
    assert!(gen_bip4(&four).is_err());
    assert!(gen_crosscomp(&[four]).is_err());
    let mixed = Cnf::new(3, vec![vec![1, -2, 3]]).unwrap();
    assert!(gen_planar_bipartite(&mixed).is_err());
    let f = examples::sat_formula();
    let inst = gen_starlike(&f).unwrap();
    assert!(lift_certificate(&inst, &SourceSolution::Assignment(vec![true; 5])).is_ok());
    assert!(lift_certificate(&inst, &SourceSolution::Assignment(vec![false; 5])).is_err());
    assert!(lift_certificate(&inst, &SourceSolution::Sets(vec![0])).is_err());
    assert!(project_certificate(&inst, &Certificate::Vertices(vec![0])).is_err());
    assert!(generate(ReductionKind::Steiner, &inst.source).is_err());
}
