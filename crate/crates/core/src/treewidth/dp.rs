//! Connected matching DP over a nice tree decomposition.
//!
//! Cell `(S, U)` of a node holds weighted partitions of `S ∪ U`, where `S`
//! are bag vertices matched inside the subtree and `U` are bag vertices
//! already in the solution whose partner is introduced further up.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::partition::{Partition, MAX_ELEMENTS};
use super::wps::{reduce, reduce_bound, rmc, survives_projection, WeightedPartitionSet};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Matching, Solution, VertexId, Weight, WeightedGraph};
use crate::treedecomp::{
    heuristic_td, make_nice, validate_td, Heuristic, NiceTreeDecomposition, NodeKind, TreeDecomposition,
};

/// `(S, U)` as slot masks.
pub type Cell = (u16, u16);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Leaf,
    Child { cell: Cell, idx: u32 },
    Matched { cell: Cell, idx: u32, edge: u32 },
    Join { left: Cell, li: u32, right: Cell, ri: u32 },
}

pub type Table = BTreeMap<Cell, WeightedPartitionSet<Origin>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpOptions {
    pub reduce: bool,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions { reduce: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpStats {
    pub reduce_calls: u64,
    /// Reduced cells larger than `2^{|S∪U|-1}`; always 0 for a correct reduce.
    pub bound_violations: u64,
    pub largest_cell: usize,
}

impl DpStats {
    fn absorb(&mut self, other: &DpStats) {
        self.reduce_calls += other.reduce_calls;
        self.bound_violations += other.bound_violations;
        self.largest_cell = self.largest_cell.max(other.largest_cell);
    }
}

pub struct DpRun {
    pub tables: Vec<Table>,
    /// Slot of each vertex inside every bag that holds it.
    pub slots: Vec<u8>,
    pub stats: DpStats,
}

fn assign_slots(g: &WeightedGraph, nice: &NiceTreeDecomposition) -> Result<Vec<u8>> {
    let mut slots = vec![u8::MAX; g.n()];
    for x in nice.nodes.iter().rev() {
        if x.bag.len() >= MAX_ELEMENTS {
            return Err(Error::LimitExceeded {
                what: "bag size",
                actual: x.bag.len() + 1,
                limit: MAX_ELEMENTS,
            });
        }
        if let NodeKind::Forget(v) = x.kind {
            let used = x.bag.iter().fold(0u16, |m, &u| m | 1 << slots[u]);
            slots[v] = (!used).trailing_zeros() as u8;
        }
    }
    Ok(slots)
}

struct Builder<'a> {
    g: &'a WeightedGraph,
    slots: &'a [u8],
    reduce: bool,
    stats: DpStats,
}

impl Builder<'_> {
    fn finish(&mut self, cells: BTreeMap<Cell, WeightedPartitionSet<Origin>>) -> Table {
        let mut out = Table::new();
        for (cell, set) in cells {
            let mut set = rmc(set);
            if self.reduce {
                set = reduce(set);
                self.stats.reduce_calls += 1;
                if set.len() > reduce_bound(set.ground().count_ones()) {
                    self.stats.bound_violations += 1;
                }
            }
            self.stats.largest_cell = self.stats.largest_cell.max(set.len());
            if !set.is_empty() {
                out.insert(cell, set);
            }
        }
        out
    }

    fn neighbour_mask(&self, v: VertexId, bag: &[VertexId]) -> u16 {
        bag.iter()
            .filter(|&&u| self.g.has_edge(u, v))
            .fold(0, |m, &u| m | 1 << self.slots[u])
    }

    fn introduce(&mut self, child: &Table, bag: &[VertexId], v: VertexId) -> Table {
        let s = 1u16 << self.slots[v];
        let near = self.neighbour_mask(v, bag);
        let mut cells: BTreeMap<Cell, WeightedPartitionSet<Origin>> = BTreeMap::new();
        for (&(cs, cu), set) in child {
            let ground = cs | cu;
            let out = cells
                .entry((cs, cu))
                .or_insert_with(|| WeightedPartitionSet::new(ground));
            for (i, e) in set.entries().iter().enumerate() {
                let tag = Origin::Child {
                    cell: (cs, cu),
                    idx: i as u32,
                };
                out.push_unchecked(e.partition, e.weight, tag);
            }

            let glue = s | (near & ground);
            let out = cells
                .entry((cs, cu | s))
                .or_insert_with(|| WeightedPartitionSet::new(ground | s));
            for (i, e) in set.entries().iter().enumerate() {
                let tag = Origin::Child {
                    cell: (cs, cu),
                    idx: i as u32,
                };
                out.push_unchecked(e.partition.up_unchecked(ground | s).glue_unchecked(glue), e.weight, tag);
            }

            for &u in bag {
                let su = 1u16 << self.slots[u];
                if cu & su == 0 {
                    continue;
                }
                let Some(edge) = self.g.edge_between(u, v) else {
                    continue;
                };
                let w = self.g.weight(edge);
                let out = cells
                    .entry((cs | s | su, cu & !su))
                    .or_insert_with(|| WeightedPartitionSet::new(ground | s));
                for (i, e) in set.entries().iter().enumerate() {
                    let tag = Origin::Matched {
                        cell: (cs, cu),
                        idx: i as u32,
                        edge: edge as u32,
                    };
                    let p = e.partition.up_unchecked(ground | s).glue_unchecked(glue);
                    out.push_unchecked(p, e.weight + w, tag);
                }
            }
        }
        self.finish(cells)
    }

    fn forget(&mut self, child: &Table, v: VertexId) -> Table {
        let s = 1u16 << self.slots[v];
        let mut cells: BTreeMap<Cell, WeightedPartitionSet<Origin>> = BTreeMap::new();
        for (&(cs, cu), set) in child {
            if cu & s != 0 {
                continue;
            }
            let ground = (cs | cu) & !s;
            let out = cells
                .entry((cs & !s, cu))
                .or_insert_with(|| WeightedPartitionSet::new(ground));
            for (i, e) in set.entries().iter().enumerate() {
                let tag = Origin::Child {
                    cell: (cs, cu),
                    idx: i as u32,
                };
                if cs & s == 0 {
                    out.push_unchecked(e.partition, e.weight, tag);
                } else if survives_projection(&e.partition, s) {
                    out.push_unchecked(e.partition.down_unchecked(ground), e.weight, tag);
                }
            }
        }
        self.finish(cells)
    }

    fn join(&mut self, left: &Table, right: &Table) -> Table {
        let mut by_ground: BTreeMap<u16, Vec<(&Cell, &WeightedPartitionSet<Origin>)>> = BTreeMap::new();
        for (cell, set) in right {
            by_ground.entry(cell.0 | cell.1).or_default().push((cell, set));
        }
        let mut cells: BTreeMap<Cell, WeightedPartitionSet<Origin>> = BTreeMap::new();
        for (&(ls, lu), lset) in left {
            let ground = ls | lu;
            let Some(partners) = by_ground.get(&ground) else {
                continue;
            };
            for &(&(rs, ru), rset) in partners {
                if ls & rs != 0 {
                    continue;
                }
                let out = cells
                    .entry((ls | rs, lu & ru))
                    .or_insert_with(|| WeightedPartitionSet::new(ground));
                for (i, a) in lset.entries().iter().enumerate() {
                    for (j, b) in rset.entries().iter().enumerate() {
                        let tag = Origin::Join {
                            left: (ls, lu),
                            li: i as u32,
                            right: (rs, ru),
                            ri: j as u32,
                        };
                        out.push_unchecked(a.partition.join_unchecked(&b.partition), a.weight + b.weight, tag);
                    }
                }
            }
        }
        self.finish(cells)
    }
}

/// Runs the DP bottom-up over every node of `nice`.
pub fn run_dp(g: &WeightedGraph, nice: &NiceTreeDecomposition, options: DpOptions) -> Result<DpRun> {
    let slots = assign_slots(g, nice)?;
    let mut builder = Builder {
        g,
        slots: &slots,
        reduce: options.reduce,
        stats: DpStats::default(),
    };
    let mut tables: Vec<Table> = Vec::with_capacity(nice.nodes.len());
    for x in &nice.nodes {
        let table = match x.kind {
            NodeKind::Leaf => {
                let mut set = WeightedPartitionSet::new(0);
                set.push_unchecked(Partition::singletons(0), 0, Origin::Leaf);
                Table::from([((0, 0), set)])
            }
            NodeKind::Introduce(v) => builder.introduce(&tables[x.children[0]], &x.bag, v),
            NodeKind::Forget(v) => builder.forget(&tables[x.children[0]], v),
            NodeKind::Join => builder.join(&tables[x.children[0]], &tables[x.children[1]]),
        };
        tables.push(table);
    }
    let stats = builder.stats;
    Ok(DpRun { tables, slots, stats })
}

/// Node just below the root; its bag is `{pi}`.
fn read_node(nice: &NiceTreeDecomposition) -> usize {
    nice.nodes[nice.root()].children[0]
}

/// Heaviest connected matching saturating `pi`, as (weight, entry index).
pub fn read_off(run: &DpRun, nice: &NiceTreeDecomposition) -> Option<(Weight, usize)> {
    let s = 1u16 << run.slots[nice.pi];
    let set = run.tables[read_node(nice)].get(&(s, 0))?;
    let mut best: Option<(Weight, usize)> = None;
    for (i, e) in set.entries().iter().enumerate() {
        if best.is_none_or(|(w, _)| e.weight > w) {
            best = Some((e.weight, i));
        }
    }
    best
}

/// Best weight per cell of the node below the root.
pub fn root_cell_optima(run: &DpRun, nice: &NiceTreeDecomposition) -> BTreeMap<Cell, Weight> {
    run.tables[read_node(nice)]
        .iter()
        .filter_map(|(&cell, set)| set.max_weight().map(|w| (cell, w)))
        .collect()
}

/// Follows provenance links from an entry down to the leaves.
pub fn rebuild(
    g: &WeightedGraph,
    nice: &NiceTreeDecomposition,
    run: &DpRun,
    node: usize,
    cell: Cell,
    idx: usize,
) -> Result<Matching> {
    let mut edges = Vec::new();
    let mut stack = vec![(node, cell, idx)];
    while let Some((x, cell, idx)) = stack.pop() {
        let entry = run.tables[x][&cell].entries()[idx];
        let kids = &nice.nodes[x].children;
        match entry.tag {
            Origin::Leaf => {}
            Origin::Child { cell, idx } => stack.push((kids[0], cell, idx as usize)),
            Origin::Matched { cell, idx, edge } => {
                edges.push(edge as usize);
                stack.push((kids[0], cell, idx as usize));
            }
            Origin::Join { left, li, right, ri } => {
                stack.push((kids[0], left, li as usize));
                stack.push((kids[1], right, ri as usize));
            }
        }
    }
    Matching::new(g, edges)
}

/// Best connected matching that saturates `pi`, if any.
pub fn solve_for_pi(
    g: &WeightedGraph,
    td: &TreeDecomposition,
    pi: VertexId,
    options: DpOptions,
) -> Result<(Option<Solution>, DpStats)> {
    let nice = make_nice(td, pi)?;
    let run = run_dp(g, &nice, options)?;
    let found = match read_off(&run, &nice) {
        Some((_, idx)) => {
            let s = 1u16 << run.slots[pi];
            let m = rebuild(g, &nice, &run, read_node(&nice), (s, 0), idx)?;
            Some(Solution::new(m))
        }
        None => None,
    };
    Ok((found, run.stats))
}

pub fn solve_treewidth_with(
    g: &WeightedGraph,
    td: &TreeDecomposition,
    options: DpOptions,
) -> Result<(Solution, DpStats)> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    validate_td(g, td)?;
    let results: Vec<(Option<Solution>, DpStats)> = (0..g.n())
        .into_par_iter()
        .map(|pi| solve_for_pi(g, td, pi, options))
        .collect::<Result<_>>()?;
    let mut best = Solution::default();
    let mut stats = DpStats::default();
    for (found, s) in results {
        stats.absorb(&s);
        if let Some(sol) = found {
            if sol.weight > best.weight {
                best = sol;
            }
        }
    }
    Ok((best, stats))
}

pub fn solve_treewidth(g: &WeightedGraph, td: &TreeDecomposition) -> Result<Solution> {
    solve_treewidth_with(g, td, DpOptions::default()).map(|(s, _)| s)
}

/// Treewidth solver on a min-fill decomposition.
pub fn solve_treewidth_auto(g: &WeightedGraph) -> Result<Solution> {
    solve_treewidth(g, &heuristic_td(g, Heuristic::MinFill))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_by_matching_connected;
    use crate::graph::tests::{complete, cycle, path};

    fn solve(g: &WeightedGraph) -> Weight {
        let s = solve_treewidth_auto(g).unwrap();
        assert!(induced_by_matching_connected(g, &s.matching).unwrap());
        assert_eq!(s.weight, s.matching.weight());
        s.weight
    }

    #[test]
    fn examples() {
        assert_eq!(solve(&path(&[5])), 5);
        assert_eq!(solve(&path(&[2, 3])), 3);
        assert_eq!(solve(&cycle(&[1; 4])), 2);
        assert_eq!(solve(&path(&[3, -1, 4])), 7);
        assert_eq!(solve(&cycle(&[1; 5])), 2);
        assert_eq!(solve(&complete(4, 1)), 2);
        assert_eq!(solve(&path(&[-2, -1])), 0);
    }

    #[test]
    fn p5_end_edges_are_not_connected() {
        // Ends 10 + 10 would need the unmatched middle vertex.
        assert_eq!(solve(&path(&[10, -1, -100, 10])), 10);
    }

    #[test]
    fn reduce_off_matches_reduce_on() {
        let g = WeightedGraph::new(
            6,
            [
                (0, 1, 3),
                (1, 2, -1),
                (2, 3, 4),
                (3, 0, 2),
                (1, 4, 5),
                (4, 5, -2),
                (5, 2, 6),
                (0, 2, 1),
            ],
        )
        .unwrap();
        let td = heuristic_td(&g, Heuristic::MinFill);
        let on = solve_treewidth_with(&g, &td, DpOptions { reduce: true }).unwrap();
        let off = solve_treewidth_with(&g, &td, DpOptions { reduce: false }).unwrap();
        assert_eq!(on.0.weight, off.0.weight);
        assert_eq!(on.1.bound_violations, 0);
        assert!(on.1.reduce_calls > 0);
    }

    #[test]
    fn rejects_invalid_decomposition() {
        let g = path(&[1, 1]);
        let td = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        assert!(matches!(solve_treewidth(&g, &td), Err(Error::Decomposition(_))));
    }
}
