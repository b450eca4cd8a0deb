//! Weighted partition sets, their operators, and rank-based reduction.

use std::cmp::Reverse;

use super::partition::{Partition, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::graph::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry<T> {
    pub partition: Partition,
    pub weight: Weight,
    pub tag: T,
}

/// Set of weighted partitions over one ground set. `T` tags each entry with
/// where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPartitionSet<T = ()> {
    ground: u16,
    entries: Vec<Entry<T>>,
}

impl<T: Copy> WeightedPartitionSet<T> {
    pub fn new(ground: u16) -> Self {
        WeightedPartitionSet {
            ground,
            entries: Vec::new(),
        }
    }

    pub fn from_entries(ground: u16, entries: Vec<Entry<T>>) -> Result<Self> {
        let mut set = WeightedPartitionSet::new(ground);
        for e in entries {
            set.push(e.partition, e.weight, e.tag)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, partition: Partition, weight: Weight, tag: T) -> Result<()> {
        if partition.ground() != self.ground {
            return Err(Error::GroundSet("entry ground differs from set ground".into()));
        }
        self.entries.push(Entry { partition, weight, tag });
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, partition: Partition, weight: Weight, tag: T) {
        debug_assert_eq!(partition.ground(), self.ground);
        self.entries.push(Entry { partition, weight, tag });
    }

    pub fn ground(&self) -> u16 {
        self.ground
    }

    pub fn entries(&self) -> &[Entry<T>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_weight(&self) -> Option<Weight> {
        self.entries.iter().map(|e| e.weight).max()
    }
}

/// Keeps the heaviest entry per partition, earliest first on ties.
pub fn rmc<T: Copy>(mut a: WeightedPartitionSet<T>) -> WeightedPartitionSet<T> {
    let mut idx: Vec<usize> = (0..a.entries.len()).collect();
    idx.sort_by_key(|&i| (a.entries[i].partition, Reverse(a.entries[i].weight), i));
    idx.dedup_by_key(|i| a.entries[*i].partition);
    idx.sort_unstable();
    let mut keep = vec![false; a.entries.len()];
    for i in idx {
        keep[i] = true;
    }
    let mut k = keep.iter();
    a.entries.retain(|_| *k.next().unwrap());
    a
}

/// Bound on the size of a reduced set over a ground set of `k` elements.
pub fn reduce_bound(k: u32) -> usize {
    if k == 0 {
        1
    } else {
        1 << (k - 1)
    }
}

/// Representative subset of an rmc-normalised set: rows of the cut matrix,
/// taken heaviest first, that are linearly independent over GF(2).
pub fn reduce<T: Copy>(a: WeightedPartitionSet<T>) -> WeightedPartitionSet<T> {
    let k = a.ground.count_ones();
    if k == 0 || a.entries.len() <= 1 {
        return a;
    }
    let elems: Vec<u8> = (0..MAX_ELEMENTS as u8).filter(|&x| a.ground >> x & 1 == 1).collect();
    let cuts = 1usize << (k - 1);
    // Right-hand sides of the cuts; the smallest element always stays left.
    let right: Vec<u16> = (0..cuts)
        .map(|c| {
            let mut m = 0u16;
            for (i, &e) in elems[1..].iter().enumerate() {
                if c >> i & 1 == 1 {
                    m |= 1 << e;
                }
            }
            m
        })
        .collect();
    let words = cuts.div_ceil(64);

    let mut order: Vec<usize> = (0..a.entries.len()).collect();
    order.sort_by_key(|&i| (Reverse(a.entries[i].weight), i));

    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut kept = Vec::new();
    for i in order {
        if basis.len() == cuts {
            break;
        }
        let blocks = a.entries[i].partition.blocks();
        let mut row = vec![0u64; words];
        for (c, &r) in right.iter().enumerate() {
            if blocks.iter().all(|&b| b & r == 0 || b & r == b) {
                row[c / 64] |= 1 << (c % 64);
            }
        }
        for (pivot, vec) in &basis {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in row.iter_mut().zip(vec) {
                    *x ^= y;
                }
            }
        }
        if let Some(w) = row.iter().position(|&x| x != 0) {
            let pivot = w * 64 + row[w].trailing_zeros() as usize;
            basis.push((pivot, row));
            kept.push(a.entries[i]);
        }
    }
    WeightedPartitionSet {
        ground: a.ground,
        entries: kept,
    }
}

/// `max{w : (p, w) ∈ A, p ⊔ q = {U}}`.
pub fn opt<T: Copy>(q: &Partition, a: &WeightedPartitionSet<T>) -> Result<Option<Weight>> {
    if q.ground() != a.ground {
        return Err(Error::GroundSet("opt needs equal ground sets".into()));
    }
    Ok(a.entries
        .iter()
        .filter(|e| e.partition.join_unchecked(q).is_single_block())
        .map(|e| e.weight)
        .max())
}

pub fn op_union<T: Copy>(a: WeightedPartitionSet<T>, b: WeightedPartitionSet<T>) -> Result<WeightedPartitionSet<T>> {
    if a.ground != b.ground {
        return Err(Error::GroundSet("union needs equal ground sets".into()));
    }
    let mut out = a;
    out.entries.extend(b.entries);
    Ok(rmc(out))
}

/// Adds the elements of `x` (disjoint from the ground set) as singletons.
pub fn op_insert<T: Copy>(x: u16, a: WeightedPartitionSet<T>) -> Result<WeightedPartitionSet<T>> {
    if x & a.ground != 0 {
        return Err(Error::GroundSet("insert needs new elements".into()));
    }
    let ground = a.ground | x;
    let entries = a
        .entries
        .into_iter()
        .map(|e| Entry {
            partition: e.partition.up_unchecked(ground),
            ..e
        })
        .collect();
    Ok(rmc(WeightedPartitionSet { ground, entries }))
}

pub fn op_shift<T: Copy>(w: Weight, mut a: WeightedPartitionSet<T>) -> WeightedPartitionSet<T> {
    for e in &mut a.entries {
        e.weight += w;
    }
    a
}

/// Merges `x` into one block, extending the ground set by `x` if needed.
pub fn op_glue<T: Copy>(x: u16, a: WeightedPartitionSet<T>) -> WeightedPartitionSet<T> {
    let ground = a.ground | x;
    let entries = a
        .entries
        .into_iter()
        .map(|e| Entry {
            partition: e.partition.glue_unchecked(x),
            ..e
        })
        .collect();
    rmc(WeightedPartitionSet { ground, entries })
}

/// Removes `x` from the ground set, dropping partitions in which some element
/// of `x` has no block-mate outside `x`.
pub fn op_project<T: Copy>(x: u16, a: WeightedPartitionSet<T>) -> Result<WeightedPartitionSet<T>> {
    if x & !a.ground != 0 {
        return Err(Error::GroundSet("project needs a subset of the ground set".into()));
    }
    let rest = a.ground & !x;
    let entries = a
        .entries
        .into_iter()
        .filter(|e| survives_projection(&e.partition, x))
        .map(|e| Entry {
            partition: e.partition.down_unchecked(rest),
            ..e
        })
        .collect();
    Ok(rmc(WeightedPartitionSet { ground: rest, entries }))
}

pub(crate) fn survives_projection(p: &Partition, x: u16) -> bool {
    let rest = p.ground() & !x;
    p.blocks().into_iter().all(|b| b & x == 0 || b & rest != 0)
}

/// Pairwise `p↑Û ⊔ q↑Û` with summed weights; `combine` merges the tags.
pub fn op_join<T: Copy, A: Copy, B: Copy>(
    a: &WeightedPartitionSet<A>,
    b: &WeightedPartitionSet<B>,
    mut combine: impl FnMut(&Entry<A>, &Entry<B>) -> T,
) -> WeightedPartitionSet<T> {
    let ground = a.ground | b.ground;
    let mut out = WeightedPartitionSet::new(ground);
    for x in &a.entries {
        let px = x.partition.up_unchecked(ground);
        for y in &b.entries {
            let p = px.join_unchecked(&y.partition.up_unchecked(ground));
            out.push_unchecked(p, x.weight + y.weight, combine(x, y));
        }
    }
    rmc(out)
}
