//! Set partitions of small ground sets, packed into two machine words.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground element plus one.
pub const MAX_ELEMENTS: usize = 16;

/// Partition of a ground set `U ⊆ {0..16}`. Each element stores the smallest
/// element of its block in a 4-bit label, which makes equal partitions equal
/// as values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    ground: u16,
    labels: u64,
}

fn elements(mask: u16) -> impl Iterator<Item = u8> {
    (0..MAX_ELEMENTS as u8).filter(move |&x| mask >> x & 1 == 1)
}

fn mismatch<T>(msg: &str) -> Result<T> {
    Err(Error::GroundSet(msg.to_string()))
}

/// Tiny union-find over the 16 possible elements.
struct Forest([u8; MAX_ELEMENTS]);

impl Forest {
    fn new() -> Self {
        Forest(std::array::from_fn(|i| i as u8))
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }

    /// Canonical partition of `ground`: with smaller roots winning every union,
    /// each root is the minimum of its block.
    fn partition(mut self, ground: u16) -> Partition {
        let mut labels = 0u64;
        for x in elements(ground) {
            labels |= (self.find(x) as u64) << (4 * x);
        }
        Partition { ground, labels }
    }
}

impl Partition {
    /// Every element of `ground` in its own block.
    pub fn singletons(ground: u16) -> Self {
        let mut labels = 0u64;
        for x in elements(ground) {
            labels |= (x as u64) << (4 * x);
        }
        Partition { ground, labels }
    }

    pub fn from_blocks(blocks: &[&[u8]]) -> Result<Self> {
        let mut ground = 0u16;
        let mut forest = Forest::new();
        for block in blocks {
            if block.is_empty() {
                return mismatch("empty block");
            }
            for &x in *block {
                if x as usize >= MAX_ELEMENTS {
                    return mismatch("element out of range");
                }
                if ground >> x & 1 == 1 {
                    return mismatch("element in two blocks");
                }
                ground |= 1 << x;
                forest.union(block[0], x);
            }
        }
        Ok(forest.partition(ground))
    }

    pub fn ground(&self) -> u16 {
        self.ground
    }

    pub fn label(&self, x: u8) -> u8 {
        (self.labels >> (4 * x) & 0xF) as u8
    }

    pub fn contains(&self, x: u8) -> bool {
        self.ground >> x & 1 == 1
    }

    /// Block masks, ordered by smallest element.
    pub fn blocks(&self) -> Vec<u16> {
        let mut out: Vec<(u8, u16)> = Vec::new();
        for x in elements(self.ground) {
            let l = self.label(x);
            match out.iter_mut().find(|(k, _)| *k == l) {
                Some((_, m)) => *m |= 1 << x,
                None => out.push((l, 1 << x)),
            }
        }
        out.into_iter().map(|(_, m)| m).collect()
    }

    pub fn block_count(&self) -> usize {
        elements(self.ground).filter(|&x| self.label(x) == x).count()
    }

    pub fn is_single_block(&self) -> bool {
        self.block_count() <= 1
    }

    fn forest(&self) -> Forest {
        let mut f = Forest::new();
        for x in elements(self.ground) {
            f.0[x as usize] = self.label(x);
        }
        f
    }

    /// `self ⊑ q`: every block of `q` lies inside a block of `self`.
    pub fn coarsen_le(&self, q: &Partition) -> Result<bool> {
        if self.ground != q.ground {
            return mismatch("coarsen_le needs equal ground sets");
        }
        Ok(elements(self.ground).all(|x| self.label(x) == self.label(q.label(x))))
    }

    /// Finest common coarsening `self ⊔ q`.
    pub fn join(&self, q: &Partition) -> Result<Partition> {
        if self.ground != q.ground {
            return mismatch("join needs equal ground sets");
        }
        Ok(self.join_unchecked(q))
    }

    pub(crate) fn join_unchecked(&self, q: &Partition) -> Partition {
        let mut f = self.forest();
        for x in elements(self.ground) {
            f.union(x, q.label(x));
        }
        f.partition(self.ground)
    }

    /// Coarsest common refinement `self ⊓ q`.
    pub fn meet(&self, q: &Partition) -> Result<Partition> {
        if self.ground != q.ground {
            return mismatch("meet needs equal ground sets");
        }
        let mut first = [[u8::MAX; MAX_ELEMENTS]; MAX_ELEMENTS];
        let mut labels = 0u64;
        for x in elements(self.ground) {
            let slot = &mut first[self.label(x) as usize][q.label(x) as usize];
            if *slot == u8::MAX {
                *slot = x;
            }
            labels |= (*slot as u64) << (4 * x);
        }
        Ok(Partition {
            ground: self.ground,
            labels,
        })
    }

    /// Restriction `p↓X` to `X ⊆ U`.
    pub fn down(&self, x: u16) -> Result<Partition> {
        if x & !self.ground != 0 {
            return mismatch("down needs a subset of the ground set");
        }
        Ok(self.down_unchecked(x))
    }

    pub(crate) fn down_unchecked(&self, keep: u16) -> Partition {
        let mut first = [u8::MAX; MAX_ELEMENTS];
        let mut labels = 0u64;
        for x in elements(keep) {
            let slot = &mut first[self.label(x) as usize];
            if *slot == u8::MAX {
                *slot = x;
            }
            labels |= (*slot as u64) << (4 * x);
        }
        Partition { ground: keep, labels }
    }

    /// Extension `p↑Y` to `Y ⊇ U`, new elements as singletons.
    pub fn up(&self, y: u16) -> Result<Partition> {
        if self.ground & !y != 0 {
            return mismatch("up needs a superset of the ground set");
        }
        Ok(self.up_unchecked(y))
    }

    pub(crate) fn up_unchecked(&self, y: u16) -> Partition {
        let mut labels = self.labels;
        for x in elements(y & !self.ground) {
            labels |= (x as u64) << (4 * x);
        }
        Partition { ground: y, labels }
    }

    /// `U[X]`: `X` as one block, every other element of `U` alone.
    pub fn singleton_block(u: u16, x: u16) -> Result<Partition> {
        if x & !u != 0 {
            return mismatch("singleton_block needs X inside U");
        }
        let mut p = Partition::singletons(u);
        if x != 0 {
            let low = x.trailing_zeros() as u64;
            for e in elements(x) {
                p.labels &= !(0xF << (4 * e));
                p.labels |= low << (4 * e);
            }
        }
        Ok(p)
    }

    /// `p↑(U∪X) ⊔ (U∪X)[X]`.
    pub(crate) fn glue_unchecked(&self, x: u16) -> Partition {
        let mut f = self.up_unchecked(self.ground | x).forest();
        if let Some(first) = elements(x).next() {
            for e in elements(x) {
                f.union(first, e);
            }
        }
        f.partition(self.ground | x)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = elements(b).map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

/// Every partition of `ground`, in no particular order.
pub fn all_partitions(ground: u16) -> Vec<Partition> {
    let mut out = vec![Partition::singletons(0)];
    for x in elements(ground) {
        let mut next = Vec::new();
        for p in &out {
            let extended = p.up_unchecked(p.ground | 1 << x);
            next.push(extended);
            for b in p.blocks() {
                next.push(extended.glue_unchecked(b | 1 << x));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(blocks: &[&[u8]]) -> Partition {
        Partition::from_blocks(blocks).unwrap()
    }

    #[test]
    fn canonical_labels() {
        assert_eq!(p(&[&[2, 0], &[1]]), p(&[&[1], &[0, 2]]));
        assert_eq!(p(&[&[3, 5]]).label(5), 3);
        assert!(Partition::from_blocks(&[&[0, 1], &[1]]).is_err());
    }

    #[test]
    fn join_example() {
        let a = p(&[&[0, 1], &[2]]);
        let b = p(&[&[1, 2], &[0]]);
        assert_eq!(a.join(&b).unwrap(), p(&[&[0, 1, 2]]));
        assert!(a.join(&p(&[&[0, 1]])).is_err());
    }

    #[test]
    fn meet_example() {
        let a = p(&[&[0, 1, 2], &[3]]);
        let b = p(&[&[0, 1], &[2, 3]]);
        assert_eq!(a.meet(&b).unwrap(), p(&[&[0, 1], &[2], &[3]]));
    }

    #[test]
    fn down_and_up() {
        let a = p(&[&[0, 1], &[2]]);
        assert_eq!(a.down(0b101).unwrap(), p(&[&[0], &[2]]));
        assert!(a.down(0b1000).is_err());
        assert_eq!(p(&[&[0]]).up(0b11).unwrap(), p(&[&[0], &[1]]));
        assert!(a.up(0b1).is_err());
    }

    #[test]
    fn order_and_blocks() {
        let coarse = p(&[&[0, 1, 2]]);
        let fine = p(&[&[0, 1], &[2]]);
        assert!(coarse.coarsen_le(&fine).unwrap());
        assert!(!fine.coarsen_le(&coarse).unwrap());
        assert_eq!(Partition::singleton_block(0b111, 0b101).unwrap(), p(&[&[0, 2], &[1]]));
        assert_eq!(fine.glue_unchecked(0b1100), p(&[&[0, 1], &[2, 3]]));
        assert_eq!(fine.blocks(), vec![0b011, 0b100]);
        assert_eq!(format!("{fine:?}"), "{{0,1},{2}}");
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|k| all_partitions((1u16 << k) - 1).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }
}
