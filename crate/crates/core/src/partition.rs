//! Set partitions of `0..n` in canonical form.

use alloc::vec;
use alloc::vec::Vec;

/// A partition of `0..n`, stored as a restricted growth string: blocks are numbered in order
/// of their least member, so two equal partitions always have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary labelling: points with equal labels share a block.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut block_of = Vec::with_capacity(labels.len());
        let mut firsts: Vec<usize> = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            match firsts.iter().position(|&f| labels[f] == *label) {
                Some(b) => block_of.push(b),
                None => {
                    block_of.push(firsts.len());
                    firsts.push(i);
                }
            }
        }
        Partition { block_of, blocks: firsts.len() }
    }

    /// Builds a partition from explicit blocks; `None` unless they cover `0..n` exactly once.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n || label[x] != usize::MAX {
                    return None;
                }
                label[x] = b;
            }
        }
        if label.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&label))
    }

    pub fn discrete(n: usize) -> Self {
        Partition { block_of: (0..n).collect(), blocks: n }
    }

    pub fn full(n: usize) -> Self {
        Partition { block_of: vec![0; n], blocks: usize::from(n > 0) }
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn block(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.block_of[x] == b).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks == self.len()
    }

    pub fn is_full(&self) -> bool {
        self.blocks <= 1
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.blocks];
        for x in 0..self.len() {
            let b = self.block_of[x];
            if image[b] == usize::MAX {
                image[b] = other.block_of[x];
            } else if image[b] != other.block_of[x] {
                return false;
            }
        }
        true
    }

    /// Common refinement (intersection of the equivalence relations).
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let pairs: Vec<(usize, usize)> =
            self.block_of.iter().copied().zip(other.block_of.iter().copied()).collect();
        Partition::from_labels(&pairs)
    }

    /// Finest partition coarser than both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let mut first = vec![usize::MAX; p.blocks];
            for x in 0..p.len() {
                let b = p.block_of[x];
                if first[b] == usize::MAX {
                    first[b] = x;
                } else {
                    uf.union(first[b], x);
                }
            }
        }
        uf.into_partition()
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two points were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// Iterator over all set partitions of `0..n` in lexicographic order of their growth strings.
pub struct SetPartitions {
    rgs: Vec<usize>,
    max_prefix: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions { rgs: vec![0; n], max_prefix: vec![0; n], done: false }
    }
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let n = self.rgs.len();
        let blocks = if n == 0 { 0 } else { self.max_prefix[n - 1] + 1 };
        let out = Partition { block_of: self.rgs.clone(), blocks };
        // advance: rightmost position that can still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.max_prefix[i - 1] {
                self.rgs[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max_prefix[j] = self.max_prefix[j - 1];
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..8).map(|n| SetPartitions::new(n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        let all: Vec<Partition> = SetPartitions::new(5).collect();
        for (i, p) in all.iter().enumerate() {
            assert_eq!(*p, Partition::from_labels(p.labels()));
            assert!(all[i + 1..].iter().all(|q| q != p));
        }
    }

    #[test]
    fn blocks_ordered_by_least_member() {
        let p = Partition::from_labels(&[7, 3, 7, 9, 3]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 4], vec![3]]);
        assert_eq!(Partition::from_blocks(5, &p.blocks()), Some(p));
        assert_eq!(Partition::from_blocks(3, &[vec![0, 1]]), None);
    }

    #[test]
    fn meet_and_join() {
        let a = Partition::from_labels(&[0, 0, 1, 1]);
        let b = Partition::from_labels(&[0, 1, 1, 2]);
        assert_eq!(a.meet(&b), Partition::discrete(4));
        assert_eq!(a.join(&b), Partition::full(4));
        assert!(Partition::discrete(4).refines(&a));
        assert!(!a.refines(&b));
    }
}
