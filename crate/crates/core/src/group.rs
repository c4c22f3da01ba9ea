//! Maximal subgroups `H_e` and their subgroups up to conjugacy.
//!
//! Groups here are small (order at most a few dozen), so subgroups are found by cyclic
//! extension: starting from the trivial subgroup, repeatedly adjoin one element and close.
//! Every subgroup is reached because it is generated by a finite chain of such steps.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::monoid::FiniteMonoid;

/// The H-class of an idempotent with its group structure.
///
/// Subgroups and other subsets are always passed around as ascending lists of monoid
/// element indices.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    idempotent: usize,
    elements: Vec<usize>,
    /// Local multiplication table over positions in `elements`.
    table: Vec<usize>,
    inverse: Vec<usize>,
}

pub fn maximal_subgroup(m: &FiniteMonoid, g: &GreenData, e: usize) -> Result<MaximalSubgroup> {
    if !m.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let elements = g.h_class_of(e);
    let k = elements.len();
    let local = |x: usize| elements.binary_search(&x).ok();
    let mut table = Vec::with_capacity(k * k);
    for &a in &elements {
        for &b in &elements {
            let ab = local(m.mul(a, b))
                .ok_or_else(|| Error::Internal("H-class of an idempotent is not closed".into()))?;
            table.push(ab);
        }
    }
    let id = local(e).expect("e in H_e");
    let mut inverse = vec![usize::MAX; k];
    for a in 0..k {
        inverse[a] = (0..k)
            .find(|&b| table[a * k + b] == id && table[b * k + a] == id)
            .ok_or_else(|| Error::Internal("element of H_e without inverse".into()))?;
    }
    Ok(MaximalSubgroup { idempotent: e, elements, table, inverse })
}

impl MaximalSubgroup {
    pub fn idempotent(&self) -> usize {
        self.idempotent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of a monoid element within the group.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Product of two group elements (monoid indices).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let k = self.order();
        let (la, lb) = (self.local(a).expect("a in group"), self.local(b).expect("b in group"));
        self.elements[self.table[la * k + lb]]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.elements[self.inverse[self.local(a).expect("a in group")]]
    }

    /// Local multiplication table, positions into [`Self::elements`].
    pub fn local_table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// The group as a monoid in its own right, on local indices, with labels from `m`.
    pub fn as_monoid(&self, m: &FiniteMonoid) -> Arc<FiniteMonoid> {
        let labels = self.elements.iter().map(|&x| m.label(x)).collect();
        let gm = FiniteMonoid::from_flat(self.order(), self.table.clone(), Some(labels))
            .expect("group table is a monoid");
        Arc::new(gm)
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        !set.is_empty()
            && set.iter().all(|&x| self.contains(x))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// Subgroup generated by `set`.
    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        let mut out: BTreeSet<usize> = set.iter().copied().collect();
        out.insert(self.idempotent);
        let mut frontier: Vec<usize> = out.iter().copied().collect();
        while let Some(a) = frontier.pop() {
            let current: Vec<usize> = out.iter().copied().collect();
            for b in current {
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if out.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// `h⁻¹ S h`, ascending.
    pub fn conjugate(&self, set: &[usize], h: usize) -> Vec<usize> {
        let hi = self.inverse(h);
        let mut out: Vec<usize> = set.iter().map(|&s| self.mul(self.mul(hi, s), h)).collect();
        out.sort_unstable();
        out
    }

    /// Some `h` with `K ⊆ h⁻¹ L h`.
    pub fn subconjugator(&self, k: &[usize], l: &[usize]) -> Option<usize> {
        self.elements.iter().copied().find(|&h| {
            let conj = self.conjugate(l, h);
            k.iter().all(|x| conj.binary_search(x).is_ok())
        })
    }

    /// Some `h` with `K = h⁻¹ L h`.
    pub fn conjugator(&self, k: &[usize], l: &[usize]) -> Option<usize> {
        if k.len() != l.len() {
            return None;
        }
        self.subconjugator(k, l)
    }

    pub fn normalizer(&self, k: &[usize]) -> Vec<usize> {
        self.elements.iter().copied().filter(|&h| self.conjugate(k, h) == k).collect()
    }

    /// All subgroups, ordered by size then lexicographically.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = vec![self.idempotent];
        found.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(s) = queue.pop() {
            for &x in &self.elements {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(x);
                let t = self.closure(&gens);
                if found.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// One representative per conjugacy class of subgroups: the lexicographically least
    /// member of each class, classes ordered by subgroup order and then representative.
    pub fn subgroups_up_to_conjugacy(&self) -> Vec<Vec<usize>> {
        let mut reps: Vec<Vec<usize>> = Vec::new();
        for s in self.all_subgroups() {
            if !reps.iter().any(|r| self.conjugator(&s, r).is_some()) {
                // all_subgroups is sorted, so the first member seen is the least one
                reps.push(s);
            }
        }
        reps
    }

    /// Index of the class of `k` within `reps`.
    pub fn class_index(&self, reps: &[Vec<usize>], k: &[usize]) -> Option<usize> {
        reps.iter().position(|r| self.conjugator(k, r).is_some())
    }
}
