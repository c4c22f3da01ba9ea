//! Finite monoids given by their multiplication table.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite monoid on the dense element set `0..size`.
///
/// Labels are for display only. When the monoid came out of a closure computation the
/// generators are remembered, which lets orbit computations walk one edge per generator.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    labels: Option<Vec<String>>,
    generators: Option<Vec<usize>>,
}

impl PartialEq for FiniteMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table
    }
}

impl Eq for FiniteMonoid {}

impl FiniteMonoid {
    /// Validates a Cayley table and locates its identity.
    pub fn from_cayley(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(Error::MalformedTable(format!("entry {bad} in row {i} is out of range")));
            }
            flat.extend_from_slice(row);
        }
        if let Some(l) = &labels {
            if l.len() != size {
                return Err(Error::MalformedTable(format!(
                    "{} labels for {size} elements",
                    l.len()
                )));
            }
        }
        Self::from_flat(size, flat, labels)
    }

    pub(crate) fn from_flat(
        size: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), size * size);
        let at = |a: usize, b: usize| table[a * size + b];
        for a in 0..size {
            for b in 0..size {
                let ab = at(a, b);
                for c in 0..size {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..size)
            .find(|&u| (0..size).all(|x| at(u, x) == x && at(x, u) == x))
            .ok_or(Error::NoIdentity)?;
        Ok(FiniteMonoid { size, table, identity, labels, generators: None })
    }

    pub(crate) fn with_generators(mut self, generators: Vec<usize>) -> Self {
        self.generators = Some(generators);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("{x}"),
        }
    }

    /// Index of the element with the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Generators used for orbit traversal: the recorded ones, or every element.
    pub fn generators(&self) -> Vec<usize> {
        match &self.generators {
            Some(g) => g.clone(),
            None => self.elements().collect(),
        }
    }

    pub fn cayley(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True if every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        self.elements()
            .all(|a| self.elements().any(|b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn zero_one_under_multiplication() {
        let m = FiniteMonoid::from_cayley(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.identity(), 1);
    }

    #[test]
    fn trivial_monoid() {
        let m = FiniteMonoid::from_cayley(vec![vec![0]], None).unwrap();
        assert_eq!((m.size(), m.identity()), (1, 0));
    }

    #[test]
    fn left_zero_band_has_no_identity() {
        let t = vec![vec![0, 0], vec![1, 1]];
        assert_eq!(FiniteMonoid::from_cayley(t, None), Err(Error::NoIdentity));
    }

    #[test]
    fn rejects_malformed_and_nonassociative() {
        assert!(matches!(
            FiniteMonoid::from_cayley(vec![vec![0, 1]], None),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteMonoid::from_cayley(vec![vec![0, 2], vec![1, 1]], None),
            Err(Error::MalformedTable(_))
        ));
        // x*y = 1 - x  is not associative on {0, 1}
        let t = vec![vec![1, 1], vec![0, 0]];
        assert!(matches!(FiniteMonoid::from_cayley(t, None), Err(Error::NonAssociative { .. })));
    }
}
