//! Green's preorders and relations, idempotents and regular J-classes.

use alloc::vec;
use alloc::vec::Vec;

use crate::monoid::FiniteMonoid;
use crate::partition::Partition;

/// Green's structure of a finite monoid.
///
/// `geq_r(x, y)` holds iff `y ∈ xM`, `geq_l(x, y)` iff `y ∈ Mx`, and `geq_j(x, y)` iff
/// `y ∈ MxM`. The classes are the mutual-reachability blocks, numbered by least member.
#[derive(Clone, Debug)]
pub struct GreenData {
    size: usize,
    geq_r: Vec<bool>,
    geq_l: Vec<bool>,
    geq_j: Vec<bool>,
    pub r_classes: Partition,
    pub l_classes: Partition,
    pub j_classes: Partition,
    pub h_classes: Partition,
    pub idempotents: Vec<usize>,
    /// Indexed by J-class id.
    pub regular_j: Vec<bool>,
}

pub fn compute_green(m: &FiniteMonoid) -> GreenData {
    let n = m.size();
    let mut geq_r = vec![false; n * n];
    let mut geq_l = vec![false; n * n];
    let mut geq_j = vec![false; n * n];
    for x in 0..n {
        for a in 0..n {
            geq_r[x * n + m.mul(x, a)] = true;
            geq_l[x * n + m.mul(a, x)] = true;
        }
    }
    for x in 0..n {
        // MxM = M(xM)
        for y in 0..n {
            if geq_r[x * n + y] {
                for a in 0..n {
                    geq_j[x * n + m.mul(a, y)] = true;
                }
            }
        }
    }
    let mutual = |rel: &[bool]| -> Partition {
        // first element mutually related to x is a canonical label
        let labels: Vec<usize> = (0..n)
            .map(|x| (0..n).find(|&y| rel[x * n + y] && rel[y * n + x]).unwrap_or(x))
            .collect();
        Partition::from_labels(&labels)
    };
    let r_classes = mutual(&geq_r);
    let l_classes = mutual(&geq_l);
    let j_classes = mutual(&geq_j);
    let h_classes = r_classes.meet(&l_classes);
    let idempotents = m.idempotents();
    let mut regular_j = vec![false; j_classes.num_blocks()];
    for &e in &idempotents {
        regular_j[j_classes.block_of(e)] = true;
    }
    GreenData { size: n, geq_r, geq_l, geq_j, r_classes, l_classes, j_classes, h_classes, idempotents, regular_j }
}

impl GreenData {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn geq_r(&self, x: usize, y: usize) -> bool {
        self.geq_r[x * self.size + y]
    }

    pub fn geq_l(&self, x: usize, y: usize) -> bool {
        self.geq_l[x * self.size + y]
    }

    pub fn geq_j(&self, x: usize, y: usize) -> bool {
        self.geq_j[x * self.size + y]
    }

    pub fn r_related(&self, x: usize, y: usize) -> bool {
        self.r_classes.same_block(x, y)
    }

    pub fn l_related(&self, x: usize, y: usize) -> bool {
        self.l_classes.same_block(x, y)
    }

    pub fn j_related(&self, x: usize, y: usize) -> bool {
        self.j_classes.same_block(x, y)
    }

    pub fn h_related(&self, x: usize, y: usize) -> bool {
        self.h_classes.same_block(x, y)
    }

    pub fn j_class(&self, x: usize) -> usize {
        self.j_classes.block_of(x)
    }

    /// Elements of the R-class of `x`, ascending.
    pub fn r_class_of(&self, x: usize) -> Vec<usize> {
        self.r_classes.block(self.r_classes.block_of(x))
    }

    pub fn l_class_of(&self, x: usize) -> Vec<usize> {
        self.l_classes.block(self.l_classes.block_of(x))
    }

    pub fn h_class_of(&self, x: usize) -> Vec<usize> {
        self.h_classes.block(self.h_classes.block_of(x))
    }

    pub fn j_class_members(&self, j: usize) -> Vec<usize> {
        self.j_classes.block(j)
    }

    /// Representative of J-class `j` (its least element).
    pub fn j_rep(&self, j: usize) -> usize {
        (0..self.size).find(|&x| self.j_classes.block_of(x) == j).expect("J-class id in range")
    }

    /// `J_a ≥ J_b` in the J-order of classes.
    pub fn j_class_geq(&self, a: usize, b: usize) -> bool {
        self.geq_j(self.j_rep(a), self.j_rep(b))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.idempotents.binary_search(&x).is_ok()
    }

    /// The least idempotent of every regular J-class, ordered by J-class id.
    pub fn designated_idempotents(&self) -> Vec<usize> {
        (0..self.j_classes.num_blocks())
            .filter(|&j| self.regular_j[j])
            .map(|j| {
                *self
                    .idempotents
                    .iter()
                    .find(|&&e| self.j_class(e) == j)
                    .expect("regular class has an idempotent")
            })
            .collect()
    }

    /// Designated idempotent of the J-class containing `x`, if that class is regular.
    pub fn designated_for_class(&self, j: usize) -> Option<usize> {
        self.idempotents.iter().copied().find(|&e| self.j_class(e) == j)
    }

    /// Designated idempotents in a linear order refining the J-order, higher classes first,
    /// ties broken by least index.
    pub fn designated_in_j_order(&self) -> Vec<usize> {
        let mut remaining = self.designated_idempotents();
        remaining.sort_unstable();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            // a maximal element: nothing remaining lies strictly above it
            let pos = remaining
                .iter()
                .position(|&e| {
                    remaining
                        .iter()
                        .all(|&f| f == e || !(self.geq_j(f, e) && !self.geq_j(e, f)))
                })
                .expect("finite poset has a maximal element");
            out.push(remaining.remove(pos));
        }
        out
    }
}

/// Stability: `x J xm` implies `x R xm`, and `x J mx` implies `x L mx`.
pub fn check_stability(m: &FiniteMonoid, g: &GreenData) -> bool {
    m.elements().all(|x| {
        m.elements().all(|a| {
            let (xa, ax) = (m.mul(x, a), m.mul(a, x));
            (!g.j_related(x, xa) || g.r_related(x, xa)) && (!g.j_related(x, ax) || g.l_related(x, ax))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn zero_one_r_classes() {
        let m = catalog::mono_01();
        let g = compute_green(&m);
        assert_eq!(g.r_classes.num_blocks(), 2);
        assert!(check_stability(&m, &g));
    }

    #[test]
    fn t3_j_classes_are_ranks() {
        let m = catalog::full_transformation(3).unwrap();
        let g = compute_green(&m);
        assert_eq!(g.j_classes.num_blocks(), 3);
        let rank = |x: usize| {
            let label = m.label(x);
            let mut seen: Vec<char> = label.chars().filter(|c| c.is_ascii_digit()).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len()
        };
        for x in m.elements() {
            for y in m.elements() {
                assert_eq!(g.j_related(x, y), rank(x) == rank(y));
                assert_eq!(g.geq_j(x, y), rank(x) >= rank(y));
            }
        }
        assert!(check_stability(&m, &g));
        assert_eq!(g.designated_in_j_order().len(), 3);
    }

    #[test]
    fn appendix_j_class_of_e() {
        let m = catalog::appendix_counterexample();
        let g = compute_green(&m);
        let e = catalog::appendix_idempotent(&m);
        let je = g.j_class_members(g.j_class(e));
        assert_eq!(je.len(), 12);
        assert!(!je.contains(&m.identity()));
        assert_eq!(g.r_class_of(e).len(), 6);
        assert_eq!(g.h_class_of(e).len(), 2);
        assert!(check_stability(&m, &g));
    }
}
