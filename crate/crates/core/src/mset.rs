//! Partial right actions of a finite monoid on finite sets.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result, Violation};
use crate::monoid::FiniteMonoid;
use crate::partition::Partition;

/// A finite set with a right action by partial functions.
///
/// Points are `0..len()`. `act(x, m)` is `None` where `x * m` is undefined.
#[derive(Clone, Debug)]
pub struct PartialMSet {
    monoid: Arc<FiniteMonoid>,
    points: usize,
    action: Vec<Option<usize>>,
}

impl PartialMSet {
    /// Builds and validates an M-set from one row of images per point.
    pub fn new(monoid: Arc<FiniteMonoid>, rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let x = Self::from_rows_unchecked(monoid, rows)?;
        x.validate().map_err(Error::InvalidAction)?;
        Ok(x)
    }

    /// Builds an M-set checking only the table shape. Call [`Self::validate`] before relying
    /// on the action axioms.
    pub fn from_rows_unchecked(monoid: Arc<FiniteMonoid>, rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = monoid.size();
        let points = rows.len();
        let mut action = Vec::with_capacity(points * n);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(alloc::format!(
                    "point {x} has {} entries for a monoid of size {n}",
                    row.len()
                )));
            }
            action.extend(row);
        }
        Ok(PartialMSet { monoid, points, action })
    }

    pub(crate) fn from_flat(monoid: Arc<FiniteMonoid>, points: usize, action: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(action.len(), points * monoid.size());
        PartialMSet { monoid, points, action }
    }

    pub fn empty(monoid: Arc<FiniteMonoid>) -> Self {
        PartialMSet { monoid, points: 0, action: Vec::new() }
    }

    /// The one-point M-set fixed by every element: the identity of the Burnside ring.
    pub fn one(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.size();
        PartialMSet { monoid, points: 1, action: vec![Some(0); n] }
    }

    /// The monoid acting on itself by right multiplication.
    pub fn right_regular(monoid: Arc<FiniteMonoid>) -> Self {
        let n = monoid.size();
        let mut action = Vec::with_capacity(n * n);
        for x in 0..n {
            for m in 0..n {
                action.push(Some(monoid.mul(x, m)));
            }
        }
        PartialMSet { monoid, points: n, action }
    }

    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    #[inline]
    pub fn act(&self, x: usize, m: usize) -> Option<usize> {
        self.action[x * self.monoid.size() + m]
    }

    pub fn row(&self, x: usize) -> &[Option<usize>] {
        let n = self.monoid.size();
        &self.action[x * n..(x + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.points).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn is_total(&self) -> bool {
        self.action.iter().all(Option::is_some)
    }

    pub fn same_monoid(&self, other: &PartialMSet) -> bool {
        Arc::ptr_eq(&self.monoid, &other.monoid) || *self.monoid == *other.monoid
    }

    fn check_same_monoid(&self, other: &PartialMSet) -> Result<()> {
        if self.same_monoid(other) {
            Ok(())
        } else {
            Err(Error::MonoidMismatch)
        }
    }

    /// Checks closure, the identity axiom and associativity; reports the first violation.
    pub fn validate(&self) -> core::result::Result<(), Violation> {
        let m = &self.monoid;
        if self.action.len() != self.points * m.size() {
            return Err(Violation::Shape);
        }
        for x in 0..self.points {
            for a in m.elements() {
                if let Some(image) = self.act(x, a) {
                    if image >= self.points {
                        return Err(Violation::Closure { x, m: a, image });
                    }
                }
            }
        }
        for x in 0..self.points {
            if self.act(x, m.identity()) != Some(x) {
                return Err(Violation::Identity { x });
            }
        }
        for x in 0..self.points {
            for a in m.elements() {
                let xa = self.act(x, a);
                for b in m.elements() {
                    let lhs = xa.and_then(|y| self.act(y, b));
                    if lhs != self.act(x, m.mul(a, b)) {
                        return Err(Violation::Associativity { x, m: a, n: b });
                    }
                }
            }
        }
        Ok(())
    }

    /// `SM`: every point reachable from `seeds`, as a membership mask.
    pub fn reachable_from(&self, seeds: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.points];
        let mut stack: Vec<usize> = Vec::new();
        for &s in seeds {
            if !mask[s] {
                mask[s] = true;
                stack.push(s);
            }
        }
        let gens = self.monoid.generators();
        while let Some(x) = stack.pop() {
            for &g in &gens {
                if let Some(y) = self.act(x, g) {
                    if !mask[y] {
                        mask[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        mask
    }

    pub fn is_invariant(&self, subset: &[usize]) -> bool {
        let mut mask = vec![false; self.points];
        for &s in subset {
            mask[s] = true;
        }
        subset
            .iter()
            .all(|&s| self.row(s).iter().all(|img| img.is_none_or(|y| mask[y])))
    }

    /// Restriction to a subset: `s · m = sm` when that lands in the subset, undefined
    /// otherwise. Points of the result follow the ascending order of `subset`.
    ///
    /// Fails unless the subset is a subquotient, i.e. the action never leaves it and returns.
    pub fn restrict(&self, subset: &[usize]) -> Result<PartialMSet> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut pos = vec![usize::MAX; self.points];
        for (i, &s) in sorted.iter().enumerate() {
            if s >= self.points {
                return Err(Error::MalformedTable(alloc::format!("point {s} out of range")));
            }
            pos[s] = i;
        }
        let m = &self.monoid;
        for &s in &sorted {
            for a in m.elements() {
                match self.act(s, a) {
                    Some(y) if pos[y] == usize::MAX => {
                        for b in m.elements() {
                            if let Some(z) = self.act(y, b) {
                                if pos[z] != usize::MAX {
                                    return Err(Error::NotSubquotient { s, m: a, n: b });
                                }
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        let n = m.size();
        let mut action = Vec::with_capacity(sorted.len() * n);
        for &s in &sorted {
            for a in 0..n {
                action.push(self.act(s, a).and_then(|y| (pos[y] != usize::MAX).then_some(pos[y])));
            }
        }
        Ok(PartialMSet { monoid: self.monoid.clone(), points: sorted.len(), action })
    }

    /// Restriction to an ascending list of points already known to form a subquotient.
    pub(crate) fn restrict_unchecked(&self, sorted: &[usize]) -> PartialMSet {
        let mut pos = vec![usize::MAX; self.points];
        for (i, &s) in sorted.iter().enumerate() {
            pos[s] = i;
        }
        let n = self.monoid.size();
        let mut action = Vec::with_capacity(sorted.len() * n);
        for &s in sorted {
            for a in 0..n {
                action.push(self.act(s, a).and_then(|y| (pos[y] != usize::MAX).then_some(pos[y])));
            }
        }
        PartialMSet { monoid: self.monoid.clone(), points: sorted.len(), action }
    }

    /// Disjoint union `X ∨ Y`: points of `X` first, then those of `Y` shifted by `|X|`.
    pub fn sum(&self, other: &PartialMSet) -> Result<PartialMSet> {
        self.check_same_monoid(other)?;
        let shift = self.points;
        let mut action = self.action.clone();
        action.extend(other.action.iter().map(|img| img.map(|y| y + shift)));
        Ok(PartialMSet { monoid: self.monoid.clone(), points: self.points + other.points, action })
    }

    /// Cartesian product `X ∧ Y`: `(x, y)` is point `x * |Y| + y`, and `(x, y)m` is defined
    /// exactly when both coordinates are.
    pub fn product(&self, other: &PartialMSet) -> Result<PartialMSet> {
        self.check_same_monoid(other)?;
        let n = self.monoid.size();
        let q = other.points;
        let mut action = Vec::with_capacity(self.points * q * n);
        for x in 0..self.points {
            for y in 0..q {
                for a in 0..n {
                    action.push(match (self.act(x, a), other.act(y, a)) {
                        (Some(u), Some(v)) => Some(u * q + v),
                        _ => None,
                    });
                }
            }
        }
        Ok(PartialMSet { monoid: self.monoid.clone(), points: self.points * q, action })
    }

    /// Quotient by a congruence; classes are the points, ordered by least member.
    pub fn quotient(&self, p: &Partition) -> Result<PartialMSet> {
        if p.len() != self.points {
            return Err(Error::MalformedTable(alloc::format!(
                "partition of {} points for an M-set of {}",
                p.len(),
                self.points
            )));
        }
        if let Some((x, y, m)) = self.congruence_witness(p) {
            return Err(Error::NotCongruence { x, y, m });
        }
        let n = self.monoid.size();
        let mut action = Vec::with_capacity(p.num_blocks() * n);
        for block in p.blocks() {
            let x = block[0];
            for a in 0..n {
                action.push(self.act(x, a).map(|y| p.block_of(y)));
            }
        }
        Ok(PartialMSet { monoid: self.monoid.clone(), points: p.num_blocks(), action })
    }

    /// A pair of related points and an element on which the partition fails to be a
    /// congruence, if any.
    pub fn congruence_witness(&self, p: &Partition) -> Option<(usize, usize, usize)> {
        for block in p.blocks() {
            let x = block[0];
            for &y in &block[1..] {
                for a in self.monoid.elements() {
                    let ok = match (self.act(x, a), self.act(y, a)) {
                        (None, None) => true,
                        (Some(u), Some(v)) => p.same_block(u, v),
                        _ => false,
                    };
                    if !ok {
                        return Some((x, y, a));
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, p: &Partition) -> bool {
        p.len() == self.points && self.congruence_witness(p).is_none()
    }
}

/// A total map between the point sets of two M-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointMap(pub Vec<usize>);

impl PointMap {
    pub fn identity(n: usize) -> Self {
        PointMap((0..n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    fn fits(&self, src: &PartialMSet, tgt: &PartialMSet) -> bool {
        self.0.len() == src.len() && self.0.iter().all(|&y| y < tgt.len()) && src.same_monoid(tgt)
    }

    /// `f(xm) = f(x)m`, both defined and equal or both undefined.
    pub fn is_morphism(&self, src: &PartialMSet, tgt: &PartialMSet) -> bool {
        self.fits(src, tgt)
            && (0..src.len()).all(|x| {
                src.monoid().elements().all(|a| src.act(x, a).map(|y| self.0[y]) == tgt.act(self.0[x], a))
            })
    }

    /// `f(xm) = f(x)m` wherever `xm` is defined.
    pub fn is_lax_morphism(&self, src: &PartialMSet, tgt: &PartialMSet) -> bool {
        self.fits(src, tgt)
            && (0..src.len()).all(|x| {
                src.monoid().elements().all(|a| match src.act(x, a) {
                    Some(y) => tgt.act(self.0[x], a) == Some(self.0[y]),
                    None => true,
                })
            })
    }

    pub fn is_bijection(&self, target_len: usize) -> bool {
        if self.0.len() != target_len {
            return false;
        }
        let mut seen = vec![false; target_len];
        self.0.iter().all(|&y| y < target_len && !core::mem::replace(&mut seen[y], true))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PointMap) -> PointMap {
        PointMap(self.0.iter().map(|&y| other.0[y]).collect())
    }

    pub fn inverse(&self) -> Option<PointMap> {
        if !self.is_bijection(self.0.len()) {
            return None;
        }
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Some(PointMap(inv))
    }

    /// Image as an ascending point list.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn zero_pm1() -> (Arc<FiniteMonoid>, PartialMSet, usize, usize, usize) {
        let m = Arc::new(catalog::mono_0pm1());
        let x = PartialMSet::right_regular(m.clone());
        let zero = m.find_label("0").unwrap();
        let plus = m.find_label("1").unwrap();
        let minus = m.find_label("-1").unwrap();
        (m, x, zero, plus, minus)
    }

    #[test]
    fn right_regular_is_valid() {
        for m in [catalog::mono_01(), catalog::mono_0pm1(), catalog::full_transformation(2).unwrap()] {
            let x = PartialMSet::right_regular(Arc::new(m));
            assert_eq!(x.validate(), Ok(()));
            assert!(x.is_total());
        }
        let trivial = Arc::new(catalog::full_transformation(1).unwrap());
        let x = PartialMSet::right_regular(trivial);
        assert_eq!(x.len(), 1);
        assert_eq!(x.act(0, 0), Some(0));
    }

    #[test]
    fn identity_axiom_violation() {
        let m = Arc::new(catalog::mono_01());
        let id = m.identity();
        let mut rows = vec![vec![Some(0); 2]];
        rows[0][id] = None;
        let x = PartialMSet::from_rows_unchecked(m, rows).unwrap();
        assert_eq!(x.validate(), Err(Violation::Identity { x: 0 }));
    }

    #[test]
    fn units_of_zero_pm1_form_a_subquotient() {
        let (_, x, zero, plus, minus) = zero_pm1();
        assert!(x.is_invariant(&[zero]));
        assert!(!x.is_invariant(&[plus, minus]));
        let s = x.restrict(&[plus, minus]).unwrap();
        assert_eq!(s.validate(), Ok(()));
        assert!(!s.is_total());
        // inclusion is lax but not a morphism
        let mut idx = vec![plus, minus];
        idx.sort_unstable();
        let incl = PointMap(idx);
        assert!(incl.is_lax_morphism(&s, &x));
        assert!(!incl.is_morphism(&s, &x));
        let id = PointMap::identity(s.len());
        assert!(id.is_morphism(&s, &s) && id.is_lax_morphism(&s, &s));
    }

    #[test]
    fn group_exit_and_reentry_is_not_subquotient() {
        let m = Arc::new(catalog::symmetric_group(2).unwrap());
        let x = PartialMSet::right_regular(m.clone());
        let err = x.restrict(&[m.identity()]).unwrap_err();
        assert!(matches!(err, Error::NotSubquotient { .. }));
    }

    #[test]
    fn sums_and_products() {
        let m = Arc::new(catalog::mono_01());
        let x = PartialMSet::right_regular(m.clone());
        let e = PartialMSet::empty(m.clone());
        assert_eq!(x.sum(&e).unwrap().len(), 2);
        assert_eq!(x.sum(&x).unwrap().len(), 4);
        assert_eq!(e.product(&x).unwrap().len(), 0);
        let one = PartialMSet::one(m.clone());
        let p = one.product(&x).unwrap();
        assert_eq!(p.rows(), x.rows());
        // ω ∧ ω is the one-point orbit with undefined 0-action
        let omega = x.restrict(&[m.identity()]).unwrap();
        let ww = omega.product(&omega).unwrap();
        assert_eq!(ww.len(), 1);
        assert_eq!(ww.rows(), omega.rows());
        let other = Arc::new(catalog::mono_0pm1());
        assert_eq!(x.sum(&PartialMSet::one(other)).unwrap_err(), Error::MonoidMismatch);
    }

    #[test]
    fn projection_is_lax_not_morphism() {
        let m = Arc::new(catalog::mono_01());
        let x = PartialMSet::right_regular(m.clone());
        let omega = x.restrict(&[m.identity()]).unwrap();
        let p = x.product(&omega).unwrap();
        let pi = PointMap((0..p.len()).map(|i| i / omega.len()).collect());
        assert!(pi.is_lax_morphism(&p, &x));
        assert!(!pi.is_morphism(&p, &x));
    }

    #[test]
    fn quotients() {
        let t = Arc::new(catalog::full_transformation(3).unwrap());
        let x = PartialMSet::right_regular(t.clone());
        assert_eq!(x.quotient(&Partition::discrete(x.len())).unwrap().rows(), x.rows());
        let collapsed = x.quotient(&Partition::full(x.len())).unwrap();
        assert_eq!(collapsed.rows(), PartialMSet::one(t).rows());
    }

    #[test]
    fn merging_across_definedness_is_not_a_congruence() {
        // Two points under T_2: a total fixed point, and a point fixed by the units and
        // annihilated by the constants.
        let t2 = Arc::new(catalog::full_transformation(2).unwrap());
        let units = [t2.find_label("[1,2]").unwrap(), t2.find_label("[2,1]").unwrap()];
        let rows = vec![
            vec![Some(0); 4],
            (0..4).map(|a| units.contains(&a).then_some(1)).collect(),
        ];
        let x = PartialMSet::new(t2, rows).unwrap();
        let err = x.quotient(&Partition::full(2)).unwrap_err();
        assert!(matches!(err, Error::NotCongruence { x: 0, y: 1, .. }));
    }
}
