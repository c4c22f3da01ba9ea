//! Right congruences on the R-class of an idempotent.
//!
//! Every strong orbit is a quotient `R_e/≡` of the R-class of an idempotent, where `R_e`
//! carries the restriction of right multiplication. This module enumerates those
//! congruences, builds the ones determined by subgroups `K ≤ H_e`, and the maximal one.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::group::MaximalSubgroup;
use crate::monoid::FiniteMonoid;
use crate::mset::{PartialMSet, PointMap};
use crate::partition::{Partition, SetPartitions, UnionFind};

pub const DEFAULT_CONGRUENCE_CAP: usize = 12;

/// Largest `|R_e|` enumerated by filtering all set partitions (Bell(8) = 4140).
pub const PARTITION_FILTER_LIMIT: usize = 8;

/// A right congruence on `R_e`; `classes` partitions positions into `r_class`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightCongruence {
    pub idempotent: usize,
    /// Elements of `R_e`, ascending.
    pub r_class: Vec<usize>,
    pub classes: Partition,
    /// Every class lies inside one H-class.
    pub contained_in_h: bool,
}

impl RightCongruence {
    pub(crate) fn new(green: &GreenData, idempotent: usize, r_class: Vec<usize>, classes: Partition) -> Self {
        let contained_in_h = classes.blocks().iter().all(|b| {
            b.iter().all(|&i| green.h_related(r_class[b[0]], r_class[i]))
        });
        RightCongruence { idempotent, r_class, classes, contained_in_h }
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.r_class.binary_search(&x).ok()
    }

    /// Whether two elements of `R_e` are congruent.
    pub fn related(&self, r: usize, s: usize) -> bool {
        match (self.position(r), self.position(s)) {
            (Some(i), Some(j)) => self.classes.same_block(i, j),
            _ => false,
        }
    }

    /// Congruence classes as lists of monoid elements.
    pub fn element_blocks(&self) -> Vec<Vec<usize>> {
        self.classes
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.r_class[i]).collect())
            .collect()
    }

    /// The class containing `x`, as monoid elements.
    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let i = self.position(x).expect("element of R_e");
        self.classes.block(self.classes.block_of(i)).into_iter().map(|j| self.r_class[j]).collect()
    }

    pub fn is_equality(&self) -> bool {
        self.classes.is_discrete()
    }

    /// True if `self` is finer than or equal to `other`.
    pub fn refines(&self, other: &RightCongruence) -> bool {
        self.r_class == other.r_class && self.classes.refines(&other.classes)
    }

    /// The quotient M-set `R_e/≡`; point `i` is the `i`-th class by least member.
    pub fn quotient(&self, monoid: &Arc<FiniteMonoid>) -> PartialMSet {
        let r = r_class_action(monoid, &self.r_class);
        r.quotient(&self.classes).expect("right congruence gives a quotient")
    }
}

/// `R_e` with the restriction of right multiplication, points in ascending element order.
pub fn r_class_mset(monoid: &Arc<FiniteMonoid>, green: &GreenData, e: usize) -> PartialMSet {
    r_class_action(monoid, &green.r_class_of(e))
}

fn r_class_action(monoid: &Arc<FiniteMonoid>, r_class: &[usize]) -> PartialMSet {
    let n = monoid.size();
    let mut action = Vec::with_capacity(r_class.len() * n);
    for &r in r_class {
        for m in 0..n {
            action.push(r_class.binary_search(&monoid.mul(r, m)).ok());
        }
    }
    PartialMSet::from_flat(monoid.clone(), r_class.len(), action)
}

/// Smallest congruence relating `a` and `b`, if any congruence does.
pub fn principal_congruence(x: &PartialMSet, a: usize, b: usize) -> Option<Partition> {
    let gens = x.monoid().generators();
    let mut uf = UnionFind::new(x.len());
    let mut queue = vec![(a, b)];
    while let Some((u, v)) = queue.pop() {
        if !uf.union(u, v) {
            continue;
        }
        for &g in &gens {
            match (x.act(u, g), x.act(v, g)) {
                (Some(p), Some(q)) => queue.push((p, q)),
                (None, None) => {}
                _ => return None,
            }
        }
    }
    Some(uf.into_partition())
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { size: n, cap })
    } else {
        Ok(())
    }
}

/// All right congruences on `R_e`, sorted by their canonical partitions.
///
/// Small classes are handled by filtering every set partition; larger ones by closing the
/// principal congruences under joins.
pub fn enumerate_right_congruences(
    monoid: &Arc<FiniteMonoid>,
    green: &GreenData,
    e: usize,
    cap: usize,
) -> Result<Vec<RightCongruence>> {
    if !monoid.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let r = green.r_class_of(e);
    check_cap(r.len(), cap)?;
    let x = r_class_action(monoid, &r);
    let parts = if r.len() <= PARTITION_FILTER_LIMIT {
        congruences_by_filter(&x)
    } else {
        congruences_by_join_closure(&x)
    };
    Ok(parts.into_iter().map(|p| RightCongruence::new(green, e, r.clone(), p)).collect())
}

/// Every congruence of `x`, found by testing each set partition.
pub fn congruences_by_filter(x: &PartialMSet) -> Vec<Partition> {
    SetPartitions::new(x.len()).filter(|p| x.is_congruence(p)).collect()
}

/// Every congruence of `x`, as joins of principal congruences.
pub fn congruences_by_join_closure(x: &PartialMSet) -> Vec<Partition> {
    let n = x.len();
    let mut found: BTreeSet<Partition> = BTreeSet::new();
    found.insert(Partition::discrete(n));
    for a in 0..n {
        for b in a + 1..n {
            if let Some(p) = principal_congruence(x, a, b) {
                found.insert(p);
            }
        }
    }
    let principals: Vec<Partition> = found.iter().cloned().collect();
    let mut frontier: Vec<Partition> = principals.clone();
    while let Some(p) = frontier.pop() {
        for q in &principals {
            let j = p.join(q);
            debug_assert!(x.is_congruence(&j));
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    found.into_iter().collect()
}

/// `r ≡_K s` iff `Kr = Ks`.
pub fn congruence_from_subgroup(
    green: &GreenData,
    group: &MaximalSubgroup,
    monoid: &FiniteMonoid,
    k: &[usize],
) -> Result<RightCongruence> {
    if !group.is_subgroup(k) {
        return Err(Error::NotASubgroup);
    }
    let e = group.idempotent();
    let r = green.r_class_of(e);
    // least element of the orbit Kr labels the class
    let labels: Vec<usize> = r.iter().map(|&x| k.iter().map(|&h| monoid.mul(h, x)).min().unwrap()).collect();
    Ok(RightCongruence::new(green, e, r, Partition::from_labels(&labels)))
}

/// The class of `e` in a congruence contained in H, which is a subgroup `K` with `≡ = ≡_K`.
pub fn identity_class_subgroup(
    c: &RightCongruence,
    green: &GreenData,
    group: &MaximalSubgroup,
    monoid: &FiniteMonoid,
) -> Result<Vec<usize>> {
    if !c.contained_in_h {
        return Err(Error::NotContainedInH);
    }
    let k = c.class_of(c.idempotent);
    if !group.is_subgroup(&k) {
        return Err(Error::Internal("class of e is not a subgroup".into()));
    }
    let from_k = congruence_from_subgroup(green, group, monoid, &k)?;
    if from_k.classes != c.classes {
        return Err(Error::Internal("congruence contained in H differs from the one of its e-class".into()));
    }
    Ok(k)
}

/// `r ≡_max s` iff `rm ∈ J_e ⟺ sm ∈ J_e` for every `m`, i.e. `L_r` and `L_s` are
/// indistinguishable.
pub fn max_congruence(monoid: &FiniteMonoid, green: &GreenData, e: usize) -> RightCongruence {
    let r = green.r_class_of(e);
    let je = green.j_class(e);
    let profiles: Vec<Vec<bool>> = r
        .iter()
        .map(|&x| monoid.elements().map(|m| green.j_class(monoid.mul(x, m)) == je).collect())
        .collect();
    RightCongruence::new(green, e, r, Partition::from_labels(&profiles))
}

/// A morphism `R_e/K → R_e/L` given by `Kr ↦ Lhr`.
#[derive(Clone, Debug)]
pub struct CosetMorphism {
    pub conjugator: usize,
    pub map: PointMap,
}

/// A morphism `R_e/K → R_e/L`, which exists iff `K ⊆ h⁻¹Lh` for some `h ∈ H_e`.
pub fn coset_quotient_morphism(
    green: &GreenData,
    group: &MaximalSubgroup,
    monoid: &FiniteMonoid,
    k: &[usize],
    l: &[usize],
) -> Result<Option<CosetMorphism>> {
    let ck = congruence_from_subgroup(green, group, monoid, k)?;
    let cl = congruence_from_subgroup(green, group, monoid, l)?;
    let Some(h) = group.subconjugator(k, l) else {
        return Ok(None);
    };
    let images = ck
        .classes
        .blocks()
        .iter()
        .map(|b| {
            let hr = monoid.mul(h, ck.r_class[b[0]]);
            cl.classes.block_of(cl.position(hr).expect("H_e acts on R_e"))
        })
        .collect();
    Ok(Some(CosetMorphism { conjugator: h, map: PointMap(images) }))
}

/// `R_e/K ≅ R_e/L` iff `K` and `L` are conjugate in `H_e`.
pub fn coset_quotient_isomorphic(group: &MaximalSubgroup, k: &[usize], l: &[usize]) -> bool {
    group.conjugator(k, l).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::green::compute_green;
    use crate::group::maximal_subgroup;
    use crate::iso::isomorphic;

    fn setup(m: FiniteMonoid) -> (Arc<FiniteMonoid>, GreenData) {
        let g = compute_green(&m);
        (Arc::new(m), g)
    }

    fn idempotent_of_rank(m: &FiniteMonoid, g: &GreenData, rank: usize) -> usize {
        g.idempotents
            .iter()
            .copied()
            .find(|&e| {
                let mut imgs: Vec<char> = m.label(e).chars().filter(char::is_ascii_digit).collect();
                imgs.sort_unstable();
                imgs.dedup();
                imgs.len() == rank
            })
            .unwrap()
    }

    #[test]
    fn constants_have_two_congruences() {
        for n in 2..=3 {
            let (m, g) = setup(catalog::full_transformation(n).unwrap());
            let e1 = idempotent_of_rank(&m, &g, 1);
            let cs = enumerate_right_congruences(&m, &g, e1, DEFAULT_CONGRUENCE_CAP).unwrap();
            assert_eq!(cs.len(), 2);
            assert!(cs.iter().any(RightCongruence::is_equality));
            let max = max_congruence(&m, &g, e1);
            assert!(max.classes.is_full());
            assert_eq!(max.quotient(&m).rows(), PartialMSet::one(m.clone()).rows());
        }
    }

    #[test]
    fn units_of_t2_have_two_congruences() {
        let (m, g) = setup(catalog::full_transformation(2).unwrap());
        let cs = enumerate_right_congruences(&m, &g, m.identity(), DEFAULT_CONGRUENCE_CAP).unwrap();
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn singleton_r_class() {
        let (m, g) = setup(catalog::mono_01());
        let cs = enumerate_right_congruences(&m, &g, m.identity(), DEFAULT_CONGRUENCE_CAP).unwrap();
        assert_eq!(cs.len(), 1);
        let max = max_congruence(&m, &g, m.identity());
        assert!(max.is_equality() && max.classes.is_full());
    }

    #[test]
    fn cap_is_enforced() {
        let (m, g) = setup(catalog::full_transformation(3).unwrap());
        assert_eq!(
            enumerate_right_congruences(&m, &g, m.identity(), 5).unwrap_err(),
            Error::CapExceeded { size: 6, cap: 5 }
        );
    }

    #[test]
    fn filter_and_join_closure_agree() {
        let corpus = [
            catalog::full_transformation(3).unwrap(),
            catalog::appendix_counterexample(),
            catalog::matrix_monoid(2, 2).unwrap(),
            catalog::five_element_nonsubring(),
        ];
        for m in corpus {
            let (m, g) = setup(m);
            for &e in &g.idempotents {
                let x = r_class_mset(&m, &g, e);
                assert_eq!(congruences_by_filter(&x), congruences_by_join_closure(&x));
            }
        }
    }

    #[test]
    fn subgroup_congruences() {
        let (m, g) = setup(catalog::full_transformation(3).unwrap());
        let e2 = idempotent_of_rank(&m, &g, 2);
        let h = maximal_subgroup(&m, &g, e2).unwrap();
        let trivial = congruence_from_subgroup(&g, &h, &m, &[e2]).unwrap();
        assert!(trivial.is_equality());
        let whole = congruence_from_subgroup(&g, &h, &m, h.elements()).unwrap();
        assert!(whole.contained_in_h);
        for b in whole.element_blocks() {
            assert_eq!(b, g.h_class_of(b[0]));
        }
        assert_eq!(identity_class_subgroup(&whole, &g, &h, &m).unwrap(), h.elements());
        assert_eq!(identity_class_subgroup(&trivial, &g, &h, &m).unwrap(), vec![e2]);
        let missing = h.elements().iter().copied().find(|&x| x != e2).unwrap();
        assert_eq!(
            congruence_from_subgroup(&g, &h, &m, &[missing]).unwrap_err(),
            Error::NotASubgroup
        );
    }

    #[test]
    fn group_congruence_classes_are_right_cosets() {
        let (m, g) = setup(catalog::symmetric_group(3).unwrap());
        let h = maximal_subgroup(&m, &g, m.identity()).unwrap();
        for k in h.all_subgroups() {
            let c = congruence_from_subgroup(&g, &h, &m, &k).unwrap();
            for x in m.elements() {
                let mut coset: Vec<usize> = k.iter().map(|&a| m.mul(a, x)).collect();
                coset.sort_unstable();
                assert_eq!(c.class_of(x), coset);
            }
        }
    }

    #[test]
    fn appendix_congruence_not_in_h() {
        let (m, g) = setup(catalog::appendix_counterexample());
        let e = catalog::appendix_idempotent(&m);
        let h = maximal_subgroup(&m, &g, e).unwrap();
        let c = catalog::appendix_congruence(&m, &g);
        assert!(!c.contained_in_h);
        assert_eq!(identity_class_subgroup(&c, &g, &h, &m).unwrap_err(), Error::NotContainedInH);
    }

    #[test]
    fn coset_morphisms_in_sym3() {
        let (m, g) = setup(catalog::full_transformation(3).unwrap());
        let h = maximal_subgroup(&m, &g, m.identity()).unwrap();
        let subs = h.all_subgroups();
        let c3 = subs.iter().find(|s| s.len() == 3).unwrap();
        let c2: Vec<&Vec<usize>> = subs.iter().filter(|s| s.len() == 2).collect();
        let e = vec![m.identity()];
        let ident = coset_quotient_morphism(&g, &h, &m, c3, c3).unwrap().unwrap();
        assert!(ident.map.is_morphism(
            &congruence_from_subgroup(&g, &h, &m, c3).unwrap().quotient(&m),
            &congruence_from_subgroup(&g, &h, &m, c3).unwrap().quotient(&m)
        ));
        assert!(coset_quotient_morphism(&g, &h, &m, &e, h.elements()).unwrap().is_some());
        assert!(coset_quotient_morphism(&g, &h, &m, c3, c2[0]).unwrap().is_none());
        assert!(coset_quotient_isomorphic(&h, c2[0], c2[1]));
        assert!(!coset_quotient_isomorphic(&h, &e, h.elements()));
        let q0 = congruence_from_subgroup(&g, &h, &m, c2[0]).unwrap().quotient(&m);
        let q1 = congruence_from_subgroup(&g, &h, &m, c2[1]).unwrap().quotient(&m);
        assert!(isomorphic(&q0, &q1).is_some());
    }
}
