//! The strong Burnside ring: a basis of strong orbit classes and its arithmetic.
//!
//! Every strong orbit is isomorphic to some `R_e/≡` with `e` a designated idempotent, so the
//! basis is found by enumerating right congruences on each `R_e` and discarding isomorphic
//! quotients. Ring elements are integer vectors over this basis.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::congruence::{
    congruence_from_subgroup, enumerate_right_congruences, identity_class_subgroup, RightCongruence,
};
use crate::error::{Error, Result};
use crate::green::{compute_green, GreenData};
use crate::group::maximal_subgroup;
use crate::iso::isomorphic;
use crate::marks::lax_count;
use crate::monoid::FiniteMonoid;
use crate::mset::PartialMSet;
use crate::orbits::{aut_group, strong_orbits};
use crate::structure::indistinguishable_pairs;
use crate::Caps;

static NEXT_BASIS_ID: AtomicU64 = AtomicU64::new(1);

/// One isomorphism class of strong orbits, represented as `R_e/≡`.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    pub idempotent: usize,
    pub congruence: RightCongruence,
    pub representative: PartialMSet,
    /// J-class id of the apex, the J-class of `e`.
    pub apex: usize,
    pub aut_order: usize,
    /// `K ≤ H_e` with `≡ = ≡_K`, when the class is determined by a subgroup.
    pub subgroup: Option<Vec<usize>>,
}

impl OrbitClass {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn is_subgroup_determined(&self) -> bool {
        self.subgroup.is_some()
    }

    /// `(e, restricted growth string of ≡)`, used to order incomparable classes.
    pub fn encoding(&self) -> (usize, &[usize]) {
        (self.idempotent, self.congruence.classes.labels())
    }
}

/// The ordered strong orbit classes of a monoid.
///
/// Classes are ordered so that `O_i` precedes `O_j` whenever there is a lax morphism
/// `O_i → O_j` and they are not isomorphic.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    id: u64,
    monoid: Arc<FiniteMonoid>,
    green: GreenData,
    classes: Vec<OrbitClass>,
    one: usize,
}

/// An element of the Burnside ring as integer coefficients over a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    basis_id: u64,
    pub coeffs: Vec<i64>,
}

impl BurnsideElement {
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }
}

/// Candidate congruences on `R_e`: all of them when `|R_e|` is within the cap; above it, the
/// subgroup congruences if `J_e` is distinguishable, since then every right congruence on
/// `R_e` is one of those.
fn candidate_congruences(
    monoid: &Arc<FiniteMonoid>,
    green: &GreenData,
    e: usize,
    cap: usize,
) -> Result<(Vec<RightCongruence>, bool)> {
    match enumerate_right_congruences(monoid, green, e, cap) {
        Ok(cs) => Ok((cs, false)),
        Err(err @ Error::CapExceeded { .. }) => {
            if !indistinguishable_pairs(green, green.j_class(e)).is_empty() {
                return Err(err);
            }
            let h = maximal_subgroup(monoid, green, e)?;
            let cs = h
                .subgroups_up_to_conjugacy()
                .iter()
                .map(|k| congruence_from_subgroup(green, &h, monoid, k))
                .collect::<Result<_>>()?;
            Ok((cs, true))
        }
        Err(err) => Err(err),
    }
}

/// Builds the basis of strong orbit classes.
pub fn compute_basis(monoid: &Arc<FiniteMonoid>, caps: &Caps) -> Result<OrbitBasis> {
    let green = compute_green(monoid);
    let mut found: Vec<OrbitClass> = Vec::new();
    for e in green.designated_in_j_order() {
        let (congruences, pairwise_distinct) = candidate_congruences(monoid, &green, e, caps.congruence_cap)?;
        let h = maximal_subgroup(monoid, &green, e)?;
        let first_of_e = found.len();
        for c in congruences {
            let q = c.quotient(monoid);
            if !pairwise_distinct
                && found[first_of_e..]
                    .iter()
                    .any(|o| o.len() == q.len() && isomorphic(&o.representative, &q).is_some())
            {
                continue;
            }
            let subgroup = if c.contained_in_h { Some(identity_class_subgroup(&c, &green, &h, monoid)?) } else { None };
            let aut_order = aut_group(monoid, &green, &c).order();
            found.push(OrbitClass {
                idempotent: e,
                apex: green.j_class(e),
                representative: q,
                congruence: c,
                aut_order,
                subgroup,
            });
        }
    }
    let order = sort_by_lax_order(&found)?;
    let mut slots: Vec<Option<OrbitClass>> = found.into_iter().map(Some).collect();
    let classes: Vec<OrbitClass> = order.into_iter().map(|i| slots[i].take().expect("permutation")).collect();
    let one = classes
        .iter()
        .position(|c| c.len() == 1 && c.representative.is_total())
        .ok_or_else(|| Error::Internal("no class of the one-point M-set".into()))?;
    let id = NEXT_BASIS_ID.fetch_add(1, Ordering::Relaxed);
    Ok(OrbitBasis { id, monoid: monoid.clone(), green, classes, one })
}

/// Topological order of the lax-existence relation, smallest key first among the available
/// classes: more points first, then `(e, congruence)` encoding.
fn sort_by_lax_order(classes: &[OrbitClass]) -> Result<Vec<usize>> {
    let n = classes.len();
    let mut above = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && lax_count(&classes[i].representative, &classes[j].representative) > 0 {
                above[i][j] = true;
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if above[i][j] && above[j][i] {
                return Err(Error::Internal("lax morphisms both ways between distinct classes".into()));
            }
        }
    }
    let key = |i: usize| (core::cmp::Reverse(classes[i].len()), classes[i].encoding());
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&i| !placed[i] && (0..n).all(|j| placed[j] || !above[j][i]))
            .min_by(|&a, &b| key(a).cmp(&key(b)))
            .ok_or_else(|| Error::Internal("lax-existence relation has a cycle".into()))?;
        placed[next] = true;
        order.push(next);
    }
    Ok(order)
}

impl OrbitBasis {
    pub fn monoid(&self) -> &Arc<FiniteMonoid> {
        &self.monoid
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn classes(&self) -> &[OrbitClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &OrbitClass {
        &self.classes[i]
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class of the one-point M-set `𝟏`.
    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn element(&self, coeffs: Vec<i64>) -> Result<BurnsideElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::BasisMismatch);
        }
        Ok(BurnsideElement { basis_id: self.id, coeffs })
    }

    pub fn zero(&self) -> BurnsideElement {
        BurnsideElement { basis_id: self.id, coeffs: vec![0; self.rank()] }
    }

    pub fn basis_element(&self, i: usize) -> BurnsideElement {
        let mut z = self.zero();
        z.coeffs[i] = 1;
        z
    }

    pub fn one(&self) -> BurnsideElement {
        self.basis_element(self.one)
    }

    fn check(&self, a: &BurnsideElement) -> Result<()> {
        if a.basis_id != self.id || a.coeffs.len() != self.rank() {
            Err(Error::BasisMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(BurnsideElement { basis_id: self.id, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() })
    }

    pub fn sub(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(BurnsideElement { basis_id: self.id, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() })
    }

    pub fn scale(&self, k: i64, a: &BurnsideElement) -> Result<BurnsideElement> {
        self.check(a)?;
        Ok(BurnsideElement { basis_id: self.id, coeffs: a.coeffs.iter().map(|x| k * x).collect() })
    }

    /// `[X]`: the multiplicities of the classes of the strong orbits of `X`.
    pub fn class_of(&self, x: &PartialMSet) -> Result<BurnsideElement> {
        if !Arc::ptr_eq(x.monoid(), &self.monoid) && **x.monoid() != *self.monoid {
            return Err(Error::MonoidMismatch);
        }
        let mut coeffs = vec![0i64; self.rank()];
        for orbit in strong_orbits(x, &self.green)? {
            coeffs[self.match_orbit(orbit.apex, &orbit.action)?] += 1;
        }
        Ok(BurnsideElement { basis_id: self.id, coeffs })
    }

    /// Index of the class isomorphic to a strong orbit with the given apex.
    pub fn match_orbit(&self, apex: usize, orbit: &PartialMSet) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.apex == apex && c.len() == orbit.len() && isomorphic(&c.representative, orbit).is_some())
            .ok_or(Error::UnmatchedOrbit)
    }

    /// `[O_i]·[O_j] = [O_i ∧ O_j]`.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<BurnsideElement> {
        let p = self.classes[i].representative.product(&self.classes[j].representative)?;
        self.class_of(&p)
    }

    /// Product by bilinear extension of [`Self::basis_product`].
    pub fn mul(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for i in a.support() {
            for j in b.support() {
                let p = self.basis_product(i, j)?;
                for (k, c) in p.coeffs.iter().enumerate() {
                    out.coeffs[k] += a.coeffs[i] * b.coeffs[j] * c;
                }
            }
        }
        Ok(out)
    }

    /// The full structure constants of the ring.
    pub fn multiplication_table(&self) -> Result<MultiplicationTable> {
        let n = self.rank();
        let mut cube = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let p = self.basis_product(i, j)?.coeffs;
                cube[j][i] = p.clone();
                cube[i][j] = p;
            }
        }
        Ok(MultiplicationTable { basis_id: self.id, cube })
    }

    /// Indices of classes not determined by a subgroup.
    pub fn non_subgroup_classes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.classes[i].is_subgroup_determined()).collect()
    }

    /// Distinct designated idempotents appearing in the basis, in basis order of first use.
    pub fn idempotents(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        self.classes.iter().map(|c| c.idempotent).filter(|&e| seen.insert(e)).collect()
    }
}

/// Structure constants: `cube[i][j]` is the coefficient vector of `[O_i]·[O_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationTable {
    basis_id: u64,
    pub cube: Vec<Vec<Vec<i64>>>,
}

impl MultiplicationTable {
    pub fn rank(&self) -> usize {
        self.cube.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &[i64] {
        &self.cube[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.cube[i][j] == self.cube[j][i]))
    }

    pub fn mul(&self, a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
        let n = self.rank();
        if a.basis_id != self.basis_id || b.basis_id != self.basis_id || a.coeffs.len() != n || b.coeffs.len() != n {
            return Err(Error::BasisMismatch);
        }
        let mut out = vec![0i64; n];
        for i in a.support() {
            for j in b.support() {
                for (k, c) in self.cube[i][j].iter().enumerate() {
                    out[k] += a.coeffs[i] * b.coeffs[j] * c;
                }
            }
        }
        Ok(BurnsideElement { basis_id: self.basis_id, coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn basis(m: FiniteMonoid) -> OrbitBasis {
        compute_basis(&Arc::new(m), &Caps::default()).unwrap()
    }

    #[test]
    fn zero_one_basis() {
        let b = basis(catalog::mono_01());
        assert_eq!(b.rank(), 2);
        // ω = {1} comes first, then 𝟏 = {0}
        assert!(!b.class(0).representative.is_total());
        assert_eq!(b.one_index(), 1);
        let omega = b.basis_element(0);
        assert_eq!(b.mul(&omega, &omega).unwrap(), omega);
        let chain_basis_monoid = catalog::chain_mset(3);
        assert!(b.class_of(&chain_basis_monoid).is_ok());
    }

    #[test]
    fn trivial_monoid() {
        let b = basis(catalog::full_transformation(1).unwrap());
        assert_eq!(b.rank(), 1);
        let t = b.multiplication_table().unwrap();
        assert_eq!(t.cube, vec![vec![vec![1]]]);
    }

    #[test]
    fn t2_basis_and_regular_decomposition() {
        let m = Arc::new(catalog::full_transformation(2).unwrap());
        let b = compute_basis(&m, &Caps::default()).unwrap();
        assert_eq!(b.rank(), 4);
        let reg = b.class_of(&PartialMSet::right_regular(m.clone())).unwrap();
        assert_eq!(reg.coeffs.iter().sum::<i64>(), 2);
        for i in reg.support() {
            assert_eq!(b.class(i).congruence.classes.num_blocks(), b.class(i).congruence.r_class.len());
        }
    }

    #[test]
    fn one_is_identity_and_table_symmetric() {
        for (_, m) in catalog::corpus() {
            let b = basis(m);
            let t = b.multiplication_table().unwrap();
            assert!(t.is_symmetric());
            for i in 0..b.rank() {
                assert_eq!(t.mul(&b.one(), &b.basis_element(i)).unwrap(), b.basis_element(i));
            }
        }
    }

    #[test]
    fn basis_mismatch() {
        let a = basis(catalog::mono_01());
        let b = basis(catalog::mono_01());
        assert_eq!(a.add(&a.one(), &b.one()).unwrap_err(), Error::BasisMismatch);
        assert_eq!(a.element(vec![1]).unwrap_err(), Error::BasisMismatch);
    }

    #[test]
    fn class_of_rejects_other_monoids() {
        let a = basis(catalog::mono_01());
        let x = PartialMSet::one(Arc::new(catalog::mono_0pm1()));
        assert_eq!(a.class_of(&x).unwrap_err(), Error::MonoidMismatch);
    }

    #[test]
    fn distinguishable_shortcut_matches_enumeration() {
        // Sym(4) has |R_e| = 24, above the default cap
        let m = Arc::new(catalog::symmetric_group(4).unwrap());
        let shortcut = compute_basis(&m, &Caps::default()).unwrap();
        assert_eq!(shortcut.rank(), 11);
        let m3 = Arc::new(catalog::symmetric_group(3).unwrap());
        let small = Caps { congruence_cap: 3, ..Caps::default() };
        assert_eq!(compute_basis(&m3, &small).unwrap().rank(), compute_basis(&m3, &Caps::default()).unwrap().rank());
    }

    #[test]
    fn cap_exceeded_when_not_distinguishable() {
        let m = Arc::new(catalog::full_transformation(3).unwrap());
        let small = Caps { congruence_cap: 2, ..Caps::default() };
        assert!(compute_basis(&m, &small).unwrap_err().is_cap_exceeded());
    }
}
