//! Weak and strong orbits, apexes, canonical forms and automorphism groups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::RightCongruence;
use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::iso::isomorphic;
use crate::monoid::FiniteMonoid;
use crate::mset::{PartialMSet, PointMap};
use crate::partition::{Partition, UnionFind};

/// Connected components of the undirected action graph.
pub fn weak_orbits(x: &PartialMSet) -> Partition {
    let gens = x.monoid().generators();
    let mut uf = UnionFind::new(x.len());
    for p in 0..x.len() {
        for &g in &gens {
            if let Some(q) = x.act(p, g) {
                uf.union(p, q);
            }
        }
    }
    uf.into_partition()
}

/// Strongly connected components of the digraph `x → xm`, each ascending, ordered by least
/// point.
pub fn strong_components(x: &PartialMSet) -> Vec<Vec<usize>> {
    let gens = x.monoid().generators();
    let n = x.len();
    let succ = |p: usize| -> Vec<usize> { gens.iter().filter_map(|&g| x.act(p, g)).collect() };

    const NONE: usize = usize::MAX;
    let mut index = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        // (node, successors, next successor position)
        let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ(root), 0));
        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succ(w), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(parent) = call.last() {
                    low[parent.0] = low[parent.0].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("Tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// A strong orbit of an M-set together with its restricted action.
#[derive(Clone, Debug)]
pub struct StrongOrbit {
    /// Points of the parent M-set, ascending.
    pub points: Vec<usize>,
    pub action: PartialMSet,
    /// J-class id of the apex.
    pub apex: usize,
}

impl StrongOrbit {
    /// True if no point of the orbit can be moved outside it.
    pub fn is_invariant_in(&self, parent: &PartialMSet) -> bool {
        parent.is_invariant(&self.points)
    }
}

/// The strong orbits of `x`, ordered by least point.
pub fn strong_orbits(x: &PartialMSet, green: &GreenData) -> Result<Vec<StrongOrbit>> {
    strong_components(x)
        .into_iter()
        .map(|points| {
            let action = x.restrict_unchecked(&points);
            let apex = apex(&action, green)?;
            Ok(StrongOrbit { points, action, apex })
        })
        .collect()
}

/// The apex of a strong orbit: the unique J-class `J` such that `m` does not annihilate the
/// orbit iff `m ≥_J J`.
pub fn apex(omega: &PartialMSet, green: &GreenData) -> Result<usize> {
    if omega.is_empty() {
        return Err(Error::ApexAssertionFailure("empty orbit has no apex".into()));
    }
    let m = omega.monoid();
    let non_annihilators: Vec<usize> =
        m.elements().filter(|&a| (0..omega.len()).any(|p| omega.act(p, a).is_some())).collect();
    let minimal: BTreeSet<usize> = non_annihilators
        .iter()
        .copied()
        .filter(|&a| {
            non_annihilators.iter().all(|&b| !(green.geq_j(a, b) && !green.geq_j(b, a)))
        })
        .map(|a| green.j_class(a))
        .collect();
    if minimal.len() != 1 {
        return Err(Error::ApexAssertionFailure(format!("{} minimal J-classes", minimal.len())));
    }
    let j = *minimal.iter().next().unwrap();
    let rep = green.j_rep(j);
    for a in m.elements() {
        let above = green.geq_j(a, rep);
        if above != non_annihilators.binary_search(&a).is_ok() {
            return Err(Error::ApexAssertionFailure(format!(
                "element {a} is {} the apex but {} the orbit",
                if above { "above" } else { "not above" },
                if above { "annihilates" } else { "does not annihilate" }
            )));
        }
    }
    Ok(j)
}

/// A strong orbit written as `R_e/≡`, with `α` the base point (`αe = α`) and `r ≡ s` iff
/// `αr = αs`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub base_point: usize,
    pub congruence: RightCongruence,
    /// Isomorphism from `R_e/≡` (classes by least member) onto the orbit.
    pub iso: PointMap,
}

/// Canonical form relative to the designated idempotent of the apex.
pub fn canonical_form(omega: &PartialMSet, green: &GreenData) -> Result<CanonicalForm> {
    let j = apex(omega, green)?;
    let e = green
        .designated_for_class(j)
        .ok_or_else(|| Error::ApexAssertionFailure("apex is not a regular J-class".into()))?;
    let alpha = (0..omega.len())
        .find(|&p| omega.act(p, e) == Some(p))
        .ok_or_else(|| Error::Internal("no point fixed by the apex idempotent".into()))?;
    let r = green.r_class_of(e);
    let images: Vec<usize> = r
        .iter()
        .map(|&x| omega.act(alpha, x).ok_or_else(|| Error::Internal("α·r undefined".into())))
        .collect::<Result<_>>()?;
    let classes = Partition::from_labels(&images);
    if classes.num_blocks() != omega.len() {
        return Err(Error::Internal("α·R_e does not cover the orbit".into()));
    }
    let congruence = RightCongruence::new(green, e, r, classes);
    let quotient = congruence.quotient(omega.monoid());
    let iso = PointMap(congruence.classes.blocks().iter().map(|b| images[b[0]]).collect());
    if !iso.is_morphism(&quotient, omega) || !iso.is_bijection(omega.len()) {
        return Err(Error::Internal("R_e/≡ is not isomorphic to the orbit".into()));
    }
    Ok(CanonicalForm { base_point: alpha, congruence, iso })
}

/// `Aut(R_e/≡) ≅ 𝔏/𝔎`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    /// `𝔏`: elements of `H_e` preserving `≡` under left multiplication.
    pub preserving: Vec<usize>,
    /// `𝔎`: elements of `H_e` congruent to `e`.
    pub kernel: Vec<usize>,
    /// Automorphisms of `R_e/≡`, one per coset of `𝔎` in `𝔏`, identity first.
    pub automorphisms: Vec<PointMap>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }
}

/// Automorphisms of `R_e/≡`, realised as `r̄ ↦ h r̄` for `h ∈ 𝔏`.
pub fn aut_group(monoid: &FiniteMonoid, green: &GreenData, c: &RightCongruence) -> AutGroup {
    let e = c.idempotent;
    let h_e = green.h_class_of(e);
    let blocks = c.classes.blocks();
    let block_of = |x: usize| c.classes.block_of(c.position(x).expect("H_e acts on R_e"));
    let preserving: Vec<usize> = h_e
        .iter()
        .copied()
        .filter(|&h| {
            blocks.iter().all(|b| {
                let target = block_of(monoid.mul(h, c.r_class[b[0]]));
                b.iter().all(|&i| block_of(monoid.mul(h, c.r_class[i])) == target)
            })
        })
        .collect();
    let kernel: Vec<usize> = h_e.iter().copied().filter(|&h| c.related(h, e)).collect();
    let mut automorphisms: Vec<PointMap> = Vec::new();
    let identity_first = core::iter::once(e).chain(preserving.iter().copied().filter(|&h| h != e));
    for h in identity_first {
        let map = PointMap(blocks.iter().map(|b| block_of(monoid.mul(h, c.r_class[b[0]]))).collect());
        if !automorphisms.contains(&map) {
            automorphisms.push(map);
        }
    }
    debug_assert_eq!(automorphisms.len() * kernel.len(), preserving.len());
    AutGroup { preserving, kernel, automorphisms }
}

/// `|Aut(X)|` by enumerating bijections; for small orbits only.
pub fn brute_force_automorphisms(x: &PartialMSet) -> Vec<PointMap> {
    let n = x.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let f = PointMap(p.to_vec());
        if f.is_morphism(x, x) {
            out.push(f);
        }
    });
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Whether two strong orbits are isomorphic, comparing apexes first.
pub fn orbits_isomorphic(a: &StrongOrbit, b: &StrongOrbit) -> bool {
    a.apex == b.apex && isomorphic(&a.action, &b.action).is_some()
}

/// The strong orbits of the right-regular action are the R-classes.
pub fn r_class_orbits(monoid: &Arc<FiniteMonoid>, green: &GreenData) -> Result<Vec<StrongOrbit>> {
    strong_orbits(&PartialMSet::right_regular(monoid.clone()), green)
}
