//! Distinguishability and the comparison of `ℬ(M)` with `∏_e ℬ(H_e)`.
//!
//! For a designated idempotent `e` and an M-set `X`, the points `Xe` form a right `H_e`-set.
//! The map `φ([X]) = (e : [Xe])` is a ring homomorphism into the product of the Burnside rings
//! of the maximal subgroups, and it is an isomorphism exactly when `M` is distinguishable.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::burnside::{compute_basis, OrbitBasis};
use crate::catalog;
use crate::error::{Error, Result};
use crate::green::{compute_green, GreenData};
use crate::group::{maximal_subgroup, MaximalSubgroup};
use crate::marks::determinant;
use crate::monoid::FiniteMonoid;
use crate::mset::PartialMSet;
use crate::orbits::strong_components;
use crate::partition::Partition;
use crate::Caps;

/// For every L-class of J-class `j` (by L-class id), the R-class ids `R` with `L ∩ R`
/// containing an idempotent.
fn idempotent_pattern(green: &GreenData, j: usize) -> Vec<(usize, BTreeSet<usize>)> {
    let members = green.j_class_members(j);
    let l_ids: BTreeSet<usize> = members.iter().map(|&x| green.l_classes.block_of(x)).collect();
    l_ids
        .into_iter()
        .map(|l| {
            let rs = green
                .idempotents
                .iter()
                .filter(|&&e| green.l_classes.block_of(e) == l)
                .map(|&e| green.r_classes.block_of(e))
                .collect();
            (l, rs)
        })
        .collect()
}

/// Pairs of L-class ids in J-class `j` that no R-class distinguishes.
pub fn indistinguishable_pairs(green: &GreenData, j: usize) -> Vec<(usize, usize)> {
    let pattern = idempotent_pattern(green, j);
    let mut out = Vec::new();
    for (a, (la, ra)) in pattern.iter().enumerate() {
        for (lb, rb) in &pattern[a + 1..] {
            if ra == rb {
                out.push((*la, *lb));
            }
        }
    }
    out
}

/// The same pairs found through products: `L_x ∩ R_y` contains an idempotent iff `xy ∈ J`.
pub fn indistinguishable_pairs_by_products(m: &FiniteMonoid, green: &GreenData, j: usize) -> Vec<(usize, usize)> {
    let members = green.j_class_members(j);
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for &x in &members {
        let l = green.l_classes.block_of(x);
        if !reps.iter().any(|&(id, _)| id == l) {
            reps.push((l, x));
        }
    }
    reps.sort_unstable();
    let profile = |x: usize| -> Vec<bool> { members.iter().map(|&y| green.j_class(m.mul(x, y)) == j).collect() };
    let profiles: Vec<Vec<bool>> = reps.iter().map(|&(_, x)| profile(x)).collect();
    let mut out = Vec::new();
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            if profiles[a] == profiles[b] {
                out.push((reps[a].0, reps[b].0));
            }
        }
    }
    out
}

/// Distinguishability of one regular J-class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JClassReport {
    pub j_class: usize,
    pub designated_idempotent: usize,
    pub size: usize,
    pub l_classes: usize,
    pub r_classes: usize,
    /// Indistinguishable pairs, as one element from each L-class.
    pub indistinguishable: Vec<(usize, usize)>,
}

impl JClassReport {
    pub fn is_distinguishable(&self) -> bool {
        self.indistinguishable.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishabilityReport {
    /// Regular J-classes in J-order, higher first.
    pub per_j_class: Vec<JClassReport>,
    pub distinguishable: bool,
    pub er: bool,
    pub commuting_idempotents: bool,
}

pub fn distinguishability(m: &FiniteMonoid, green: &GreenData) -> Result<DistinguishabilityReport> {
    let mut per_j_class = Vec::new();
    for e in green.designated_in_j_order() {
        let j = green.j_class(e);
        let pairs = indistinguishable_pairs(green, j);
        if pairs != indistinguishable_pairs_by_products(m, green, j) {
            return Err(Error::Internal("idempotent pattern and product test disagree".into()));
        }
        let members = green.j_class_members(j);
        let count = |p: &Partition| members.iter().map(|&x| p.block_of(x)).collect::<BTreeSet<_>>().len();
        let rep_of = |l: usize| members.iter().copied().find(|&x| green.l_classes.block_of(x) == l).unwrap();
        per_j_class.push(JClassReport {
            j_class: j,
            designated_idempotent: e,
            size: members.len(),
            l_classes: count(&green.l_classes),
            r_classes: count(&green.r_classes),
            indistinguishable: pairs.iter().map(|&(a, b)| (rep_of(a), rep_of(b))).collect(),
        });
    }
    let distinguishable = per_j_class.iter().all(JClassReport::is_distinguishable);
    let er = is_er(green);
    if er && !distinguishable {
        return Err(Error::Internal("ER monoid reported not distinguishable".into()));
    }
    Ok(DistinguishabilityReport { per_j_class, distinguishable, er, commuting_idempotents: has_commuting_idempotents(m) })
}

/// Every R-class contains at most one idempotent.
pub fn is_er(green: &GreenData) -> bool {
    let rs: Vec<usize> = green.idempotents.iter().map(|&e| green.r_classes.block_of(e)).collect();
    let distinct: BTreeSet<usize> = rs.iter().copied().collect();
    distinct.len() == rs.len()
}

pub fn has_commuting_idempotents(m: &FiniteMonoid) -> bool {
    let es = m.idempotents();
    es.iter().all(|&e| es.iter().all(|&f| m.mul(e, f) == m.mul(f, e)))
}

/// The Burnside ring of a maximal subgroup, with basis the coset spaces `H_e/K`.
#[derive(Clone, Debug)]
pub struct GroupBurnsideRing {
    pub group: MaximalSubgroup,
    /// The group as a monoid on local indices.
    pub group_monoid: Arc<FiniteMonoid>,
    /// Conjugacy class representatives of subgroups (monoid element indices).
    pub subgroups: Vec<Vec<usize>>,
    /// `H_e/K` for each representative, points are right cosets `Kh`.
    pub coset_spaces: Vec<PartialMSet>,
}

impl GroupBurnsideRing {
    pub fn new(monoid: &FiniteMonoid, green: &GreenData, e: usize) -> Result<Self> {
        let group = maximal_subgroup(monoid, green, e)?;
        let group_monoid = group.as_monoid(monoid);
        let subgroups = group.subgroups_up_to_conjugacy();
        let regular = PartialMSet::right_regular(group_monoid.clone());
        let coset_spaces = subgroups
            .iter()
            .map(|k| {
                let local_k: Vec<usize> = k.iter().map(|&x| group.local(x).unwrap()).collect();
                let labels: Vec<usize> = (0..group.order())
                    .map(|h| local_k.iter().map(|&a| group_monoid.mul(a, h)).min().unwrap())
                    .collect();
                regular.quotient(&Partition::from_labels(&labels))
            })
            .collect::<Result<_>>()?;
        Ok(GroupBurnsideRing { group, group_monoid, subgroups, coset_spaces })
    }

    pub fn rank(&self) -> usize {
        self.subgroups.len()
    }

    /// Multiplicities of the orbit types `H_e/K` in a total group set.
    pub fn decompose(&self, y: &PartialMSet) -> Result<Vec<i64>> {
        if !Arc::ptr_eq(y.monoid(), &self.group_monoid) && **y.monoid() != *self.group_monoid {
            return Err(Error::MonoidMismatch);
        }
        if !y.is_total() {
            return Err(Error::NotTotal);
        }
        let mut coeffs = vec![0i64; self.rank()];
        for orbit in strong_components(y) {
            let p = orbit[0];
            let stabilizer: Vec<usize> = (0..self.group.order())
                .filter(|&h| y.act(p, h) == Some(p))
                .map(|h| self.group.elements()[h])
                .collect();
            let k = self
                .group
                .class_index(&self.subgroups, &stabilizer)
                .ok_or_else(|| Error::Internal("stabilizer is not a subgroup".into()))?;
            coeffs[k] += 1;
        }
        Ok(coeffs)
    }

    /// `[H/K_i]·[H/K_j]`.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<Vec<i64>> {
        self.decompose(&self.coset_spaces[i].product(&self.coset_spaces[j])?)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.rank()];
        for i in 0..a.len() {
            if a[i] == 0 {
                continue;
            }
            for j in 0..b.len() {
                if b[j] == 0 {
                    continue;
                }
                for (k, c) in self.basis_product(i, j)?.iter().enumerate() {
                    out[k] += a[i] * b[j] * c;
                }
            }
        }
        Ok(out)
    }

    /// The unit `[H/H]`.
    pub fn one(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[self.rank() - 1] = 1;
        v
    }
}

/// `Xe` as a right `H_e`-set on the group's local indices; points in ascending order of
/// the points `xe` of `X`.
pub fn restrict_to_group(x: &PartialMSet, ring: &GroupBurnsideRing) -> Result<PartialMSet> {
    let e = ring.group.idempotent();
    let points: Vec<usize> = {
        let s: BTreeSet<usize> = (0..x.len()).filter_map(|p| x.act(p, e)).collect();
        s.into_iter().collect()
    };
    let elements = ring.group.elements();
    let mut rows = Vec::with_capacity(points.len());
    for &p in &points {
        let mut row = Vec::with_capacity(elements.len());
        for &h in elements {
            let img = x.act(p, h).ok_or(Error::NotTotal)?;
            row.push(Some(points.binary_search(&img).map_err(|_| Error::NotTotal)?));
        }
        rows.push(row);
    }
    PartialMSet::from_rows_unchecked(ring.group_monoid.clone(), rows)
}

/// `φ` over a basis: one group Burnside ring per designated idempotent, in J-order.
#[derive(Clone, Debug)]
pub struct StructureMap {
    pub idempotents: Vec<usize>,
    pub rings: Vec<GroupBurnsideRing>,
    /// `images[i][c]`: coefficients of `φ([O_i])` at the `c`-th idempotent.
    pub images: Vec<Vec<Vec<i64>>>,
}

impl StructureMap {
    pub fn new(basis: &OrbitBasis) -> Result<Self> {
        let m = basis.monoid();
        let g = basis.green();
        let idempotents = g.designated_in_j_order();
        let rings: Vec<GroupBurnsideRing> =
            idempotents.iter().map(|&e| GroupBurnsideRing::new(m, g, e)).collect::<Result<_>>()?;
        let images = basis
            .classes()
            .iter()
            .map(|c| {
                rings.iter().map(|r| r.decompose(&restrict_to_group(&c.representative, r)?)).collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        Ok(StructureMap { idempotents, rings, images })
    }

    /// Coordinates `(idempotent position, subgroup class)` in order.
    pub fn coordinates(&self) -> Vec<(usize, usize)> {
        self.rings.iter().enumerate().flat_map(|(c, r)| (0..r.rank()).map(move |k| (c, k))).collect()
    }

    /// Rank of `∏_e ℬ(H_e)`.
    pub fn product_rank(&self) -> usize {
        self.rings.iter().map(GroupBurnsideRing::rank).sum()
    }

    /// `φ` of a coefficient vector, flattened over [`Self::coordinates`].
    pub fn apply(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.product_rank()];
        for (i, &a) in coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let flat = self.images[i].iter().flatten();
            for (slot, v) in out.iter_mut().zip(flat) {
                *slot += a * v;
            }
        }
        out
    }

    /// Coordinatewise product in `∏_e ℬ(H_e)` of two flattened vectors.
    pub fn product_mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(a.len());
        let mut offset = 0;
        for r in &self.rings {
            let k = r.rank();
            out.extend(r.mul(&a[offset..offset + k], &b[offset..offset + k])?);
            offset += k;
        }
        Ok(out)
    }

    /// Columns = basis classes, rows = coordinates.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        let cols: Vec<Vec<i64>> = (0..n).map(|i| self.images[i].iter().flatten().copied().collect()).collect();
        (0..self.product_rank()).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
    }

    /// Checks `φ(O_i·O_j) = φ(O_i)·φ(O_j)` for every pair of basis classes.
    pub fn check_multiplicative(&self, basis: &OrbitBasis) -> Result<usize> {
        let n = basis.rank();
        let mut checked = 0;
        for i in 0..n {
            for j in i..n {
                let lhs = self.apply(&basis.basis_product(i, j)?.coeffs);
                let rhs = self.product_mul(&self.apply(&basis.basis_element(i).coeffs), &self.apply(&basis.basis_element(j).coeffs))?;
                if lhs != rhs {
                    return Err(Error::Internal(format!("φ is not multiplicative on classes {i} and {j}")));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }
}

/// The matrix of `φ` on the span of subgroup-determined classes, and the isomorphism verdict.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub distinguishability: DistinguishabilityReport,
    pub rank: usize,
    pub product_rank: usize,
    /// Basis indices of subgroup-determined classes, ordered to match the coordinates.
    pub subgroup_columns: Vec<usize>,
    /// `φ` restricted to those classes; rows follow [`StructureMap::coordinates`].
    pub subgroup_matrix: Vec<Vec<i64>>,
    pub unitriangular: bool,
    /// Classes not determined by a subgroup.
    pub witnesses: Vec<usize>,
    /// `ℬ(M) ≅ ∏_e ℬ(H_e)`, decided by comparing ranks.
    pub isomorphic: bool,
    pub full_matrix: Vec<Vec<i64>>,
    pub multiplicative_pairs: usize,
}

pub fn structure_report(basis: &OrbitBasis) -> Result<StructureReport> {
    let m = basis.monoid();
    let g = basis.green();
    let distinguishability = distinguishability(m, g)?;
    let map = StructureMap::new(basis)?;
    let coords = map.coordinates();
    let mut subgroup_columns = vec![usize::MAX; coords.len()];
    for (i, c) in basis.classes().iter().enumerate() {
        let Some(k) = &c.subgroup else { continue };
        let pos = map.idempotents.iter().position(|&e| e == c.idempotent).expect("designated idempotent");
        let ring = &map.rings[pos];
        let kc = ring.group.class_index(&ring.subgroups, k).expect("subgroup class");
        let row = coords.iter().position(|&x| x == (pos, kc)).unwrap();
        if subgroup_columns[row] != usize::MAX {
            return Err(Error::Internal("two classes determined by conjugate subgroups".into()));
        }
        subgroup_columns[row] = i;
    }
    if subgroup_columns.contains(&usize::MAX) {
        return Err(Error::Internal("a coset quotient R_e/K is missing from the basis".into()));
    }
    let full_matrix = map.matrix();
    let subgroup_matrix: Vec<Vec<i64>> =
        full_matrix.iter().map(|row| subgroup_columns.iter().map(|&c| row[c]).collect()).collect();
    let n = subgroup_matrix.len();
    let unitriangular = (0..n).all(|i| subgroup_matrix[i][i] == 1 && (0..i).all(|j| subgroup_matrix[i][j] == 0));
    let witnesses = basis.non_subgroup_classes();
    let isomorphic = basis.rank() == map.product_rank();
    if isomorphic != distinguishability.distinguishable {
        return Err(Error::Internal("rank comparison and distinguishability disagree".into()));
    }
    let multiplicative_pairs = map.check_multiplicative(basis)?;
    Ok(StructureReport {
        distinguishability,
        rank: basis.rank(),
        product_rank: map.product_rank(),
        subgroup_columns,
        subgroup_matrix,
        unitriangular,
        witnesses,
        isomorphic,
        full_matrix,
        multiplicative_pairs,
    })
}

/// Checks on `ℬ(T_n) ≅ ℤ × ∏_{r ≤ n} ℬ(Sym(r))`.
#[derive(Clone, Debug)]
pub struct TnReport {
    pub n: usize,
    pub rank: usize,
    /// `1 + Σ_r` number of subgroup classes of `Sym(r)`, computed in `Sym(r)` itself.
    pub formula_rank: usize,
    pub formula_holds: bool,
    /// The only class not determined by a subgroup is `𝟏`.
    pub only_one_is_not_subgroup_determined: bool,
    /// The span of classes other than `𝟏` is closed under multiplication.
    pub ideal_closed: bool,
    /// `Ψ(x) = (coefficient of 𝟏, φ(x))` is square with determinant ±1 and multiplicative.
    pub psi_isomorphism: bool,
    pub psi_determinant: i128,
    pub distinguishability: DistinguishabilityReport,
}

pub fn tn_report(n: usize, caps: &Caps) -> Result<TnReport> {
    if n == 0 || n > 3 {
        return Err(Error::ParameterOutOfRange { name: "n", value: n });
    }
    let m = Arc::new(catalog::full_transformation(n)?);
    let basis = compute_basis(&m, caps)?;
    let table = basis.multiplication_table()?;
    let green = basis.green();
    let dist = distinguishability(&m, green)?;
    let one = basis.one_index();
    let rank = basis.rank();

    let mut formula_rank = 1;
    for r in 1..=n {
        let s = catalog::symmetric_group(r)?;
        let sg = compute_green(&s);
        formula_rank += maximal_subgroup(&s, &sg, s.identity())?.subgroups_up_to_conjugacy().len();
    }
    let only_one_is_not_subgroup_determined = basis.non_subgroup_classes() == [one];
    let ideal_closed = (0..rank).filter(|&i| i != one).all(|i| (0..rank).filter(|&j| j != one).all(|j| table.entry(i, j)[one] == 0));

    let map = StructureMap::new(&basis)?;
    let psi = |coeffs: &[i64]| -> Vec<i64> {
        let mut v = vec![coeffs[one]];
        v.extend(map.apply(coeffs));
        v
    };
    let columns: Vec<Vec<i64>> = (0..rank).map(|i| psi(&basis.basis_element(i).coeffs)).collect();
    let square = columns.first().map_or(0, Vec::len) == rank;
    let mut psi_determinant = 0;
    let mut psi_isomorphism = false;
    if square {
        let shifted: Vec<Vec<i128>> = (0..rank).map(|r| columns.iter().map(|c| c[r] as i128).collect()).collect();
        psi_determinant = determinant(shifted)?;
        let mut multiplicative = true;
        for i in 0..rank {
            for j in i..rank {
                let lhs = psi(&table.cube[i][j]);
                let (a, b) = (&columns[i], &columns[j]);
                let mut rhs = vec![a[0] * b[0]];
                rhs.extend(map.product_mul(&a[1..], &b[1..])?);
                multiplicative &= lhs == rhs;
            }
        }
        psi_isomorphism = multiplicative && psi_determinant.abs() == 1;
    }
    Ok(TnReport {
        n,
        rank,
        formula_rank,
        formula_holds: rank == formula_rank,
        only_one_is_not_subgroup_determined,
        ideal_closed,
        psi_isomorphism,
        psi_determinant,
        distinguishability: dist,
    })
}
