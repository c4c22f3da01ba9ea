use std::sync::{Arc, OnceLock};

use burnside_core::burnside::compute_basis;
use burnside_core::catalog;
use burnside_core::congruence::principal_congruence;
use burnside_core::generate::generate_from_transformations;
use burnside_core::green::{check_stability, compute_green};
use burnside_core::iso::isomorphic;
use burnside_core::marks::{lax_count, lax_count_oracle, marks_of_element, marks_table, marks_vector, MarksTable};
use burnside_core::orbits::{canonical_form, strong_components, strong_orbits, weak_orbits};
use burnside_core::random::{default_pool, sample_msets};
use burnside_core::structure::StructureMap;
use burnside_core::{Caps, FiniteMonoid, OrbitBasis, PartialMSet, Partition};
use proptest::prelude::*;

struct Fixture {
    basis: OrbitBasis,
    marks: MarksTable,
    pool: Vec<PartialMSet>,
}

const NAMES: [&str; 6] = [
    "mono_01",
    "mono_0pm1",
    "full_transformation 2",
    "symmetric_group 3",
    "five_element_nonsubring",
    "appendix_counterexample",
];

fn fixtures() -> &'static Vec<Fixture> {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        NAMES
            .iter()
            .map(|name| {
                let m = Arc::new(catalog::build(name).unwrap().object.monoid());
                let basis = compute_basis(&m, &Caps::default()).unwrap();
                let marks = marks_table(&basis).unwrap();
                let extra: Vec<PartialMSet> = basis.classes().iter().map(|c| c.representative.clone()).collect();
                let pool = default_pool(&m, &extra, 6);
                Fixture { basis, marks, pool }
            })
            .collect()
    })
}

fn sample(f: &Fixture, seed: u64) -> PartialMSet {
    sample_msets(f.basis.monoid(), &f.pool, 1, 6, seed).pop().unwrap()
}

fn permuted(x: &PartialMSet, perm: &[usize]) -> PartialMSet {
    // point p of x becomes perm[p]
    let mut rows = vec![Vec::new(); x.len()];
    for p in 0..x.len() {
        rows[perm[p]] = x.row(p).iter().map(|q| q.map(|q| perm[q])).collect();
    }
    PartialMSet::new(x.monoid().clone(), rows).unwrap()
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

fn transformation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=degree, degree)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_monoids_are_monoids(gens in prop::collection::vec(transformation(3), 1..4)) {
        let m = generate_from_transformations(3, &gens, 64).unwrap();
        let id = m.identity();
        for a in m.elements() {
            prop_assert_eq!(m.mul(a, id), a);
            prop_assert_eq!(m.mul(id, a), a);
            for b in m.elements() {
                for c in m.elements() {
                    prop_assert_eq!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
                }
            }
        }
        let g = compute_green(&m);
        prop_assert!(check_stability(&m, &g));
        // a rebuilt table is the same monoid
        let again = FiniteMonoid::from_cayley(m.cayley(), None).unwrap();
        prop_assert_eq!(again, m);
    }

    #[test]
    fn partitions_form_a_lattice(a in prop::collection::vec(0usize..4, 7), b in prop::collection::vec(0usize..4, 7)) {
        let p = Partition::from_labels(&a);
        let q = Partition::from_labels(&b);
        let meet = p.meet(&q);
        let join = p.join(&q);
        prop_assert!(meet.refines(&p) && meet.refines(&q));
        prop_assert!(p.refines(&join) && q.refines(&join));
        prop_assert_eq!(p.join(&meet), p.clone());
        prop_assert_eq!(p.meet(&join), p);
    }

    #[test]
    fn samples_are_valid_and_orbits_partition_points(i in 0..NAMES.len(), seed in any::<u64>()) {
        let f = &fixtures()[i];
        let x = sample(f, seed);
        prop_assert!(x.validate().is_ok());
        let mut seen = vec![0; x.len()];
        for c in strong_components(&x) {
            for &p in &c {
                seen[p] += 1;
            }
            // points of a strong component reach each other
            let reach = x.reachable_from(&[c[0]]);
            prop_assert!(c.iter().all(|&p| reach[p]));
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
        let weak = weak_orbits(&x);
        for c in strong_components(&x) {
            prop_assert!(c.iter().all(|&p| weak.same_block(p, c[0])));
        }
    }

    #[test]
    fn principal_congruences_are_least(i in 0..NAMES.len(), seed in any::<u64>(), a in 0usize..6, b in 0usize..6) {
        let x = sample(&fixtures()[i], seed);
        let (a, b) = (a % x.len(), b % x.len());
        if let Some(p) = principal_congruence(&x, a, b) {
            prop_assert!(x.is_congruence(&p));
            prop_assert!(p.same_block(a, b));
            prop_assert!(x.quotient(&p).unwrap().validate().is_ok());
            // any congruence identifying a and b is coarser
            let full = Partition::full(x.len());
            if x.is_congruence(&full) {
                prop_assert!(p.refines(&full));
            }
        }
    }

    #[test]
    fn class_of_is_a_ring_homomorphism(i in 0..NAMES.len(), s in any::<u64>(), t in any::<u64>()) {
        let f = &fixtures()[i];
        let b = &f.basis;
        let (x, y) = (sample(f, s), sample(f, t));
        let (cx, cy) = (b.class_of(&x).unwrap(), b.class_of(&y).unwrap());
        prop_assert_eq!(b.class_of(&x.sum(&y).unwrap()).unwrap(), b.add(&cx, &cy).unwrap());
        prop_assert_eq!(b.class_of(&x.product(&y).unwrap()).unwrap(), b.mul(&cx, &cy).unwrap());
        let one = PartialMSet::one(b.monoid().clone());
        prop_assert_eq!(b.class_of(&x.product(&one).unwrap()).unwrap(), cx);
    }

    #[test]
    fn relabelling_points_changes_nothing(i in 0..NAMES.len(), seed in any::<u64>(), shuffle in any::<u64>()) {
        let f = &fixtures()[i];
        let x = sample(f, seed);
        let y = permuted(&x, &permutation(x.len(), shuffle));
        prop_assert!(isomorphic(&x, &y).is_some());
        prop_assert_eq!(f.basis.class_of(&x).unwrap(), f.basis.class_of(&y).unwrap());
        let g = f.basis.green();
        let mut ax: Vec<usize> = strong_orbits(&x, g).unwrap().iter().map(|o| o.apex).collect();
        let mut ay: Vec<usize> = strong_orbits(&y, g).unwrap().iter().map(|o| o.apex).collect();
        ax.sort_unstable();
        ay.sort_unstable();
        prop_assert_eq!(ax, ay);
    }

    #[test]
    fn canonical_forms_are_isomorphic_to_their_orbit(i in 0..NAMES.len(), seed in any::<u64>()) {
        let f = &fixtures()[i];
        let g = f.basis.green();
        let x = sample(f, seed);
        for o in strong_orbits(&x, g).unwrap() {
            let cf = canonical_form(&o.action, g).unwrap();
            let q = cf.congruence.quotient(f.basis.monoid());
            prop_assert!(cf.iso.is_morphism(&q, &o.action) && cf.iso.is_bijection(o.action.len()));
            prop_assert_eq!(g.j_class(cf.congruence.idempotent), o.apex);
        }
    }

    #[test]
    fn marks_are_additive_and_match_the_oracle(i in 0..NAMES.len(), seed in any::<u64>()) {
        let f = &fixtures()[i];
        let x = sample(f, seed);
        let direct: Vec<i64> = marks_vector(&f.basis, &x).into_iter().map(|v| v as i64).collect();
        let via_class = marks_of_element(&f.marks, &f.basis.class_of(&x).unwrap());
        prop_assert_eq!(direct, via_class);
        for c in f.basis.classes() {
            if let Some(n) = lax_count_oracle(&c.representative, &x, 200_000) {
                prop_assert_eq!(n, lax_count(&c.representative, &x));
            }
        }
    }

    #[test]
    fn structure_map_is_a_ring_homomorphism(i in 0..NAMES.len(), s in any::<u64>(), t in any::<u64>()) {
        let f = &fixtures()[i];
        let b = &f.basis;
        let map = StructureMap::new(b).unwrap();
        let (cx, cy) = (b.class_of(&sample(f, s)).unwrap(), b.class_of(&sample(f, t)).unwrap());
        let product = b.mul(&cx, &cy).unwrap();
        prop_assert_eq!(map.apply(&product.coeffs), map.product_mul(&map.apply(&cx.coeffs), &map.apply(&cy.coeffs)).unwrap());
        let sum = b.add(&cx, &cy).unwrap();
        let lhs = map.apply(&sum.coeffs);
        let rhs: Vec<i64> = map.apply(&cx.coeffs).iter().zip(map.apply(&cy.coeffs)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
