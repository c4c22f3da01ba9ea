//! Seeded random M-sets for property checks.
//!
//! Blocks from a pool are combined by sums and products, then cut down to a random
//! subquotient `S ∖ B` with `B ⊆ S` invariant, and optionally collapsed by a principal
//! congruence. Every step preserves the action axioms.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::congruence::principal_congruence;
use crate::monoid::FiniteMonoid;
use crate::mset::PartialMSet;

/// Default pool: `𝟏`, the right-regular action when small, and the given extra blocks.
pub fn default_pool(monoid: &Arc<FiniteMonoid>, extra: &[PartialMSet], max_points: usize) -> Vec<PartialMSet> {
    let mut pool = Vec::new();
    pool.push(PartialMSet::one(monoid.clone()));
    if monoid.size() <= max_points {
        pool.push(PartialMSet::right_regular(monoid.clone()));
    }
    pool.extend(extra.iter().filter(|x| !x.is_empty() && x.len() <= max_points).cloned());
    pool
}

fn subquotient<R: Rng>(x: &PartialMSet, max_points: usize, rng: &mut R) -> Option<PartialMSet> {
    let n = x.len();
    if n == 0 {
        return None;
    }
    let seeds: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(0..n)).collect();
    let s_mask = x.reachable_from(&seeds);
    let s: Vec<usize> = (0..n).filter(|&p| s_mask[p]).collect();
    let inner_seeds: Vec<usize> = (0..rng.gen_range(0..=2)).filter_map(|_| s.choose(rng).copied()).collect();
    let b_mask = x.reachable_from(&inner_seeds);
    let diff: Vec<usize> = s.iter().copied().filter(|&p| !b_mask[p]).collect();
    if diff.is_empty() || diff.len() > max_points {
        return None;
    }
    Some(x.restrict(&diff).expect("difference of invariant subsets is a subquotient"))
}

/// One random M-set with between 1 and `max_points` points.
pub fn random_mset<R: Rng>(monoid: &Arc<FiniteMonoid>, pool: &[PartialMSet], max_points: usize, rng: &mut R) -> PartialMSet {
    for _ in 0..64 {
        let mut x = pool.choose(rng).expect("nonempty pool").clone();
        for _ in 0..rng.gen_range(0..=2) {
            let y = pool.choose(rng).expect("nonempty pool");
            let combined = if rng.gen_bool(0.5) { x.sum(y) } else { x.product(y) };
            let combined = combined.expect("pool shares one monoid");
            if combined.len() <= 4 * max_points {
                x = combined;
            }
        }
        let Some(mut x) = subquotient(&x, max_points, rng) else { continue };
        if x.len() >= 2 && rng.gen_bool(0.3) {
            let a = rng.gen_range(0..x.len());
            let b = rng.gen_range(0..x.len());
            if let Some(p) = principal_congruence(&x, a, b) {
                x = x.quotient(&p).expect("principal congruence");
            }
        }
        return x;
    }
    PartialMSet::one(monoid.clone())
}

/// `count` random M-sets from a fixed seed.
pub fn sample_msets(
    monoid: &Arc<FiniteMonoid>,
    pool: &[PartialMSet],
    count: usize,
    max_points: usize,
    seed: u64,
) -> Vec<PartialMSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_mset(monoid, pool, max_points, &mut rng)).collect()
}
