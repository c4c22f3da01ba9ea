//! Isomorphism testing for M-sets.
//!
//! Points are first split by an invariant signature (for every monoid element: undefined,
//! fixed, or moved; plus the in-degree). The search then assigns one point at a time and
//! propagates along the action: once `f(x) = y`, the morphism condition forces
//! `f(xm) = ym` for every `m`, so a connected piece is settled by a single choice.

use alloc::vec;
use alloc::vec::Vec;

use crate::mset::{PartialMSet, PointMap};

const UNSET: usize = usize::MAX;

fn signatures(x: &PartialMSet) -> Vec<(Vec<u8>, usize)> {
    let n = x.monoid().size();
    let mut indeg = vec![0usize; x.len()];
    for p in 0..x.len() {
        for a in 0..n {
            if let Some(q) = x.act(p, a) {
                if q != p {
                    indeg[q] += 1;
                }
            }
        }
    }
    (0..x.len())
        .map(|p| {
            let sig = (0..n)
                .map(|a| match x.act(p, a) {
                    None => 0,
                    Some(q) if q == p => 1,
                    Some(_) => 2,
                })
                .collect();
            (sig, indeg[p])
        })
        .collect()
}

struct Search<'a> {
    x: &'a PartialMSet,
    y: &'a PartialMSet,
    sx: Vec<(Vec<u8>, usize)>,
    sy: Vec<(Vec<u8>, usize)>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn propagate(&self, p: usize, q: usize, fwd: &mut [usize], bwd: &mut [usize]) -> bool {
        if self.sx[p] != self.sy[q] {
            return false;
        }
        fwd[p] = q;
        bwd[q] = p;
        let mut stack = vec![(p, q)];
        let n = self.x.monoid().size();
        while let Some((a, b)) = stack.pop() {
            for m in 0..n {
                match (self.x.act(a, m), self.y.act(b, m)) {
                    (None, None) => {}
                    (Some(u), Some(v)) => {
                        if fwd[u] == v {
                            continue;
                        }
                        if fwd[u] != UNSET || bwd[v] != UNSET || self.sx[u] != self.sy[v] {
                            return false;
                        }
                        fwd[u] = v;
                        bwd[v] = u;
                        stack.push((u, v));
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    fn run(&self, fwd: &mut Vec<usize>, bwd: &mut Vec<usize>) -> bool {
        let Some(&p) = self.order.iter().find(|&&p| fwd[p] == UNSET) else {
            return true;
        };
        for q in 0..self.y.len() {
            if bwd[q] != UNSET || self.sx[p] != self.sy[q] {
                continue;
            }
            let (saved_f, saved_b) = (fwd.clone(), bwd.clone());
            if self.propagate(p, q, fwd, bwd) && self.run(fwd, bwd) {
                return true;
            }
            *fwd = saved_f;
            *bwd = saved_b;
        }
        false
    }
}

/// An isomorphism `X → Y`, if one exists.
pub fn isomorphic(x: &PartialMSet, y: &PartialMSet) -> Option<PointMap> {
    if !x.same_monoid(y) || x.len() != y.len() {
        return None;
    }
    let sx = signatures(x);
    let sy = signatures(y);
    let (mut a, mut b) = (sx.clone(), sy.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // most constrained points first
    let candidates: Vec<usize> = sx.iter().map(|s| sy.iter().filter(|t| *t == s).count()).collect();
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by_key(|&p| (candidates[p], p));
    let search = Search { x, y, sx, sy, order };
    let mut fwd = vec![UNSET; x.len()];
    let mut bwd = vec![UNSET; x.len()];
    if search.run(&mut fwd, &mut bwd) {
        let f = PointMap(fwd);
        debug_assert!(f.is_morphism(x, y));
        Some(f)
    } else {
        None
    }
}

pub fn is_isomorphic(x: &PartialMSet, y: &PartialMSet) -> bool {
    isomorphic(x, y).is_some()
}
