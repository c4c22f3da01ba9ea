//! Named example monoids and M-sets.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::congruence::RightCongruence;
use crate::error::{Error, Result};
use crate::generate::{
    all_matrices, generate_from_matrices, generate_from_transformations, matrix_label, MatrixRing,
    DEFAULT_ELEMENT_CAP,
};
use crate::green::GreenData;
use crate::monoid::FiniteMonoid;
use crate::mset::PartialMSet;
use crate::partition::Partition;

fn labelled(table: Vec<Vec<usize>>, labels: &[&str]) -> FiniteMonoid {
    FiniteMonoid::from_cayley(table, Some(labels.iter().map(|s| s.to_string()).collect()))
        .expect("catalog table is a monoid")
}

/// `{0, 1}` under multiplication.
pub fn mono_01() -> FiniteMonoid {
    labelled(vec![vec![0, 0], vec![0, 1]], &["0", "1"])
}

/// `{0, 1, -1}` under multiplication.
pub fn mono_0pm1() -> FiniteMonoid {
    labelled(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]], &["0", "1", "-1"])
}

/// `X_n = {0, …, n}` over `{0, 1}` with `x * m = xm`.
pub fn chain_mset(n: usize) -> PartialMSet {
    let m = Arc::new(mono_01());
    let rows = (0..=n).map(|x| vec![Some(0), Some(x)]).collect();
    PartialMSet::new(m, rows).expect("chain is an M-set")
}

pub const MAX_TRANSFORMATION_DEGREE: usize = 4;

/// The full transformation monoid `T_n`, generated by a transposition, an n-cycle and a
/// map of rank `n - 1`.
pub fn full_transformation(n: usize) -> Result<FiniteMonoid> {
    if n == 0 || n > MAX_TRANSFORMATION_DEGREE {
        return Err(Error::ParameterOutOfRange { name: "n", value: n });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (1..=n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (1..=n).map(|x| x % n + 1).collect();
        let mut merge: Vec<usize> = (1..=n).collect();
        merge[1] = 1;
        gens.extend([swap, cycle, merge]);
    }
    generate_from_transformations(n, &gens, DEFAULT_ELEMENT_CAP)
}

pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// `Sym(n)` as a monoid of permutations.
pub fn symmetric_group(n: usize) -> Result<FiniteMonoid> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::ParameterOutOfRange { name: "n", value: n });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (1..=n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (1..=n).map(|x| x % n + 1).collect();
        gens.extend([swap, cycle]);
    }
    generate_from_transformations(n, &gens, DEFAULT_ELEMENT_CAP)
}

/// All `n × n` matrices over GF(q).
pub fn matrix_monoid(n: usize, q: u32) -> Result<FiniteMonoid> {
    if n == 0 || n > 2 {
        return Err(Error::ParameterOutOfRange { name: "n", value: n });
    }
    if q != 2 && q != 3 {
        return Err(Error::ParameterOutOfRange { name: "q", value: q as usize });
    }
    generate_from_matrices(&MatrixRing::finite(q)?, n, &all_matrices(q, n), DEFAULT_ELEMENT_CAP)
}

/// `{a, b, e, f, 1}`, all idempotent: `{a, b}` and `{e, f}` are right-zero (`xy = y`), `e` and
/// `f` act as two-sided identities on `{a, b}`, and `1` is the identity.
pub fn five_element_nonsubring() -> FiniteMonoid {
    const A: usize = 0;
    const B: usize = 1;
    const E: usize = 2;
    const F: usize = 3;
    const ONE: usize = 4;
    let mul = |x: usize, y: usize| match (x, y) {
        (ONE, y) => y,
        (x, ONE) => x,
        (A | B, A | B) => y,
        (E | F, E | F) => y,
        (A | B, E | F) => x,
        (E | F, A | B) => y,
        _ => unreachable!(),
    };
    let table = (0..5).map(|x| (0..5).map(|y| mul(x, y)).collect()).collect();
    labelled(table, &["a", "b", "e", "f", "1"])
}

/// Unit row vectors `(1,0,0)`, `(0,1,0)`, `(0,0,1)`.
fn unit_row(i: usize) -> [i64; 3] {
    let mut r = [0; 3];
    r[i] = 1;
    r
}

fn rows_to_matrix(rows: [[i64; 3]; 3]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn negate(r: [i64; 3]) -> [i64; 3] {
    [-r[0], -r[1], -r[2]]
}

/// The 12 signed `3 × 3` matrices `±(a; a; a)` and `±(a; -a; -a)` for unit rows `a`, with
/// the identity matrix.
pub fn appendix_counterexample() -> FiniteMonoid {
    let mut gens = Vec::new();
    for i in 0..3 {
        let a = unit_row(i);
        for s in [a, negate(a)] {
            gens.push(rows_to_matrix([s, s, s]));
            gens.push(rows_to_matrix([s, negate(s), negate(s)]));
        }
    }
    let m = generate_from_matrices(&MatrixRing::Integers, 3, &gens, DEFAULT_ELEMENT_CAP)
        .expect("signed matrices close up");
    debug_assert_eq!(m.size(), 13);
    m
}

fn flat_label(rows: [[i64; 3]; 3]) -> String {
    let flat: Vec<i64> = rows.iter().flatten().copied().collect();
    matrix_label(3, &flat)
}

/// The idempotent `e = (1,0,0; 1,0,0; 1,0,0)` of [`appendix_counterexample`].
pub fn appendix_idempotent(m: &FiniteMonoid) -> usize {
    let a = unit_row(0);
    m.find_label(&flat_label([a, a, a])).expect("appendix monoid")
}

/// The right congruence on `R_e` merging `(0,1,0; 0,1,0; 0,1,0)` and `(0,0,1; 0,0,1; 0,0,1)`.
pub fn appendix_congruence(m: &FiniteMonoid, g: &GreenData) -> RightCongruence {
    let e = appendix_idempotent(m);
    let r = g.r_class_of(e);
    let (b, c) = (unit_row(1), unit_row(2));
    let x = m.find_label(&flat_label([b, b, b])).expect("appendix monoid");
    let y = m.find_label(&flat_label([c, c, c])).expect("appendix monoid");
    let labels: Vec<usize> = r.iter().map(|&z| if z == y { x } else { z }).collect();
    RightCongruence::new(g, e, r, Partition::from_labels(&labels))
}

/// A catalog object: most entries are monoids, a few are M-sets.
#[derive(Clone, Debug)]
pub enum Catalogued {
    Monoid(FiniteMonoid),
    MSet(PartialMSet),
}

impl Catalogued {
    pub fn monoid(&self) -> FiniteMonoid {
        match self {
            Catalogued::Monoid(m) => m.clone(),
            Catalogued::MSet(x) => (**x.monoid()).clone(),
        }
    }
}

/// Facts known about a catalog monoid, checked by the test suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub size: Option<usize>,
    /// Rank of the Burnside ring.
    pub rank: Option<usize>,
    pub distinguishable: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Parameter names, in order.
    pub params: &'static [&'static str],
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "mono_01", params: &[], description: "{0,1} under multiplication" },
    CatalogEntry { name: "mono_0pm1", params: &[], description: "{0,1,-1} under multiplication" },
    CatalogEntry { name: "chain_mset", params: &["n"], description: "M-set {0,...,n} over {0,1}" },
    CatalogEntry { name: "full_transformation", params: &["n"], description: "full transformation monoid T_n, n <= 4" },
    CatalogEntry { name: "symmetric_group", params: &["n"], description: "symmetric group Sym(n), n <= 5" },
    CatalogEntry { name: "matrix_monoid", params: &["n", "q"], description: "all n x n matrices over GF(q), n <= 2, q in {2,3}" },
    CatalogEntry { name: "five_element_nonsubring", params: &[], description: "{a,b,e,f,1}, all idempotent" },
    CatalogEntry { name: "appendix_counterexample", params: &[], description: "13 signed 3 x 3 matrices" },
];

/// A built catalog object with its canonical name.
#[derive(Clone, Debug)]
pub struct CatalogItem {
    pub name: String,
    pub object: Catalogued,
    pub facts: ExpectedFacts,
}

/// Parses names like `full_transformation 2`, `full_transformation:2` or
/// `matrix_monoid 2 3`.
pub fn parse_name(spec: &str) -> Result<(&'static CatalogEntry, Vec<usize>)> {
    let mut parts = spec.split(|c: char| c == ':' || c == ',' || c.is_whitespace()).filter(|s| !s.is_empty());
    let unknown = || Error::UnknownCatalogEntry(spec.to_string());
    let head = parts.next().ok_or_else(unknown)?;
    let entry = ENTRIES.iter().find(|e| e.name == head).ok_or_else(unknown)?;
    let args: Vec<usize> = parts.map(|p| p.parse::<usize>().map_err(|_| unknown())).collect::<Result<_>>()?;
    if args.len() != entry.params.len() {
        return Err(unknown());
    }
    Ok((entry, args))
}

pub fn build(spec: &str) -> Result<CatalogItem> {
    let (entry, args) = parse_name(spec)?;
    let mut name = String::from(entry.name);
    for a in &args {
        name.push_str(&format!(" {a}"));
    }
    let facts = |size, rank, distinguishable| ExpectedFacts { size, rank, distinguishable };
    let (object, facts) = match (entry.name, args.as_slice()) {
        ("mono_01", []) => (Catalogued::Monoid(mono_01()), facts(Some(2), Some(2), Some(true))),
        ("mono_0pm1", []) => (Catalogued::Monoid(mono_0pm1()), facts(Some(3), Some(3), Some(true))),
        ("chain_mset", &[n]) => (Catalogued::MSet(chain_mset(n)), facts(Some(2), Some(2), Some(true))),
        ("full_transformation", &[n]) => {
            let rank = match n {
                1 => Some(1),
                2 => Some(4),
                3 => Some(8),
                _ => None,
            };
            (Catalogued::Monoid(full_transformation(n)?), facts(Some(n.pow(n as u32)), rank, Some(n == 1)))
        }
        ("symmetric_group", &[n]) => {
            let rank = [1, 2, 4, 11].get(n.wrapping_sub(1)).copied();
            let size = (1..=n).product();
            (Catalogued::Monoid(symmetric_group(n)?), facts(Some(size), rank, Some(true)))
        }
        ("matrix_monoid", &[n, q]) => {
            let m = matrix_monoid(n, q as u32)?;
            let rank = match (n, q) {
                (1, 2) => Some(2),
                (1, 3) => Some(3),
                (2, 2) => Some(6),
                _ => None,
            };
            let size = m.size();
            (Catalogued::Monoid(m), facts(Some(size), rank, Some(true)))
        }
        ("five_element_nonsubring", []) => {
            (Catalogued::Monoid(five_element_nonsubring()), facts(Some(5), Some(5), Some(false)))
        }
        ("appendix_counterexample", []) => {
            (Catalogued::Monoid(appendix_counterexample()), facts(Some(13), None, Some(false)))
        }
        _ => return Err(Error::UnknownCatalogEntry(spec.to_string())),
    };
    Ok(CatalogItem { name, object, facts })
}

/// The monoids used as a regression corpus, small enough for exhaustive checks.
pub fn corpus() -> Vec<(String, FiniteMonoid)> {
    [
        "mono_01",
        "mono_0pm1",
        "full_transformation 1",
        "full_transformation 2",
        "full_transformation 3",
        "symmetric_group 3",
        "matrix_monoid 1 2",
        "matrix_monoid 1 3",
        "matrix_monoid 2 2",
        "five_element_nonsubring",
        "appendix_counterexample",
    ]
    .iter()
    .map(|s| {
        let item = build(s).expect("corpus entry builds");
        (item.name, item.object.monoid())
    })
    .collect()
}
