//! Monoids generated by transformations or matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::monoid::FiniteMonoid;

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Breadth-first closure of `gens` together with `identity` under right multiplication.
///
/// Returns the elements in discovery order (identity first) and the positions of the
/// generators among them.
fn closure<K, F>(identity: K, gens: &[K], mul: F, cap: usize) -> Result<(Vec<K>, Vec<usize>)>
where
    K: Ord + Clone,
    F: Fn(&K, &K) -> K,
{
    let mut elements = Vec::new();
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    let mut insert = |k: K, elements: &mut Vec<K>| -> Result<usize> {
        if let Some(&i) = index.get(&k) {
            return Ok(i);
        }
        if elements.len() >= cap {
            return Err(Error::SizeLimitExceeded { cap });
        }
        index.insert(k.clone(), elements.len());
        elements.push(k);
        Ok(elements.len() - 1)
    };
    insert(identity, &mut elements)?;
    let mut gen_ids = Vec::with_capacity(gens.len());
    for g in gens {
        gen_ids.push(insert(g.clone(), &mut elements)?);
    }
    let mut next = 0;
    while next < elements.len() {
        for g in gens {
            let prod = mul(&elements[next], g);
            insert(prod, &mut elements)?;
        }
        next += 1;
    }
    gen_ids.sort_unstable();
    gen_ids.dedup();
    Ok((elements, gen_ids))
}

fn table_of<K, F>(elements: &[K], mul: F) -> Vec<usize>
where
    K: Ord + Clone,
    F: Fn(&K, &K) -> K,
{
    let index: BTreeMap<&K, usize> = elements.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut table = Vec::with_capacity(elements.len() * elements.len());
    for a in elements {
        for b in elements {
            table.push(index[&mul(a, b)]);
        }
    }
    table
}

/// The submonoid of `T_n` generated by the given maps.
///
/// Maps are written as 1-based image lists: `[2, 1, 3]` swaps 1 and 2. Points are acted on
/// from the right, so the product `fg` applies `f` first and then `g`. Element labels record
/// the image lists.
pub fn generate_from_transformations(
    degree: usize,
    gens: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteMonoid> {
    let mut maps = Vec::with_capacity(gens.len());
    for (gi, g) in gens.iter().enumerate() {
        if g.len() != degree {
            return Err(Error::MalformedTable(format!(
                "generator {gi} has {} images for degree {degree}",
                g.len()
            )));
        }
        let mut zero_based = Vec::with_capacity(degree);
        for (point, &image) in g.iter().enumerate() {
            if image == 0 || image > degree {
                return Err(Error::OutOfRange { generator: gi, point: point + 1, image, degree });
            }
            zero_based.push(image - 1);
        }
        maps.push(zero_based);
    }
    let compose = |f: &Vec<usize>, g: &Vec<usize>| f.iter().map(|&x| g[x]).collect::<Vec<usize>>();
    let identity: Vec<usize> = (0..degree).collect();
    let (elements, gen_ids) = closure(identity, &maps, compose, cap)?;
    let table = table_of(&elements, compose);
    let labels = elements.iter().map(|f| transformation_label(f)).collect();
    Ok(FiniteMonoid::from_flat(elements.len(), table, Some(labels))?.with_generators(gen_ids))
}

pub fn transformation_label(zero_based: &[usize]) -> String {
    let parts: Vec<String> = zero_based.iter().map(|x| format!("{}", x + 1)).collect();
    format!("[{}]", parts.join(","))
}

/// Coefficient ring for matrix monoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixRing {
    Finite(FiniteField),
    /// Plain integer arithmetic; the closure must stay finite on its own.
    Integers,
}

impl MatrixRing {
    pub fn finite(q: u32) -> Result<Self> {
        Ok(MatrixRing::Finite(FiniteField::new(q)?))
    }
}

type Matrix = Vec<i64>;

fn matrix_mul(ring: &MatrixRing, dim: usize, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = alloc::vec![0i64; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            out[i * dim + j] = match ring {
                MatrixRing::Integers => (0..dim).map(|k| a[i * dim + k] * b[k * dim + j]).sum(),
                MatrixRing::Finite(f) => (0..dim).fold(0u32, |acc, k| {
                    f.add(acc, f.mul(a[i * dim + k] as u32, b[k * dim + j] as u32))
                }) as i64,
            };
        }
    }
    out
}

pub fn matrix_label(dim: usize, m: &[i64]) -> String {
    let rows: Vec<String> = m
        .chunks(dim.max(1))
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("{x}")).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// The matrix monoid generated by `gens` (each `dim × dim`, row-major rows) and the identity.
pub fn generate_from_matrices(
    ring: &MatrixRing,
    dim: usize,
    gens: &[Vec<Vec<i64>>],
    cap: usize,
) -> Result<FiniteMonoid> {
    let mut mats = Vec::with_capacity(gens.len());
    for (gi, g) in gens.iter().enumerate() {
        if g.len() != dim || g.iter().any(|row| row.len() != dim) {
            return Err(Error::MalformedTable(format!("generator {gi} is not {dim}x{dim}")));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for &x in g.iter().flatten() {
            flat.push(match ring {
                MatrixRing::Integers => x,
                MatrixRing::Finite(f) => f.element(x)? as i64,
            });
        }
        mats.push(flat);
    }
    let mut identity = alloc::vec![0i64; dim * dim];
    for i in 0..dim {
        identity[i * dim + i] = 1;
    }
    let mul = |a: &Matrix, b: &Matrix| matrix_mul(ring, dim, a, b);
    let (elements, gen_ids) = closure(identity, &mats, mul, cap)?;
    let table = table_of(&elements, mul);
    let labels = elements.iter().map(|m| matrix_label(dim, m)).collect();
    Ok(FiniteMonoid::from_flat(elements.len(), table, Some(labels))?.with_generators(gen_ids))
}

/// Every `dim × dim` matrix over GF(q), as a generator list.
pub fn all_matrices(q: u32, dim: usize) -> Vec<Vec<Vec<i64>>> {
    let cells = dim * dim;
    let total = (q as usize).pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = Vec::with_capacity(cells);
            for _ in 0..cells {
                flat.push((code % q as usize) as i64);
                code /= q as usize;
            }
            flat.reverse();
            flat.chunks(dim).map(|r| r.to_vec()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn all_self_maps_of_two_points() {
        let gens = vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]];
        let m = generate_from_transformations(2, &gens, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.label(m.identity()), "[1,2]");
    }

    #[test]
    fn constant_map_generates_two_elements() {
        let m = generate_from_transformations(2, &[vec![1, 1]], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn three_generators_give_all_of_t3() {
        let gens = vec![vec![2, 1, 3], vec![2, 3, 1], vec![1, 2, 2]];
        let m = generate_from_transformations(3, &gens, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 27);
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let gens = vec![vec![2, 1, 3], vec![1, 1, 3]];
        let m = generate_from_transformations(3, &gens, DEFAULT_ELEMENT_CAP).unwrap();
        let swap = m.find_label("[2,1,3]").unwrap();
        let collapse = m.find_label("[1,1,3]").unwrap();
        // swap then collapse: 1 -> 2 -> 1, 2 -> 1 -> 1
        assert_eq!(m.label(m.mul(swap, collapse)), "[1,1,3]");
        // collapse then swap: 1 -> 1 -> 2
        assert_eq!(m.label(m.mul(collapse, swap)), "[2,2,3]");
    }

    #[test]
    fn out_of_range_and_cap() {
        assert!(matches!(
            generate_from_transformations(2, &[vec![1, 3]], DEFAULT_ELEMENT_CAP),
            Err(Error::OutOfRange { image: 3, .. })
        ));
        let gens = vec![vec![2, 1, 3], vec![2, 3, 1], vec![1, 2, 2]];
        assert_eq!(
            generate_from_transformations(3, &gens, 10),
            Err(Error::SizeLimitExceeded { cap: 10 })
        );
    }

    #[test]
    fn all_two_by_two_over_gf2() {
        let ring = MatrixRing::finite(2).unwrap();
        let m = generate_from_matrices(&ring, 2, &all_matrices(2, 2), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 16);
        assert_eq!(m.label(m.identity()), "[[1,0],[0,1]]");
    }

    #[test]
    fn one_by_one_identity_is_trivial() {
        let ring = MatrixRing::finite(2).unwrap();
        let m = generate_from_matrices(&ring, 1, &[vec![vec![1]]], DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn gf4_matrices() {
        let ring = MatrixRing::finite(4).unwrap();
        let m = generate_from_matrices(&ring, 1, &all_matrices(4, 1), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(m.size(), 4);
        assert!(matches!(MatrixRing::finite(6), Err(Error::NonPrimePowerField(6))));
    }
}
