//! Lax morphism counts, the table of marks, and the semisimplicity certificate.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::burnside::{BurnsideElement, OrbitBasis};
use crate::error::{Error, Result};
use crate::mset::{PartialMSet, PointMap};

pub const DEFAULT_LAX_ORACLE_GATE: u64 = 1_000_000;

/// Number of random sums checked for multiplicativity on top of all basis pairs.
pub const RANDOM_MULTIPLICATIVITY_SAMPLES: usize = 20;

const UNSET: usize = usize::MAX;

/// `|Lax(O, X)|` for a strong orbit `O`.
///
/// A lax morphism out of a strong orbit is fixed by the image `x` of one point `α`, because
/// every point is `αm` for some `m`. The image is admissible iff `xm` is defined whenever
/// `αm` is, and `αm = αn` forces `xm = xn`.
pub fn lax_count(o: &PartialMSet, x: &PartialMSet) -> u64 {
    if o.is_empty() {
        return 1;
    }
    let n = o.monoid().size();
    let alpha = 0;
    let defined: Vec<(usize, usize)> = (0..n).filter_map(|m| o.act(alpha, m).map(|p| (m, p))).collect();
    let mut image = vec![UNSET; o.len()];
    let mut count = 0;
    'candidates: for cand in 0..x.len() {
        image.iter_mut().for_each(|v| *v = UNSET);
        for &(m, p) in &defined {
            match x.act(cand, m) {
                None => continue 'candidates,
                Some(y) if image[p] == UNSET => image[p] = y,
                Some(y) if image[p] != y => continue 'candidates,
                Some(_) => {}
            }
        }
        count += 1;
    }
    count
}

/// The lax morphisms `O → X`, listed through their point maps, by the same one-point
/// argument as [`lax_count`].
pub fn lax_morphisms(o: &PartialMSet, x: &PartialMSet) -> Vec<PointMap> {
    let n = o.monoid().size();
    let mut out = Vec::new();
    if o.is_empty() {
        out.push(PointMap(Vec::new()));
        return out;
    }
    'candidates: for cand in 0..x.len() {
        let mut image = vec![UNSET; o.len()];
        for m in 0..n {
            if let Some(p) = o.act(0, m) {
                match x.act(cand, m) {
                    None => continue 'candidates,
                    Some(y) if image[p] == UNSET => image[p] = y,
                    Some(y) if image[p] != y => continue 'candidates,
                    Some(_) => {}
                }
            }
        }
        if image.contains(&UNSET) {
            continue;
        }
        out.push(PointMap(image));
    }
    out
}

/// `|Lax(O, X)|` by checking every map of points, if `|X|^|O|` is within `gate`.
pub fn lax_count_oracle(o: &PartialMSet, x: &PartialMSet, gate: u64) -> Option<u64> {
    let (k, t) = (o.len(), x.len());
    let total = (t as u64).checked_pow(k as u32)?;
    if total > gate {
        return None;
    }
    if k == 0 {
        return Some(1);
    }
    if t == 0 {
        return Some(0);
    }
    let mut map = vec![0usize; k];
    let mut count = 0;
    loop {
        let f = PointMap(map.clone());
        if f.is_lax_morphism(o, x) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == k {
                return Some(count);
            }
            map[i] += 1;
            if map[i] < t {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// `matrix[i][j] = |Lax(O_i, O_j)|` over the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksTable {
    pub matrix: Vec<Vec<u64>>,
}

impl MarksTable {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.rank()).map(|i| self.matrix[i][i]).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.below_diagonal().is_none()
    }

    fn below_diagonal(&self) -> Option<(usize, usize)> {
        let n = self.rank();
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).find(|&(i, j)| self.matrix[i][j] != 0)
    }
}

pub fn marks_table(basis: &OrbitBasis) -> Result<MarksTable> {
    let classes = basis.classes();
    let matrix: Vec<Vec<u64>> = classes
        .iter()
        .map(|oi| classes.iter().map(|oj| lax_count(&oi.representative, &oj.representative)).collect())
        .collect();
    let table = MarksTable { matrix };
    if let Some((row, col)) = table.below_diagonal() {
        return Err(Error::TriangularityViolation { row, col });
    }
    for (i, c) in classes.iter().enumerate() {
        if table.matrix[i][i] != c.aut_order as u64 || table.matrix[i][i] == 0 {
            return Err(Error::Internal(alloc::format!(
                "diagonal entry {i} is {} but |Aut| is {}",
                table.matrix[i][i],
                c.aut_order
            )));
        }
    }
    Ok(table)
}

/// `φ([X]) = (O : |Lax(O, X)|)`.
pub fn marks_vector(basis: &OrbitBasis, x: &PartialMSet) -> Vec<u64> {
    basis.classes().iter().map(|c| lax_count(&c.representative, x)).collect()
}

/// `φ` on a ring element, through the marks table.
pub fn marks_of_element(table: &MarksTable, a: &BurnsideElement) -> Vec<i64> {
    let n = table.rank();
    (0..n).map(|i| (0..n).map(|j| table.matrix[i][j] as i64 * a.coeffs[j]).sum()).collect()
}

/// Determinant of a nonnegative matrix, see [`determinant`].
pub fn bareiss_determinant(matrix: &[Vec<u64>]) -> Result<i128> {
    determinant(matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect())
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<i128>>) -> Result<i128> {
    let n = a.len();
    let overflow = || Error::Internal("determinant overflow".into());
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

/// Evidence that the rational Burnside algebra is semisimple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub determinant: i128,
    /// Index of `φ(ℬ)` in `∏ ℤ`, the product of `|Aut(O)|`.
    pub index: i128,
    pub semisimple: bool,
    /// Basis pairs checked for `|Lax(O, X∧Y)| = |Lax(O, X)|·|Lax(O, Y)|`.
    pub pairs_checked: usize,
    /// Random sums checked the same way.
    pub samples_checked: usize,
}

/// A random sum of basis representatives with small coefficients.
fn random_sum(basis: &OrbitBasis, rng: &mut ChaCha8Rng) -> Result<PartialMSet> {
    let mut x = PartialMSet::empty(basis.monoid().clone());
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let i = rng.gen_range(0..basis.rank());
        x = x.sum(&basis.class(i).representative)?;
    }
    Ok(x)
}

/// Determinant, index and multiplicativity checks for `φ`.
pub fn semisimplicity_certificate(basis: &OrbitBasis, table: &MarksTable, seed: u64) -> Result<Certificate> {
    let determinant = bareiss_determinant(&table.matrix)?;
    let mut index = 1i128;
    for d in table.diagonal() {
        index = index.checked_mul(d as i128).ok_or_else(|| Error::Internal("index overflow".into()))?;
    }
    if determinant != index {
        return Err(Error::Internal(alloc::format!("determinant {determinant} differs from diagonal product {index}")));
    }
    let classes = basis.classes();
    let check = |x: &PartialMSet, y: &PartialMSet| -> Result<()> {
        let xy = x.product(y)?;
        for c in classes {
            let o = &c.representative;
            if lax_count(o, &xy) != lax_count(o, x) * lax_count(o, y) {
                return Err(Error::Internal("φ is not multiplicative".into()));
            }
        }
        Ok(())
    };
    let mut pairs_checked = 0;
    for i in 0..classes.len() {
        for j in i..classes.len() {
            check(&classes[i].representative, &classes[j].representative)?;
            pairs_checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_MULTIPLICATIVITY_SAMPLES {
        let x = random_sum(basis, &mut rng)?;
        let y = random_sum(basis, &mut rng)?;
        check(&x, &y)?;
    }
    Ok(Certificate {
        determinant,
        index,
        semisimple: determinant != 0,
        pairs_checked,
        samples_checked: RANDOM_MULTIPLICATIVITY_SAMPLES,
    })
}
