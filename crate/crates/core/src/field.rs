//! Table-driven arithmetic in the finite fields of order at most 9.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// GF(q) for q in {2, 3, 4, 5, 7, 8, 9}.
///
/// Elements are encoded as `0..q`. For prime powers `p^k` the code is the base-`p` digit
/// string of the polynomial coefficients, reduced modulo a fixed irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    order: u32,
    characteristic: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FiniteField {
    pub fn new(order: u32) -> Result<Self> {
        // (p, k, low coefficients of the monic irreducible x^k + ...)
        let (p, k, modulus): (u32, u32, &[u32]) = match order {
            2 | 3 | 5 | 7 => (order, 1, &[]),
            4 => (2, 2, &[1, 1]),    // x^2 + x + 1
            8 => (2, 3, &[1, 1, 0]), // x^3 + x + 1
            9 => (3, 2, &[1, 0]),    // x^2 + 1
            _ => return Err(Error::NonPrimePowerField(order)),
        };
        let q = order as usize;
        let digits = |mut x: u32| -> Vec<u32> {
            let mut d = vec![0; k as usize];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..order {
            for b in 0..order {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * order + b) as usize] = encode(&sum) as u8;
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k = -(modulus) reduces the high coefficients
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &mc) in modulus.iter().enumerate() {
                        let at = deg - k as usize + i;
                        prod[at] = (prod[at] + c * (p - mc % p)) % p;
                    }
                }
                mul[(a * order + b) as usize] = encode(&prod[..k as usize]) as u8;
            }
        }
        Ok(FiniteField { order, characteristic: p, add, mul })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_prime(&self) -> bool {
        self.order == self.characteristic
    }

    /// Maps an integer entry into the field: reduction mod q for prime q, otherwise the entry
    /// must already be an element code.
    pub fn element(&self, x: i64) -> Result<u32> {
        if self.is_prime() {
            Ok(x.rem_euclid(self.order as i64) as u32)
        } else if (0..self.order as i64).contains(&x) {
            Ok(x as u32)
        } else {
            Err(Error::MalformedTable(alloc::format!(
                "{x} is not an element code of GF({})",
                self.order
            )))
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.order + b) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.order + b) as usize] as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert!((0..q).any(|b| f.add(a, b) == 0));
            if a != 0 {
                assert!((0..q).any(|b| f.mul(a, b) == 1), "{a} has no inverse in GF({q})");
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn all_supported_orders_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            check_field_axioms(&FiniteField::new(q).unwrap());
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 16] {
            assert_eq!(FiniteField::new(q), Err(Error::NonPrimePowerField(q)));
        }
    }

    #[test]
    fn prime_entries_reduce() {
        let f = FiniteField::new(3).unwrap();
        assert_eq!(f.element(-1).unwrap(), 2);
        assert_eq!(f.element(7).unwrap(), 1);
    }
}
