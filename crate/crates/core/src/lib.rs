//! Strong Burnside rings of finite monoids.
//!
//! Monoids act on finite sets by partial functions. Every such action splits, up to the
//! relations `[X] = [A] + [X/A]` for invariant `A`, into strong orbits, and every strong orbit
//! is a quotient of the right-regular action on an R-class `R_e` of an idempotent. This crate
//! builds that basis for a concrete finite monoid, multiplies in the resulting ring, computes
//! the table of marks, and compares the ring with the Burnside rings of the maximal subgroups.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command-line front end
//! live in the `burnside-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod burnside;
pub mod catalog;
pub mod congruence;
mod error;
pub mod field;
pub mod generate;
pub mod green;
pub mod group;
pub mod iso;
pub mod marks;
pub mod monoid;
pub mod mset;
pub mod orbits;
pub mod partition;
pub mod random;
pub mod structure;

pub use crate::burnside::{compute_basis, BurnsideElement, MultiplicationTable, OrbitBasis, OrbitClass};
pub use crate::congruence::RightCongruence;
pub use crate::error::{Error, Result, Violation};
pub use crate::green::GreenData;
pub use crate::group::MaximalSubgroup;
pub use crate::marks::{Certificate, MarksTable};
pub use crate::monoid::FiniteMonoid;
pub use crate::mset::{PartialMSet, PointMap};
pub use crate::orbits::{AutGroup, CanonicalForm, StrongOrbit};
pub use crate::partition::Partition;

/// Resource limits shared by the expensive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements a closure may produce.
    pub element_cap: usize,
    /// Maximum `|R_e|` for which right congruences are enumerated exhaustively.
    pub congruence_cap: usize,
    /// Maximum `|X|^|O|` for which lax morphisms are enumerated by brute force.
    pub lax_oracle_gate: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: generate::DEFAULT_ELEMENT_CAP,
            congruence_cap: congruence::DEFAULT_CONGRUENCE_CAP,
            lax_oracle_gate: marks::DEFAULT_LAX_ORACLE_GATE,
        }
    }
}
