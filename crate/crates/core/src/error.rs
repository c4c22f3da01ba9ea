use alloc::string::String;
use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("multiplication is not associative: ({a}{b}){c} != {a}({b}{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("generator {generator} sends point {point} to {image}, outside 1..={degree}")]
    OutOfRange { generator: usize, point: usize, image: usize, degree: usize },
    #[error("{name} = {value} is outside the supported range")]
    ParameterOutOfRange { name: &'static str, value: usize },
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("closure exceeded the element cap of {cap}")]
    SizeLimitExceeded { cap: usize },
    #[error("{0} is not a supported field order (prime powers up to 9)")]
    NonPrimePowerField(u32),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("M-sets are over different monoids")]
    MonoidMismatch,
    #[error("action violates an axiom: {0}")]
    InvalidAction(Violation),
    #[error("subset is not a subquotient: {s}*{m} leaves it but {s}*{m}{n} returns")]
    NotSubquotient { s: usize, m: usize, n: usize },
    #[error("partition is not a congruence: points {x} and {y} disagree under {m}")]
    NotCongruence { x: usize, y: usize, m: usize },
    #[error("R-class has {size} elements, above the congruence cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("set is not a subgroup of the maximal subgroup")]
    NotASubgroup,
    #[error("congruence is not contained in the H relation")]
    NotContainedInH,
    #[error("group set is not total")]
    NotTotal,
    #[error("strong orbit matches no basis class")]
    UnmatchedOrbit,
    #[error("elements belong to different bases")]
    BasisMismatch,
    #[error("marks table has a nonzero entry below the diagonal at ({row}, {col})")]
    TriangularityViolation { row: usize, col: usize },
    #[error("apex check failed: {0}")]
    ApexAssertionFailure(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that can only come from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::UnmatchedOrbit
                | Error::TriangularityViolation { .. }
                | Error::ApexAssertionFailure(_)
                | Error::Internal(_)
        )
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::SizeLimitExceeded { .. })
    }
}

/// First axiom violation found by [`crate::PartialMSet::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("table shape does not match the monoid")]
    Shape,
    #[error("closure: {x}*{m} = {image} is not a point")]
    Closure { x: usize, m: usize, image: usize },
    #[error("identity: {x}*1 is not {x}")]
    Identity { x: usize },
    #[error("associativity: ({x}*{m})*{n} and {x}*{m}{n} differ")]
    Associativity { x: usize, m: usize, n: usize },
}
