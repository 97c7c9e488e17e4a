use thiserror::Error;

use crate::genset::BsKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree n={n} is outside the supported range 2..={max}")]
    DegreeOutOfRange { n: usize, max: usize },

    #[error("r{0} is not a prefix-reversal (indices start at 2)")]
    InvalidIndex(usize),

    #[error("r{index} does not act on permutations of degree {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cannot parse permutation: {0}")]
    Parse(String),

    #[error("duplicate generator r{0}")]
    DuplicateIndex(usize),

    #[error("generator set is empty")]
    EmptySet,

    #[error("{kind} is defined only when {rule} (got n={n})")]
    Parity {
        kind: BsKind,
        n: usize,
        rule: &'static str,
    },

    #[error("{kind} requires n >= {min} (got n={n})")]
    BelowMinimum { kind: BsKind, n: usize, min: usize },

    #[error("{kind} collapses to fewer than three generators at n={n}")]
    Degenerate { kind: BsKind, n: usize },

    #[error("n={n} exceeds the cap of {cap} for this operation")]
    TooLarge { n: usize, cap: usize },

    #[error("a single generator spans a perfect matching; the graph has no cycles")]
    SingleGenerator,

    #[error("no cycle closed within depth cap {depth}")]
    Inconclusive { depth: u32 },

    #[error("vertex budget of {limit} exceeded")]
    VertexBudget { limit: usize },

    #[error("census budget of {limit} walk extensions exceeded ({partial} cycles counted so far, unusable)")]
    CensusBudget { limit: u64, partial: u64 },

    #[error("form {0} is not a simple relator")]
    NotSimpleRelator(String),

    #[error("cycle length {0} is below the minimum of 3")]
    LengthTooShort(usize),

    #[error("formula is stated for n >= {min} (got n={n})")]
    BelowFormulaDomain { n: usize, min: usize },

    #[error("graph has no cycles")]
    NoCycle,

    #[error("unknown name {0:?}")]
    UnknownName(String),
}

impl Error {
    /// Resource exhaustion rather than a malformed request.
    pub fn is_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::Inconclusive { .. } | Error::VertexBudget { .. } | Error::CensusBudget { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
