//! Girths and short cycles of pancake graphs, the Cayley graphs of the
//! symmetric group generated by prefix-reversals.
//!
//! * [`perm`]: permutations and the prefix-reversal action.
//! * [`genset`]: the full pancake set and the six cubic sets `BS1`..`BS6`.
//! * [`walk`]: lazy BFS over the Cayley graph and exact girth search.
//! * [`census`]: cycle forms, the canonical-form catalogue, cycle counts.
//! * [`oracle`]: slow brute-force references on materialized graphs.

pub mod census;
pub mod error;
pub mod exec;
pub mod genset;
pub mod oracle;
pub mod perm;
pub mod walk;

pub use census::{
    canonicalize, census, census_with, expected_count, family_instances, is_relator,
    is_simple_cycle, CensusBudget, CensusReport, CountFormula, CycleForm, Family, FamilyInstance,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use genset::{
    bs_set, custom_set, full_pancake, generates_whole_group, BsKind, GeneratorSet, SetSpec,
};
pub use perm::{parity_of_reversal, Parity, Permutation, ReversalIndex};
pub use walk::{bfs_layers, girth, girth_many, neighbors, GirthReport, SearchLimits};
