//! Published values the computed results are compared against.

use cubic_pancake::{expected_count, BsKind, CountFormula, SetSpec};

/// Girths of `P_n^1`..`P_n^5` from the closed forms; `None` outside their range.
pub fn theorem_one_girth(kind: BsKind, n: usize) -> Option<usize> {
    if !kind.admits(n) {
        return None;
    }
    match kind {
        BsKind::Bs1 | BsKind::Bs2 | BsKind::Bs3 => Some(if n == 4 { 6 } else { 8 }),
        BsKind::Bs4 => Some(8),
        BsKind::Bs5 => Some(if n == 5 { 8 } else { 12 }),
        BsKind::Bs6 => None,
    }
}

const BS6_TABLE: [usize; 15] = [6, 8, 10, 12, 12, 16, 16, 16, 20, 20, 20, 24, 24, 24, 28];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bs6Claim {
    /// Computed value printed for 5 <= n <= 19.
    Table(usize),
    /// Reported computationally for 19 <= n <= 33.
    Reported(usize),
    /// Conjectured for every larger n.
    Conjectured(usize),
}

impl Bs6Claim {
    pub fn value(self) -> usize {
        match self {
            Bs6Claim::Table(v) | Bs6Claim::Reported(v) | Bs6Claim::Conjectured(v) => v,
        }
    }

    pub fn source(self) -> &'static str {
        match self {
            Bs6Claim::Table(_) => "table",
            Bs6Claim::Reported(_) => "reported",
            Bs6Claim::Conjectured(_) => "conjectured",
        }
    }
}

pub fn bs6_girth(n: usize) -> Option<Bs6Claim> {
    match n {
        5..=19 => Some(Bs6Claim::Table(BS6_TABLE[n - 5])),
        20..=33 => Some(Bs6Claim::Reported(28)),
        34.. => Some(Bs6Claim::Conjectured(28)),
        _ => None,
    }
}

/// Published per-vertex count of `length`-cycles, if one exists.
pub fn census_count(set: &SetSpec, n: usize, length: usize) -> Option<u64> {
    match set {
        SetSpec::FullPancake if n >= 3 && (3..=5).contains(&length) => Some(0),
        SetSpec::FullPancake => {
            CountFormula::for_length(length).and_then(|f| expected_count(f, n).ok())
        }
        // Below the girth there are no cycles at all.
        SetSpec::Bs(kind) => {
            theorem_one_girth(*kind, n).and_then(|g| (length >= 3 && length < g).then_some(0))
        }
        SetSpec::Custom(_) => None,
    }
}
