//! Prefix-reversal generating sets: the full pancake set and the six cubic sets.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_degree, Permutation, ReversalIndex};

/// Largest degree for which the orbit check enumerates the whole group.
pub const ORBIT_CHECK_MAX_DEGREE: usize = 9;

/// The six cubic generating sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BsKind {
    Bs1,
    Bs2,
    Bs3,
    Bs4,
    Bs5,
    Bs6,
}

impl BsKind {
    pub const ALL: [BsKind; 6] = [
        BsKind::Bs1,
        BsKind::Bs2,
        BsKind::Bs3,
        BsKind::Bs4,
        BsKind::Bs5,
        BsKind::Bs6,
    ];

    pub fn min_degree(self) -> usize {
        match self {
            BsKind::Bs1 | BsKind::Bs2 | BsKind::Bs3 => 4,
            BsKind::Bs4 | BsKind::Bs5 | BsKind::Bs6 => 5,
        }
    }

    /// Required parity of `n`, if any: `Some(true)` for even.
    pub fn required_parity(self) -> Option<bool> {
        match self {
            BsKind::Bs3 => Some(true),
            BsKind::Bs4 | BsKind::Bs5 => Some(false),
            _ => None,
        }
    }

    /// True when `bs_set(self, n)` succeeds.
    pub fn admits(self, n: usize) -> bool {
        bs_set(self, n).is_ok()
    }

    fn raw_indices(self, n: usize) -> [usize; 3] {
        match self {
            BsKind::Bs1 => [2, n - 1, n],
            BsKind::Bs2 => [n - 2, n - 1, n],
            BsKind::Bs3 => [3, n - 2, n],
            BsKind::Bs4 => [3, n - 1, n],
            BsKind::Bs5 => [n - 3, n - 1, n],
            BsKind::Bs6 => [n - 3, n - 2, n],
        }
    }

    pub fn number(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for BsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS{}", self.number())
    }
}

impl FromStr for BsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bs1" => Ok(BsKind::Bs1),
            "bs2" => Ok(BsKind::Bs2),
            "bs3" => Ok(BsKind::Bs3),
            "bs4" => Ok(BsKind::Bs4),
            "bs5" => Ok(BsKind::Bs5),
            "bs6" => Ok(BsKind::Bs6),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    FullPancake,
    Bs(BsKind),
    Custom,
}

/// A degree-independent description of a set, as spelled on the command line
/// and in JSON: `pr`, `bs1`..`bs6`, or `custom:2,4,5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SetSpec {
    FullPancake,
    Bs(BsKind),
    Custom(Vec<usize>),
}

impl SetSpec {
    pub fn build(&self, n: usize) -> Result<GeneratorSet> {
        match self {
            SetSpec::FullPancake => full_pancake(n),
            SetSpec::Bs(kind) => bs_set(*kind, n),
            SetSpec::Custom(indices) => custom_set(n, indices),
        }
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSpec::FullPancake => f.write_str("pr"),
            SetSpec::Bs(kind) => write!(f, "bs{}", kind.number()),
            SetSpec::Custom(indices) => {
                f.write_str("custom:")?;
                for (k, i) in indices.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{i}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for SetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "pr" {
            return Ok(SetSpec::FullPancake);
        }
        if let Some(list) = lower.strip_prefix("custom:") {
            return parse_index_list(list).map(SetSpec::Custom);
        }
        lower.parse().map(SetSpec::Bs)
    }
}

impl TryFrom<String> for SetSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SetSpec> for String {
    fn from(s: SetSpec) -> String {
        s.to_string()
    }
}

/// Parses `4,6,7` into indices.
pub fn parse_index_list(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches(['r', 'R'])
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not an index: {t:?}")))
        })
        .collect()
}

/// A validated set of prefix-reversals acting on `Sym_n`, sorted by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    indices: Vec<ReversalIndex>,
    origin: Origin,
}

impl GeneratorSet {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[ReversalIndex] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn spec(&self) -> SetSpec {
        match self.origin {
            Origin::FullPancake => SetSpec::FullPancake,
            Origin::Bs(kind) => SetSpec::Bs(kind),
            Origin::Custom => SetSpec::Custom(self.indices.iter().map(|r| r.get()).collect()),
        }
    }

    pub fn contains(&self, r: ReversalIndex) -> bool {
        self.indices.binary_search(&r).is_ok()
    }

    /// Same indices in a different listing order; for order-invariance checks.
    pub fn with_order(&self, order: &[usize]) -> Result<GeneratorSet> {
        custom_set(self.n, order).map(|mut gs| {
            gs.origin = self.origin;
            gs
        })
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, r) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

pub fn full_pancake(n: usize) -> Result<GeneratorSet> {
    check_degree(n)?;
    let indices = (2..=n)
        .map(ReversalIndex::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        n,
        indices,
        origin: Origin::FullPancake,
    })
}

pub fn bs_set(kind: BsKind, n: usize) -> Result<GeneratorSet> {
    check_degree(n)?;
    if n < kind.min_degree() {
        return Err(Error::BelowMinimum {
            kind,
            n,
            min: kind.min_degree(),
        });
    }
    match kind.required_parity() {
        Some(true) if !n.is_multiple_of(2) => {
            return Err(Error::Parity {
                kind,
                n,
                rule: "n is even",
            })
        }
        Some(false) if n.is_multiple_of(2) => {
            return Err(Error::Parity {
                kind,
                n,
                rule: "n is odd",
            })
        }
        _ => {}
    }
    let mut raw = kind.raw_indices(n).to_vec();
    raw.sort_unstable();
    raw.dedup();
    if raw.len() != 3 {
        return Err(Error::Degenerate { kind, n });
    }
    let indices = raw
        .into_iter()
        .map(ReversalIndex::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        n,
        indices,
        origin: Origin::Bs(kind),
    })
}

pub fn custom_set(n: usize, indices: &[usize]) -> Result<GeneratorSet> {
    check_degree(n)?;
    if indices.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut sorted = Vec::with_capacity(indices.len());
    for &i in indices {
        let r = ReversalIndex::new(i)?;
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        sorted.push(r);
    }
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateIndex(w[0].get()));
    }
    Ok(GeneratorSet {
        n,
        indices: sorted,
        origin: Origin::Custom,
    })
}

/// Size of the orbit of the identity, by BFS over the whole component.
pub fn orbit_size(gs: &GeneratorSet) -> Result<usize> {
    if gs.degree() > ORBIT_CHECK_MAX_DEGREE {
        return Err(Error::TooLarge {
            n: gs.degree(),
            cap: ORBIT_CHECK_MAX_DEGREE,
        });
    }
    let id = Permutation::identity(gs.degree())?;
    let mut seen = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for &r in gs.indices() {
            let q = p.reversed_unchecked(r);
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen.len())
}

pub fn generates_whole_group(gs: &GeneratorSet) -> Result<bool> {
    let order: usize = (1..=gs.degree()).product();
    Ok(orbit_size(gs)? == order)
}
