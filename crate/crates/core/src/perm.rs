//! Permutations in one-line notation and the prefix-reversal action.
//!
//! A [`Permutation`] is a plain value (a fixed 64-byte array plus its degree),
//! so it copies and hashes cheaply during search. Values and positions are
//! 1-based in all I/O.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::census::CycleForm;
use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 64;

/// A prefix-reversal `r_i`, `i >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct ReversalIndex(u8);

impl ReversalIndex {
    pub fn new(i: usize) -> Result<Self> {
        if i < 2 {
            return Err(Error::InvalidIndex(i));
        }
        if i > MAX_DEGREE {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: MAX_DEGREE,
            });
        }
        Ok(Self(i as u8))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<u8> for ReversalIndex {
    type Error = Error;

    fn try_from(i: u8) -> Result<Self> {
        Self::new(i as usize)
    }
}

impl From<ReversalIndex> for u8 {
    fn from(r: ReversalIndex) -> u8 {
        r.0
    }
}

impl fmt::Display for ReversalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `r_i` is a product of `floor(i/2)` disjoint transpositions.
pub fn parity_of_reversal(r: ReversalIndex) -> Parity {
    if (r.get() / 2) % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    entries: [u8; MAX_DEGREE],
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut entries = [0u8; MAX_DEGREE];
        for (i, e) in entries.iter_mut().take(n).enumerate() {
            *e = (i + 1) as u8;
        }
        Ok(Self {
            n: n as u8,
            entries,
        })
    }

    /// Builds a permutation from 1-based one-line notation, rejecting non-bijections.
    pub fn from_entries(values: &[usize]) -> Result<Self> {
        let n = values.len();
        check_degree(n)?;
        let mut seen = [false; MAX_DEGREE + 1];
        let mut entries = [0u8; MAX_DEGREE];
        for (slot, &v) in entries.iter_mut().zip(values) {
            if v == 0 || v > n {
                return Err(Error::Parse(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::Parse(format!("value {v} repeated")));
            }
            seen[v] = true;
            *slot = v as u8;
        }
        Ok(Self {
            n: n as u8,
            entries,
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn entries(&self) -> &[u8] {
        &self.entries[..self.n as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn apply_reversal(&self, r: ReversalIndex) -> Result<Self> {
        if r.get() > self.degree() {
            return Err(Error::IndexOutOfRange {
                index: r.get(),
                n: self.degree(),
            });
        }
        Ok(self.reversed_unchecked(r))
    }

    /// Caller guarantees `r <= degree`.
    #[inline]
    pub(crate) fn reversed_unchecked(&self, r: ReversalIndex) -> Self {
        let mut out = *self;
        out.entries[..r.get()].reverse();
        out
    }

    /// Right action of a word: reversals are applied left to right.
    pub fn apply_form(&self, form: &CycleForm) -> Result<Self> {
        self.apply_indices(form.indices())
    }

    pub fn apply_indices(&self, indices: &[ReversalIndex]) -> Result<Self> {
        if let Some(bad) = indices.iter().find(|r| r.get() > self.degree()) {
            return Err(Error::IndexOutOfRange {
                index: bad.get(),
                n: self.degree(),
            });
        }
        Ok(indices.iter().fold(*self, |p, &r| p.reversed_unchecked(r)))
    }
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE });
    }
    Ok(())
}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write(self.entries());
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed);
        let values = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(i: usize) -> ReversalIndex {
        ReversalIndex::new(i).unwrap()
    }

    #[test]
    fn identity_examples() {
        assert_eq!(Permutation::identity(4).unwrap().entries(), &[1, 2, 3, 4]);
        assert_eq!(Permutation::identity(2).unwrap().entries(), &[1, 2]);
        assert_eq!(
            Permutation::identity(7).unwrap().entries(),
            &[1, 2, 3, 4, 5, 6, 7]
        );
        assert!(Permutation::identity(1).is_err());
        assert!(Permutation::identity(65).is_err());
    }

    #[test]
    fn reversal_examples() {
        let p = Permutation::identity(5).unwrap();
        assert_eq!(p.apply_reversal(r(4)).unwrap().entries(), &[4, 3, 2, 1, 5]);
        let p = Permutation::identity(7).unwrap();
        assert_eq!(
            p.apply_reversal(r(4)).unwrap().entries(),
            &[4, 3, 2, 1, 5, 6, 7]
        );
        assert_eq!(
            p.apply_reversal(r(8)),
            Err(Error::IndexOutOfRange { index: 8, n: 7 })
        );
        assert!(ReversalIndex::new(1).is_err());
    }

    #[test]
    fn form_examples() {
        let id4 = Permutation::identity(4).unwrap();
        let c6 = CycleForm::from_slice(&[3, 2, 3, 2, 3, 2]).unwrap();
        assert_eq!(id4.apply_form(&c6).unwrap(), id4);
        assert_eq!(id4.apply_form(&CycleForm::default()).unwrap(), id4);
        let id5 = Permutation::identity(5).unwrap();
        let twice = CycleForm::from_slice(&[5, 5]).unwrap();
        assert_eq!(id5.apply_form(&twice).unwrap(), id5);
        let too_big = CycleForm::from_slice(&[6]).unwrap();
        assert!(id5.apply_form(&too_big).is_err());
    }

    // Sign by inversion count, independent of the floor(i/2) rule.
    fn parity_by_inversions(i: usize) -> Parity {
        let p = Permutation::identity(i)
            .unwrap()
            .apply_reversal(r(i))
            .unwrap();
        let e = p.entries();
        let mut inv = 0;
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if e[a] > e[b] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_of_reversal(r(2)), Parity::Odd);
        assert_eq!(parity_of_reversal(r(4)), Parity::Even);
        assert_eq!(parity_by_inversions(6), Parity::Odd);
        assert_eq!(parity_of_reversal(r(6)), Parity::Odd);
        for i in 2..=MAX_DEGREE {
            assert_eq!(parity_of_reversal(r(i)), parity_by_inversions(i), "r{i}");
        }
    }

    #[test]
    fn parse_and_display() {
        let p: Permutation = "4 3 2 1 5".parse().unwrap();
        assert_eq!(p.to_string(), "[4 3 2 1 5]");
        assert_eq!("[4 3 2 1 5]".parse::<Permutation>().unwrap(), p);
        assert!("1 1 2".parse::<Permutation>().is_err());
        assert!("1 2 4".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (2usize..=20)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_entries(&v).unwrap())
    }

    proptest! {
        #[test]
        fn reversal_is_involution_and_bijective(p in arb_perm(), seed in 0usize..1000) {
            let i = 2 + seed % (p.degree() - 1);
            let q = p.apply_reversal(r(i)).unwrap();
            let mut sorted = q.entries().to_vec();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=p.degree() as u8).collect::<Vec<_>>());
            prop_assert_eq!(q.apply_reversal(r(i)).unwrap(), p);
        }

        #[test]
        fn display_parses_back(p in arb_perm()) {
            prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        }
    }
}
