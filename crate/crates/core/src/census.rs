//! Cycle forms, the catalogue of known canonical families, and exact counts of
//! short cycles through the identity vertex.
//!
//! A form `r_{i0} ... r_{i(l-1)}` is a word in the generators. It is a relator
//! when the right action of the word fixes the identity, which for a right
//! action is the same as fixing every permutation.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::genset::{GeneratorSet, SetSpec};
use crate::perm::{Permutation, ReversalIndex};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleForm(Vec<ReversalIndex>);

impl CycleForm {
    pub fn new(indices: Vec<ReversalIndex>) -> Self {
        Self(indices)
    }

    pub fn from_slice(indices: &[usize]) -> Result<Self> {
        indices
            .iter()
            .map(|&i| ReversalIndex::new(i))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn indices(&self) -> &[ReversalIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest degree the form acts on.
    pub fn min_degree(&self) -> usize {
        self.0.iter().map(|r| r.get()).max().unwrap_or(2)
    }

    /// No generator repeats consecutively, cyclically.
    pub fn is_reduced(&self) -> bool {
        let l = self.0.len();
        l >= 2 && (0..l).all(|j| self.0[j] != self.0[(j + 1) % l])
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn rotated(&self, by: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let by = by % v.len();
            v.rotate_left(by);
        }
        Self(v)
    }

    pub fn repeated(&self, times: usize) -> Self {
        Self(self.0.repeat(times))
    }

    /// `(r₃ r₂)³` style rendering, folding the shortest repeating block.
    pub fn pretty(&self) -> String {
        let l = self.0.len();
        let period = (1..=l)
            .find(|&p| l.is_multiple_of(p) && (p..l).all(|j| self.0[j] == self.0[j - p]))
            .unwrap_or(l);
        let block = self.0[..period]
            .iter()
            .map(|r| format!("r{}", subscript(r.get())))
            .collect::<Vec<_>>()
            .join(" ");
        if period == l || l == 0 {
            block
        } else {
            format!("({block}){}", superscript(l / period))
        }
    }
}

fn map_digits(value: usize, digits: [char; 10]) -> String {
    value
        .to_string()
        .bytes()
        .map(|b| digits[(b - b'0') as usize])
        .collect()
}

fn subscript(value: usize) -> String {
    map_digits(value, ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'])
}

fn superscript(value: usize) -> String {
    map_digits(value, ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'])
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    /// Accepts `3,2,3,2,3,2`, `3 2 3 2 3 2` or `r3 r2 r3 r2 r3 r2`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim_start_matches(['r', 'R'])
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("not an index: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_slice(&values)
    }
}

pub fn is_relator(form: &CycleForm, n: usize) -> Result<bool> {
    let id = Permutation::identity(n)?;
    Ok(id.apply_form(form)?.is_identity())
}

/// The walk from the identity closes and its `l >= 3` vertices are distinct.
pub fn is_simple_cycle(form: &CycleForm, n: usize) -> Result<bool> {
    let id = Permutation::identity(n)?;
    // Range check up front so the walk below cannot fail midway.
    id.apply_form(form)?;
    if form.len() < 3 {
        return Ok(false);
    }
    let mut visited = Vec::with_capacity(form.len());
    let mut p = id;
    for &r in form.indices() {
        visited.push(p);
        p = p.reversed_unchecked(r);
        if visited.contains(&p) && !(p == id && visited.len() == form.len()) {
            return Ok(false);
        }
    }
    Ok(p == id)
}

/// Lexicographically maximal form among the `2l` rotations and reflections.
pub fn canonicalize(form: &CycleForm) -> Result<CycleForm> {
    if !is_simple_cycle(form, form.min_degree())? {
        return Err(Error::NotSimpleRelator(form.to_string()));
    }
    Ok(max_presentation(form))
}

fn max_presentation(form: &CycleForm) -> CycleForm {
    let reflected = form.reversed();
    (0..form.len())
        .flat_map(|s| [form.rotated(s), reflected.rotated(s)])
        .max()
        .unwrap_or_default()
}

/// The published canonical-form families of short cycles in the pancake graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C6,
    C7,
    C8(u8),
    C10,
    C12,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::C6,
        Family::C7,
        Family::C8(1),
        Family::C8(2),
        Family::C8(3),
        Family::C8(4),
        Family::C8(5),
        Family::C8(6),
        Family::C8(7),
        Family::C8(8),
        Family::C10,
        Family::C12,
    ];

    pub fn eight_cycle_families() -> impl Iterator<Item = Family> {
        (1..=8).map(Family::C8)
    }

    pub fn cycle_length(self) -> usize {
        match self {
            Family::C6 => 6,
            Family::C7 => 7,
            Family::C8(_) => 8,
            Family::C10 => 10,
            Family::C12 => 12,
        }
    }

    pub fn min_degree(self) -> usize {
        match self {
            Family::C6 => 3,
            Family::C7 | Family::C8(1..=3) | Family::C8(7..=8) => 4,
            Family::C8(_) | Family::C10 | Family::C12 => 5,
        }
    }

    pub fn name(self) -> String {
        match self {
            Family::C8(t) => format!("c8_{t}"),
            other => format!("{other:?}").to_ascii_lowercase(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == lower || lower.replace('^', "_") == f.name())
            .ok_or(Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: Family,
    pub k: Option<usize>,
    pub j: Option<usize>,
    pub i: Option<usize>,
    pub form: CycleForm,
}

impl FamilyInstance {
    fn make(
        family: Family,
        k: Option<usize>,
        j: Option<usize>,
        i: Option<usize>,
        raw: &[usize],
    ) -> Self {
        Self {
            family,
            k,
            j,
            i,
            form: CycleForm::from_slice(raw).expect("family indices are at least 2"),
        }
    }

    pub fn parameters(&self) -> String {
        [("k", self.k), ("j", self.j), ("i", self.i)]
            .iter()
            .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Every form of `fam` with parameters inside the printed bounds and `k <= n`.
/// Empty when `n` is below the family's minimum degree.
pub fn family_instances(fam: Family, n: usize) -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    if n < fam.min_degree() {
        return out;
    }
    let one = |out: &mut Vec<FamilyInstance>, k: Option<usize>, j, i, raw: &[usize]| {
        out.push(FamilyInstance::make(fam, k, j, i, raw))
    };
    match fam {
        Family::C6 => one(&mut out, None, None, None, &[3, 2, 3, 2, 3, 2]),
        Family::C7 => {
            for k in 4..=n {
                one(
                    &mut out,
                    Some(k),
                    None,
                    None,
                    &[k, k - 1, k, k - 1, k - 2, k, 2],
                );
            }
        }
        Family::C8(1) => {
            for k in 4..=n {
                for j in 3..k {
                    for i in 2..j {
                        let m = k - j + i;
                        one(
                            &mut out,
                            Some(k),
                            Some(j),
                            Some(i),
                            &[k, j, i, j, k, m, i, m],
                        );
                    }
                }
            }
        }
        Family::C8(2) => {
            for k in 4..=n {
                one(
                    &mut out,
                    Some(k),
                    None,
                    None,
                    &[k, k - 1, 2, k - 1, k, 2, 3, 2],
                );
            }
        }
        Family::C8(3) => {
            for k in 4..=n {
                for i in 2..=k - 2 {
                    one(
                        &mut out,
                        Some(k),
                        None,
                        Some(i),
                        &[k, k - i, k - 1, i, k, k - i, k - 1, i],
                    );
                }
            }
        }
        Family::C8(4) => {
            for k in 5..=n {
                for i in 3..=k - 2 {
                    one(
                        &mut out,
                        Some(k),
                        None,
                        Some(i),
                        &[k, k - i + 1, k, i, k, k - i, k - 1, i - 1],
                    );
                }
            }
        }
        Family::C8(5) => {
            for k in 5..=n {
                for i in 3..=k - 2 {
                    one(
                        &mut out,
                        Some(k),
                        None,
                        Some(i),
                        &[k, k - 1, i - 1, k, k - i + 1, k - i, k, i],
                    );
                }
            }
        }
        Family::C8(6) => {
            for k in 5..=n {
                for i in 2..=k - 3 {
                    one(
                        &mut out,
                        Some(k),
                        None,
                        Some(i),
                        &[k, k - 1, k, k - i, k - i - 1, k, i, i + 1],
                    );
                }
            }
        }
        Family::C8(7) => {
            for k in 4..=n {
                for j in 3..k {
                    for i in 2..j {
                        let m = k - j + 1;
                        one(
                            &mut out,
                            Some(k),
                            Some(j),
                            Some(i),
                            &[k, m, k, i, k, m, k, i],
                        );
                    }
                }
            }
        }
        Family::C8(8) => one(&mut out, None, None, None, &[4, 3, 4, 3, 4, 3, 4, 3]),
        Family::C8(_) => {}
        Family::C10 => one(&mut out, None, None, None, &[5, 4].repeat(5)),
        // Written in terms of the degree itself: k = n.
        Family::C12 => one(
            &mut out,
            Some(n),
            None,
            None,
            &[n, n - 1, n, n - 1, n - 3, n - 1].repeat(2),
        ),
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusBudget {
    pub max_extensions: u64,
}

impl Default for CensusBudget {
    fn default() -> Self {
        Self {
            max_extensions: 1_000_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub set: SetSpec,
    pub length: usize,
    /// Distinct cycles of this length through the identity.
    pub per_vertex: u64,
    /// Distinct cycles in the whole graph; `None` when it overflows `u128`.
    pub total: Option<u128>,
    /// One rooted traversal per cycle, the direction with the larger index sequence.
    pub forms: Vec<CycleForm>,
}

pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// `per_vertex * n! / l`: each cycle passes `l` vertices and every vertex
/// lies on the same number of cycles.
pub fn total_cycles(per_vertex: u64, n: usize, length: usize) -> Option<u128> {
    factorial(n)?
        .checked_mul(per_vertex as u128)
        .map(|x| x / length as u128)
}

/// Exact census of simple `length`-cycles through the identity.
pub fn census(gs: &GeneratorSet, length: usize, budget: &CensusBudget) -> Result<CensusReport> {
    census_with(gs, length, budget, Execution::default())
}

/// As [`census`], choosing how the first-generator branches are scheduled.
pub fn census_with(
    gs: &GeneratorSet,
    length: usize,
    budget: &CensusBudget,
    exec: Execution,
) -> Result<CensusReport> {
    if length < 3 {
        return Err(Error::LengthTooShort(length));
    }
    let root = Permutation::identity(gs.degree())?;
    let shared = SharedBudget {
        limit: budget.max_extensions,
        used: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };
    let branches = exec.map(gs.indices().to_vec(), |first| {
        let mut walker = Walker {
            gens: gs.indices(),
            length,
            root,
            path: Vec::with_capacity(length),
            word: Vec::with_capacity(length),
            forms: Vec::new(),
            steps: 0,
            budget: &shared,
        };
        walker.run(first);
        walker.flush();
        walker.forms
    });
    let forms: Vec<CycleForm> = branches.into_iter().flatten().collect();
    if shared.exhausted.load(Ordering::Relaxed) {
        return Err(Error::CensusBudget {
            limit: budget.max_extensions,
            partial: forms.len() as u64,
        });
    }
    let per_vertex = forms.len() as u64;
    Ok(CensusReport {
        n: gs.degree(),
        set: gs.spec(),
        length,
        per_vertex,
        total: total_cycles(per_vertex, gs.degree(), length),
        forms,
    })
}

struct SharedBudget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

const FLUSH_EVERY: u64 = 4096;

struct Walker<'a> {
    gens: &'a [ReversalIndex],
    length: usize,
    root: Permutation,
    // Vertices before the current one, starting with the root.
    path: Vec<Permutation>,
    word: Vec<ReversalIndex>,
    forms: Vec<CycleForm>,
    steps: u64,
    budget: &'a SharedBudget,
}

impl Walker<'_> {
    fn run(&mut self, first: ReversalIndex) {
        let next = self.root.reversed_unchecked(first);
        self.path.push(self.root);
        self.word.push(first);
        self.steps += 1;
        self.descend(next, first);
    }

    fn flush(&mut self) -> bool {
        let total = self.budget.used.fetch_add(self.steps, Ordering::Relaxed) + self.steps;
        self.steps = 0;
        if total > self.budget.limit {
            self.budget.exhausted.store(true, Ordering::Relaxed);
        }
        self.budget.exhausted.load(Ordering::Relaxed)
    }

    /// `current` is the endpoint of `word`; returns false once the budget is gone.
    fn descend(&mut self, current: Permutation, last: ReversalIndex) -> bool {
        let closing = self.word.len() + 1 == self.length;
        for &g in self.gens {
            if g == last {
                continue;
            }
            self.steps += 1;
            if self.steps >= FLUSH_EVERY && self.flush() {
                return false;
            }
            let next = current.reversed_unchecked(g);
            if closing {
                if next == self.root {
                    self.word.push(g);
                    let reversed: Vec<_> = self.word.iter().rev().copied().collect();
                    if self.word >= reversed {
                        self.forms.push(CycleForm::new(self.word.clone()));
                    }
                    self.word.pop();
                }
                continue;
            }
            if self.path.contains(&next) {
                continue;
            }
            self.path.push(current);
            self.word.push(g);
            let alive = self.descend(next, g);
            self.word.pop();
            self.path.pop();
            if !alive {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountFormula {
    SixCycles,
    SevenCycles,
    EightCycles,
}

impl CountFormula {
    pub fn for_length(length: usize) -> Option<Self> {
        match length {
            6 => Some(Self::SixCycles),
            7 => Some(Self::SevenCycles),
            8 => Some(Self::EightCycles),
            _ => None,
        }
    }

    pub fn min_degree(self) -> usize {
        match self {
            Self::SixCycles => 3,
            Self::SevenCycles | Self::EightCycles => 4,
        }
    }
}

/// Published per-vertex cycle counts in the full pancake graph.
pub fn expected_count(formula: CountFormula, n: usize) -> Result<u64> {
    if n < formula.min_degree() {
        return Err(Error::BelowFormulaDomain {
            n,
            min: formula.min_degree(),
        });
    }
    let n = n as i128;
    let value = match formula {
        CountFormula::SixCycles => 1,
        CountFormula::SevenCycles => 7 * (n - 3),
        CountFormula::EightCycles => (n * n * n + 12 * n * n - 103 * n + 176) / 2,
    };
    Ok(value as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genset::{bs_set, full_pancake, BsKind};

    fn f(v: &[usize]) -> CycleForm {
        CycleForm::from_slice(v).unwrap()
    }

    fn count(gs: &GeneratorSet, l: usize) -> u64 {
        census(gs, l, &CensusBudget::default()).unwrap().per_vertex
    }

    #[test]
    fn relator_examples() {
        assert!(is_relator(&f(&[3, 2, 3, 2, 3, 2]), 4).unwrap());
        assert!(!is_relator(&f(&[3, 2, 3, 2]), 4).unwrap());
        assert!(is_relator(&f(&[5, 4].repeat(5)), 5).unwrap());
        assert!(is_relator(&f(&[7, 6, 7, 6, 4, 6].repeat(2)), 7).unwrap());
        assert!(is_relator(&f(&[5]), 4).is_err());
    }

    #[test]
    fn simple_cycle_examples() {
        assert!(is_simple_cycle(&f(&[3, 2, 3, 2, 3, 2]), 4).unwrap());
        assert!(!is_simple_cycle(&f(&[2, 3, 2, 3]), 4).unwrap());
        assert!(!is_simple_cycle(&f(&[3, 2].repeat(6)), 4).unwrap());
        assert!(!is_simple_cycle(&f(&[5, 5]), 5).unwrap());
        assert!(!is_simple_cycle(&f(&[]), 5).unwrap());
        assert!(is_simple_cycle(&f(&[9]), 5).is_err());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonicalize(&f(&[2, 3, 2, 3, 2, 3])).unwrap(),
            f(&[3, 2, 3, 2, 3, 2])
        );
        let c88 = f(&[4, 3].repeat(4));
        assert_eq!(canonicalize(&c88).unwrap(), c88);
        let c7 = f(&[4, 3, 4, 3, 2, 4, 2]);
        let once = canonicalize(&c7.rotated(3).reversed()).unwrap();
        assert_eq!(canonicalize(&once).unwrap(), once);
        assert!(matches!(
            canonicalize(&f(&[3, 2, 3, 2])),
            Err(Error::NotSimpleRelator(_))
        ));
    }

    #[test]
    fn family_examples() {
        let c7 = family_instances(Family::C7, 4);
        assert_eq!(c7.len(), 1);
        assert_eq!(c7[0].form, f(&[4, 3, 4, 3, 2, 4, 2]));
        for n in 4..=12 {
            let c88 = family_instances(Family::C8(8), n);
            assert_eq!(c88.len(), 1);
            assert_eq!(c88[0].form, f(&[4, 3].repeat(4)));
        }
        let c81 = family_instances(Family::C8(1), 4);
        assert_eq!(c81.len(), 1);
        assert_eq!(c81[0].form, f(&[4, 3, 2, 3, 4, 3, 2, 3]));
        assert_eq!((c81[0].k, c81[0].j, c81[0].i), (Some(4), Some(3), Some(2)));
        assert!(family_instances(Family::C8(4), 4).is_empty());
        assert!(family_instances(Family::C10, 4).is_empty());
        assert_eq!(family_instances(Family::C7, 10).len(), 7);
        let c12 = family_instances(Family::C12, 7);
        assert_eq!(c12.len(), 1);
        assert_eq!(c12[0].form, f(&[7, 6, 7, 6, 4, 6].repeat(2)));
    }

    #[test]
    fn family_names_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.name().parse::<Family>().unwrap(), fam);
            for inst in family_instances(fam, 8) {
                assert_eq!(inst.form.len(), fam.cycle_length());
            }
        }
        assert_eq!("C8^3".parse::<Family>().unwrap(), Family::C8(3));
        assert!("c9".parse::<Family>().is_err());
    }

    #[test]
    fn census_examples() {
        assert_eq!(count(&full_pancake(4).unwrap(), 6), 1);
        assert_eq!(count(&full_pancake(5).unwrap(), 7), 14);
        assert_eq!(count(&full_pancake(5).unwrap(), 8), 43);
        assert_eq!(count(&bs_set(BsKind::Bs5, 7).unwrap(), 10), 0);
        assert_eq!(count(&bs_set(BsKind::Bs5, 7).unwrap(), 11), 0);
        assert_eq!(
            census(&full_pancake(4).unwrap(), 2, &CensusBudget::default()),
            Err(Error::LengthTooShort(2))
        );
    }

    #[test]
    fn census_forms_are_simple_relators() {
        let report = census(&full_pancake(5).unwrap(), 8, &CensusBudget::default()).unwrap();
        assert_eq!(report.forms.len() as u64, report.per_vertex);
        for form in &report.forms {
            assert!(is_simple_cycle(form, 5).unwrap());
            assert!(*form >= form.reversed());
        }
        assert_eq!(report.total, Some(43 * 120 / 8));
    }

    #[test]
    fn census_budget_is_enforced() {
        let tiny = CensusBudget {
            max_extensions: 100,
        };
        assert!(matches!(
            census(&full_pancake(6).unwrap(), 8, &tiny),
            Err(Error::CensusBudget { limit: 100, .. })
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let gs = full_pancake(6).unwrap();
        let b = CensusBudget::default();
        assert_eq!(
            census_with(&gs, 7, &b, Execution::Sequential).unwrap(),
            census_with(&gs, 7, &b, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn expected_examples() {
        assert_eq!(expected_count(CountFormula::EightCycles, 4).unwrap(), 10);
        assert_eq!(expected_count(CountFormula::EightCycles, 5).unwrap(), 43);
        assert_eq!(expected_count(CountFormula::SevenCycles, 4).unwrap(), 7);
        assert_eq!(expected_count(CountFormula::SixCycles, 9).unwrap(), 1);
        assert!(matches!(
            expected_count(CountFormula::SevenCycles, 3),
            Err(Error::BelowFormulaDomain { min: 4, .. })
        ));
    }

    #[test]
    fn pretty_shorthand() {
        assert_eq!(f(&[3, 2].repeat(3)).pretty(), "(r₃ r₂)³");
        assert_eq!(
            f(&[7, 6, 7, 6, 4, 6].repeat(2)).pretty(),
            "(r₇ r₆ r₇ r₆ r₄ r₆)²"
        );
        assert_eq!(f(&[4, 3, 4, 3, 2, 4, 2]).pretty(), "r₄ r₃ r₄ r₃ r₂ r₄ r₂");
        assert_eq!(f(&[12, 10]).pretty(), "r₁₂ r₁₀");
        assert_eq!("r3 r2 r3".parse::<CycleForm>().unwrap(), f(&[3, 2, 3]));
        assert_eq!("[3,2]".parse::<CycleForm>().unwrap(), f(&[3, 2]));
    }

    #[test]
    fn report_json_round_trip() {
        let report = census(
            &bs_set(BsKind::Bs5, 5).unwrap(),
            8,
            &CensusBudget::default(),
        )
        .unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"set\":\"bs5\""));
        assert!(json.contains("\"forms\":[["));
        let back: CensusReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
