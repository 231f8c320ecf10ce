//! Exact integer sequences with a declared start index, the bordered
//! Pascal-triangle operators, and the predicates used on face vectors.
//!
//! The three operators form a little calculus on rows of a "modified
//! Pascal's triangle" whose right border is prescribed:
//!
//! * [`pascal_step`] produces the next row from a row and one appended
//!   border value (keep the first entry, sum adjacent pairs, add the
//!   border to the last entry),
//! * [`pascal_run`] seeds a triangle with a whole border vector and
//!   returns the final row — applied to an h-vector this yields the
//!   f-vector of the polytope,
//! * [`pascal_extend`] continues from an arbitrary row, consuming a list
//!   of appended border values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// A finite sequence of exact integers whose first entry sits at a declared
/// semantic index — `-1` for f-vectors (the improper face), `0` for
/// h-vectors.
///
/// Entries are nonnegative for every quantity this crate produces (counts
/// and binomials). The one exception is the h-vector of a non-polytopal
/// input to [`crate::transform::f_to_h`], which is built through
/// [`OffsetVec::new_signed`] and flagged by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OffsetVec {
    start: i64,
    entries: Vec<BigInt>,
}

impl OffsetVec {
    /// Checked constructor: rejects empty sequences and negative entries.
    pub fn new(start: i64, entries: Vec<BigInt>) -> Result<Self> {
        if let Some(position) = entries.iter().position(|e| e.is_negative()) {
            return Err(Error::NegativeEntry {
                position,
                value: entries[position].clone(),
            });
        }
        Self::new_signed(start, entries)
    }

    /// Like [`OffsetVec::new`] but permits negative entries. Used for the
    /// h-vector of inputs that are not f-vectors of actual polytopes.
    pub fn new_signed(start: i64, entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { start, entries })
    }

    /// Convenience constructor for literal values. Panics on an empty slice.
    pub fn from_u64s(start: i64, entries: &[u64]) -> Self {
        assert!(!entries.is_empty(), "OffsetVec needs at least one entry");
        Self {
            start,
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// One past the last semantic index.
    pub fn end(&self) -> i64 {
        self.start + self.entries.len() as i64
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    /// Entry at semantic index `index`; out-of-range access is an error,
    /// never a silent zero.
    pub fn get(&self, index: i64) -> Result<&BigInt> {
        if index < self.start || index >= self.end() {
            return Err(Error::IndexOutOfRange {
                index,
                start: self.start,
                end: self.end(),
            });
        }
        Ok(&self.entries[(index - self.start) as usize])
    }

    pub fn first(&self) -> &BigInt {
        &self.entries[0]
    }

    pub fn last(&self) -> &BigInt {
        &self.entries[self.entries.len() - 1]
    }

    /// Semantic index of positional entry `position`.
    pub fn index_of(&self, position: usize) -> i64 {
        self.start + position as i64
    }

    pub fn has_negative(&self) -> bool {
        self.entries.iter().any(|e| e.is_negative())
    }

    /// Same entries, new start index.
    pub fn with_start(mut self, start: i64) -> Self {
        self.start = start;
        self
    }

    /// The first `count` entries with the same start index.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        if count == 0 || count > self.entries.len() {
            return Err(Error::WrongLength {
                expected: count,
                found: self.entries.len(),
            });
        }
        Ok(Self {
            start: self.start,
            entries: self.entries[..count].to_vec(),
        })
    }

    /// Slice of entries from semantic index `from` to the end.
    pub fn entries_from(&self, from: i64) -> Result<&[BigInt]> {
        if from < self.start || from >= self.end() {
            return Err(Error::IndexOutOfRange {
                index: from,
                start: self.start,
                end: self.end(),
            });
        }
        Ok(&self.entries[(from - self.start) as usize..])
    }

    /// Entrywise `self + other`; starts and lengths must match exactly,
    /// mismatches are errors rather than padding.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.start != other.start {
            return Err(Error::StartMismatch {
                left: self.start,
                right: other.start,
            });
        }
        if self.entries.len() != other.entries.len() {
            return Err(Error::LengthMismatch {
                left: self.entries.len(),
                right: other.entries.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            start: self.start,
            entries,
        })
    }

    /// Entrywise scalar multiple.
    pub fn scaled(&self, factor: &BigInt) -> Self {
        Self {
            start: self.start,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Entries rendered as decimal strings (lossless for any magnitude).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }
}

impl fmt::Display for OffsetVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// The exact pair of numbers at the position where a predicate first fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Semantic index of the violation.
    pub index: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Verdict of a sequence predicate. `holds()` is true exactly when no
/// witness was found; a witness carries the two compared products so a
/// failure is reproducible without rerunning anything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    witness: Option<Witness>,
}

impl CheckResult {
    fn pass() -> Self {
        Self { witness: None }
    }

    fn fail(index: i64, lhs: BigInt, rhs: BigInt) -> Self {
        Self {
            witness: Some(Witness { index, lhs, rhs }),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

/// One appended-border step of the bordered Pascal recurrence:
/// `(a_0, a_0+a_1, ..., a_{s-2}+a_{s-1}, a_{s-1}+border)`.
///
/// The result keeps the start index of `a` and is one entry longer.
pub fn pascal_step(a: &OffsetVec, border: &BigInt) -> OffsetVec {
    let e = a.entries();
    let mut out = Vec::with_capacity(e.len() + 1);
    out.push(e[0].clone());
    for w in e.windows(2) {
        out.push(&w[0] + &w[1]);
    }
    out.push(a.last() + border);
    OffsetVec {
        start: a.start,
        entries: out,
    }
}

/// Run the bordered triangle seeded by `borders = (b_0, ..., b_r)`: start
/// from the single-entry row `(b_0)` and step once per remaining border.
/// The result has `borders.len()` entries and starts at index `-1` (the
/// f-vector convention: running an h-vector yields the f-vector).
pub fn pascal_run(borders: &OffsetVec) -> OffsetVec {
    run_rows(borders, None)
}

/// [`pascal_run`] recording every row and every border consumed.
pub fn pascal_run_traced(borders: &OffsetVec) -> (OffsetVec, TriangleTrace) {
    let mut trace = TriangleTrace::default();
    let last = run_rows(borders, Some(&mut trace));
    (last, trace)
}

fn run_rows(borders: &OffsetVec, mut trace: Option<&mut TriangleTrace>) -> OffsetVec {
    let b = borders.entries();
    let mut row = OffsetVec {
        start: -1,
        entries: vec![b[0].clone()],
    };
    if let Some(t) = trace.as_deref_mut() {
        t.rows.push(row.clone());
    }
    for border in &b[1..] {
        row = pascal_step(&row, border);
        if let Some(t) = trace.as_deref_mut() {
            t.appended.push(border.clone());
            t.rows.push(row.clone());
        }
    }
    row
}

/// Continue an existing row through the triangle, one step per appended
/// border. `pascal_extend(a, [])` is `a` itself, so splitting a border
/// vector anywhere composes: `extend(run(b[..=i]), &b[i+1..]) == run(b)`.
/// The start index of `a` is preserved.
pub fn pascal_extend(a: &OffsetVec, borders: &[BigInt]) -> OffsetVec {
    let mut row = a.clone();
    for border in borders {
        row = pascal_step(&row, border);
    }
    row
}

/// [`pascal_extend`] recording every row (including `a` itself).
pub fn pascal_extend_traced(a: &OffsetVec, borders: &[BigInt]) -> (OffsetVec, TriangleTrace) {
    let mut trace = TriangleTrace::default();
    trace.rows.push(a.clone());
    let mut row = a.clone();
    for border in borders {
        row = pascal_step(&row, border);
        trace.appended.push(border.clone());
        trace.rows.push(row.clone());
    }
    (row, trace)
}

/// Row-by-row record of a bordered-triangle computation, for rendering and
/// debugging. `rows[r + 1] == pascal_step(&rows[r], &appended[r])` and
/// `rows.len() == appended.len() + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriangleTrace {
    rows: Vec<OffsetVec>,
    appended: Vec<BigInt>,
}

impl TriangleTrace {
    pub fn rows(&self) -> &[OffsetVec] {
        &self.rows
    }

    pub fn appended(&self) -> &[BigInt] {
        &self.appended
    }

    pub fn last_row(&self) -> &OffsetVec {
        self.rows.last().expect("trace always holds the seed row")
    }

    /// Recheck the defining invariant of the trace.
    pub fn verify(&self) -> bool {
        self.rows.len() == self.appended.len() + 1
            && self
                .appended
                .iter()
                .enumerate()
                .all(|(r, b)| pascal_step(&self.rows[r], b) == self.rows[r + 1])
    }
}

/// Log-concavity: `v[p-1] * v[p+1] <= v[p]^2` at every position with two
/// neighbors. Exact cross-multiplication, no logarithms, no division, so
/// there is no tolerance to argue about. Length <= 2 holds vacuously.
///
/// The witness index is semantic; for an f-vector starting at `-1` the
/// check adjacent to `f_{-1}` is included.
pub fn is_log_concave(v: &OffsetVec) -> CheckResult {
    let e = v.entries();
    for p in 1..e.len().saturating_sub(1) {
        let lhs = &e[p - 1] * &e[p + 1];
        let rhs = &e[p] * &e[p];
        if lhs > rhs {
            return CheckResult::fail(v.index_of(p), lhs, rhs);
        }
    }
    CheckResult::pass()
}

/// Unimodality: weakly rises to some peak, then weakly falls. The witness
/// is the first entry that rises again after the descent has begun (no
/// choice of peak can absorb it); `lhs`/`rhs` are that entry and its
/// predecessor.
pub fn is_unimodal(v: &OffsetVec) -> CheckResult {
    let e = v.entries();
    let mut i = 1;
    while i < e.len() && e[i] >= e[i - 1] {
        i += 1;
    }
    while i < e.len() && e[i] <= e[i - 1] {
        i += 1;
    }
    if i == e.len() {
        CheckResult::pass()
    } else {
        CheckResult::fail(v.index_of(i), e[i].clone(), e[i - 1].clone())
    }
}

/// Entrywise scan for `e[0] >= e[1] >= ...`.
pub fn is_nonincreasing(entries: &[BigInt]) -> bool {
    entries.windows(2).all(|w| w[0] >= w[1])
}

/// Every entry strictly positive.
pub fn is_positive(entries: &[BigInt]) -> bool {
    entries.iter().all(|e| e.is_positive())
}

/// No zero entry strictly between positive entries. Log-concave sequences
/// with this extra property are closed under convolution, which is what
/// makes the bordered-triangle preservation results below tick.
pub fn has_no_internal_zeros(entries: &[BigInt]) -> bool {
    let first = entries.iter().position(|e| e.is_positive());
    let last = entries.iter().rposition(|e| e.is_positive());
    match (first, last) {
        (Some(a), Some(b)) => entries[a..=b].iter().all(|e| e.is_positive()),
        _ => true,
    }
}
