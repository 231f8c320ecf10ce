//! Seeded random generators for the property suites and the self-test.
//!
//! Log-concave vectors come from the ratio construction: a positive first
//! entry and a nonincreasing sequence of positive rational ratios, with
//! `a_{i+1} = floor(a_i * p_i / q_i)`. Nonincreasing ratios give
//! log-concavity exactly; flooring can break it, so the result is checked
//! and resampled on violation — the final filter, not the construction,
//! guarantees the hypothesis.

use num_bigint::BigInt;
use rand::Rng;

use crate::seqvec::{
    has_no_internal_zeros, is_log_concave, is_nonincreasing, OffsetVec,
};

const RATIO_RANGE: u64 = 20;

fn ratio_attempt<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_entry: u64) -> Option<Vec<u64>> {
    let len = rng.random_range(1..=max_len);
    let mut ratios: Vec<(u64, u64)> = (0..len - 1)
        .map(|_| {
            (
                rng.random_range(1..=RATIO_RANGE),
                rng.random_range(1..=RATIO_RANGE),
            )
        })
        .collect();
    // nonincreasing by cross-multiplication: p1/q1 >= p2/q2
    ratios.sort_by(|a, b| (b.0 as u128 * a.1 as u128).cmp(&(a.0 as u128 * b.1 as u128)));
    let mut out = vec![rng.random_range(1..=max_entry)];
    for (p, q) in ratios {
        let next = (out[out.len() - 1] as u128 * p as u128 / q as u128) as u64;
        if next == 0 || next > max_entry {
            return None;
        }
        out.push(next);
    }
    Some(out)
}

/// A positive log-concave vector, `1..=max_len` entries in `1..=max_entry`,
/// start index 0.
pub fn log_concave_positive<R: Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    max_entry: u64,
) -> OffsetVec {
    loop {
        if let Some(entries) = ratio_attempt(rng, max_len, max_entry) {
            let v = OffsetVec::from_u64s(0, &entries);
            if is_log_concave(&v).holds() {
                return v;
            }
        }
    }
}

/// A nonnegative log-concave vector: a positive core with an occasional
/// leading and/or trailing zero (zeros at the ends never violate the
/// cross-multiplication inequality).
pub fn log_concave_nonneg<R: Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    max_entry: u64,
) -> OffsetVec {
    let core_max = max_len.saturating_sub(2).max(1);
    let core = log_concave_positive(rng, core_max, max_entry);
    let mut entries: Vec<u64> = Vec::with_capacity(core.len() + 2);
    if rng.random_range(0..4) == 0 {
        entries.push(0);
    }
    for e in core.entries() {
        entries.push(u64::try_from(e).expect("generator stays within u64"));
    }
    if rng.random_range(0..4) == 0 {
        entries.push(0);
    }
    let v = OffsetVec::from_u64s(0, &entries);
    debug_assert!(is_log_concave(&v).holds());
    v
}

/// A nonincreasing vector of `1..=max_len` nonnegative entries (uniform
/// draws, sorted descending).
pub fn nonincreasing_nonneg<R: Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    max_entry: u64,
) -> Vec<BigInt> {
    let len = rng.random_range(1..=max_len);
    let mut entries: Vec<u64> = (0..len).map(|_| rng.random_range(0..=max_entry)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    entries.into_iter().map(BigInt::from).collect()
}

/// Does `(a, borders)` satisfy the hypotheses under which extending a row
/// provably preserves log-concavity?
///
/// Requirements: `a` log-concave, `borders` nonincreasing, and the
/// concatenation of `a` with the first border log-concave with no internal
/// zeros. The last two are the seam conditions; without them extension can
/// break log-concavity — `pascal_extend((4,2,1), (1)) = (4,6,3,2)` fails at
/// `6*2 > 3^2` even though `(4,2,1)` is log-concave and `(1)` is
/// nonincreasing.
pub fn extension_hypothesis(a: &OffsetVec, borders: &[BigInt]) -> bool {
    if !is_log_concave(a).holds() || !is_nonincreasing(borders) {
        return false;
    }
    let Some(first) = borders.first() else {
        return true;
    };
    let mut joined = a.entries().to_vec();
    joined.push(first.clone());
    let joined = OffsetVec::new_signed(a.start(), joined).expect("nonempty");
    is_log_concave(&joined).holds() && has_no_internal_zeros(joined.entries())
}

/// A random pair satisfying [`extension_hypothesis`], by rejection.
pub fn extension_pair<R: Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    max_entry: u64,
) -> (OffsetVec, Vec<BigInt>) {
    loop {
        let a = log_concave_nonneg(rng, max_len, max_entry);
        let b = nonincreasing_nonneg(rng, max_len, max_entry);
        if extension_hypothesis(&a, &b) {
            return (a, b);
        }
    }
}
