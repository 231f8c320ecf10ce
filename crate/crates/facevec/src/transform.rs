//! Extended binomial coefficients and the two linear conversions between
//! f-vectors and h-vectors, plus the mixed binomial family that every
//! triangle border of an ordinary polytope belongs to.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::seqvec::OffsetVec;

/// Exact binomial coefficient with zero-extension: `binom(n, k) == 0` for
/// `k < 0` or `k > n`. Evaluated multiplicatively in `min(k, n-k)` steps;
/// every intermediate division is exact.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// h-vector computed from an f-vector, flagged when the input was not the
/// f-vector of an actual polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    /// Starts at index 0, `d + 1` entries, possibly negative (see flag).
    pub vec: OffsetVec,
    /// The alternating sums went negative somewhere: legal input for
    /// experimentation, but not a polytope.
    pub has_negative: bool,
}

/// The alternating-sum transform
/// `h_i = sum_{j=0..i} (-1)^{i-j} C(d-j, d-i) f_{j-1}` for `0 <= i <= d`.
///
/// `f` must start at `-1` with exactly `d + 1` entries. The sums are taken
/// over signed integers; a negative result is returned flagged rather than
/// rejected.
pub fn f_to_h(f: &OffsetVec, d: u32) -> Result<HVector> {
    expect_shape(f, -1, d)?;
    let fe = f.entries();
    let d = d as u64;
    let mut out = Vec::with_capacity(fe.len());
    for i in 0..=d {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let term = binom(d - j, (d - i) as i64) * &fe[j as usize];
            if (i - j) % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push(acc);
    }
    let vec = OffsetVec::new_signed(0, out)?;
    let has_negative = vec.has_negative();
    Ok(HVector { vec, has_negative })
}

/// The inverse transform `f_j = sum_{i=0..d} C(d-i, d-j-1) h_i` for
/// `-1 <= j <= d-1`. `h` must start at `0` with `d + 1` entries.
///
/// This is the same linear map as [`crate::seqvec::pascal_run`]; both are
/// kept and tested against each other.
pub fn h_to_f(h: &OffsetVec, d: u32) -> Result<OffsetVec> {
    expect_shape(h, 0, d)?;
    let he = h.entries();
    let d = d as i64;
    let mut out = Vec::with_capacity(he.len());
    for j in -1..d {
        let mut acc = BigInt::zero();
        for (i, hi) in he.iter().enumerate() {
            acc += binom((d - i as i64) as u64, d - j - 1) * hi;
        }
        out.push(acc);
    }
    OffsetVec::new_signed(-1, out)
}

fn expect_shape(v: &OffsetVec, start: i64, d: u32) -> Result<()> {
    if v.start() != start {
        return Err(Error::WrongStart {
            expected: start,
            found: v.start(),
        });
    }
    if v.len() != d as usize + 1 {
        return Err(Error::WrongLength {
            expected: d as usize + 1,
            found: v.len(),
        });
    }
    Ok(())
}

/// The sequence `C(n+1, k) + m * C(n-1, k-1)` for `k = 0..len`, starting at
/// index 0. Every bordered-triangle seed `v + (n-k)u` of an ordinary
/// polytope is a prefix of a member of this family, and every member is
/// log-concave: it is the Pascal row `C(n-1, .)` convolved with
/// `(1, m+2, 1)`.
///
/// Entries at indices beyond `n + 1` are zero (trailing zeros, included if
/// requested).
pub fn mixed_binomial_seq(n: u64, m: u64, len: usize) -> Result<OffsetVec> {
    if n < 1 {
        return Err(Error::TooSmall {
            name: "n",
            min: 1,
            found: n,
        });
    }
    if m < 1 {
        return Err(Error::TooSmall {
            name: "m",
            min: 1,
            found: m,
        });
    }
    if len < 1 {
        return Err(Error::TooSmall {
            name: "len",
            min: 1,
            found: len as u64,
        });
    }
    let m = BigInt::from(m);
    let entries = (0..len as i64)
        .map(|k| binom(n + 1, k) + &m * binom(n - 1, k - 1))
        .collect();
    OffsetVec::new(0, entries)
}
