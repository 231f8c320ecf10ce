//! f-vectors of ordinary polytopes `P(d, k, n)`: Bisztriczky's
//! non-simplicial generalization of the cyclic polytopes, with `n + 1`
//! vertices and characteristic `k` (`d <= k <= n`).
//!
//! Even-dimensional ordinary polytopes are cyclic, so even `d` dispatches
//! straight to [`cyclic_f`]. Odd dimensions have two independent routes to
//! the same vector — a closed-form count and a bordered-triangle
//! composition — and this module keeps both so each can check the other.

use num_bigint::BigInt;
use std::fmt;

use crate::error::{Error, Result};
use crate::seqvec::{pascal_extend, OffsetVec};
use crate::cyclic::{cyclic_f, cyclic_h, cyclic_half_f};
use crate::transform::binom;

/// Validated parameter triple of an ordinary polytope.
///
/// `n >= k >= d >= 5` always. The odd-dimension closed form is stated for
/// `d > 5`; lenient mode accepts `d = 5` with a warning (the route
/// cross-check still holds there), strict mode rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolytopeParams {
    d: u32,
    k: u32,
    n: u32,
    strict: bool,
}

/// Non-fatal caveat attached to a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamWarning {
    /// d = 5 sits outside the d > 5 hypothesis of the odd-dimension closed
    /// form; results are still route-checked.
    OddDimensionFive,
}

impl fmt::Display for ParamWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamWarning::OddDimensionFive => write!(
                f,
                "d=5 accepted outside the d>5 hypothesis of the odd-dimension closed form"
            ),
        }
    }
}

impl PolytopeParams {
    /// Lenient validation: `n >= k >= d >= 5`.
    pub fn new(d: u32, k: u32, n: u32) -> Result<Self> {
        Self::build(d, k, n, false)
    }

    /// Strict validation: additionally rejects `d = 5` in odd dimension.
    pub fn strict(d: u32, k: u32, n: u32) -> Result<Self> {
        Self::build(d, k, n, true)
    }

    fn build(d: u32, k: u32, n: u32, strict: bool) -> Result<Self> {
        if d < 5 {
            return Err(Error::TooSmall {
                name: "d",
                min: 5,
                found: d as u64,
            });
        }
        if k < d {
            return Err(Error::CharacteristicBelowDimension { d, k });
        }
        if n < k {
            return Err(Error::VerticesBelowCharacteristic { k, n });
        }
        if strict && d == 5 {
            return Err(Error::StrictRejectsDimensionFive);
        }
        Ok(Self { d, k, n, strict })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn is_odd(&self) -> bool {
        self.d % 2 == 1
    }

    /// `m = (d - 1) / 2` for odd `d`.
    pub fn half(&self) -> u32 {
        (self.d - 1) / 2
    }

    /// Vertex count `n + 1`.
    pub fn vertices(&self) -> u32 {
        self.n + 1
    }

    pub fn warnings(&self) -> Vec<ParamWarning> {
        if self.is_odd() && self.d == 5 && !self.strict {
            vec![ParamWarning::OddDimensionFive]
        } else {
            vec![]
        }
    }
}

fn expect_odd(d: u32, k: u32) -> Result<u64> {
    if d % 2 == 0 {
        return Err(Error::NeedOddDimension { d });
    }
    if d < 5 {
        return Err(Error::TooSmall {
            name: "d",
            min: 5,
            found: d as u64,
        });
    }
    if k < d {
        return Err(Error::CharacteristicBelowDimension { d, k });
    }
    Ok(((d - 1) / 2) as u64)
}

/// The border vector `u` with entries `C(k - m - 2, i)` for `i = -1..m-1`
/// (so `u_{-1} = 0` by zero-extension). Running it through the triangle
/// against zero borders yields [`face_correction`].
pub fn face_correction_border(d: u32, k: u32) -> Result<OffsetVec> {
    let m = expect_odd(d, k)?;
    let base = k as u64 - m - 2;
    let entries = (-1..m as i64).map(|i| binom(base, i)).collect();
    OffsetVec::new(-1, entries)
}

/// The per-extra-vertex face-count correction `c`, `d + 1` entries starting
/// at `-1` with `c_{-1} = 0`: each vertex beyond the characteristic adds
/// exactly `c_j` faces of dimension `j`.
pub fn face_correction(d: u32, k: u32) -> Result<OffsetVec> {
    let m = expect_odd(d, k)?;
    let u = face_correction_border(d, k)?;
    let zeros = vec![BigInt::ZERO; m as usize + 1];
    Ok(pascal_extend(&u, &zeros))
}

/// Closed form of one entry of [`face_correction`]:
/// `c_j = sum_{i=0..m-1} C(m+1, j-i) C(k-m-2, i)`. The triangle route and
/// this sum are checked equal over the whole test grid.
pub fn face_correction_closed(d: u32, k: u32, j: i64) -> Result<BigInt> {
    let m = expect_odd(d, k)?;
    if j < -1 || j >= d as i64 {
        return Err(Error::FaceIndexOutOfRange { j, d });
    }
    let base = k as u64 - m - 2;
    let mut acc = BigInt::ZERO;
    for i in 0..m as i64 {
        acc += binom(m + 1, j - i) * binom(base, i);
    }
    Ok(acc)
}

/// f-vector by the closed-form route:
/// `f(d, k, n) = cyclic_f(d, k+1) + (n - k) * c(d, k)`.
pub fn ordinary_f_closed(d: u32, k: u32, n: u32) -> Result<OffsetVec> {
    expect_odd(d, k)?;
    if n < k {
        return Err(Error::VerticesBelowCharacteristic { k, n });
    }
    let base = cyclic_f(d, k + 1)?;
    let correction = face_correction(d, k)?.scaled(&BigInt::from(n - k));
    base.try_add(&correction)
}

/// f-vector by the bordered-triangle route: extend `v + (n - k)u` (the
/// half-run row plus the scaled correction border) with the nonincreasing
/// tail `(h_{m+1}, ..., h_d)` of the cyclic h-vector.
pub fn ordinary_f_triangle(d: u32, k: u32, n: u32) -> Result<OffsetVec> {
    let m = expect_odd(d, k)?;
    if n < k {
        return Err(Error::VerticesBelowCharacteristic { k, n });
    }
    let u = face_correction_border(d, k)?;
    let v = cyclic_half_f(d, k + 1)?;
    let seed = v.try_add(&u.scaled(&BigInt::from(n - k)))?;
    let h = cyclic_h(d, k + 1)?;
    let tail = h.entries_from(m as i64 + 1)?;
    Ok(pascal_extend(&seed, tail))
}

/// f-vector of the ordinary polytope for validated parameters.
///
/// Even `d`: the polytope is cyclic with `n + 1` vertices, so this is
/// `cyclic_f(d, n+1)` and `k` plays no role. Odd `d`: the triangle route,
/// with a debug-build assertion that the closed form agrees.
pub fn ordinary_f(params: &PolytopeParams) -> Result<OffsetVec> {
    if !params.is_odd() {
        return cyclic_f(params.d, params.vertices());
    }
    let f = ordinary_f_triangle(params.d, params.k, params.n)?;
    debug_assert_eq!(
        f,
        ordinary_f_closed(params.d, params.k, params.n)?,
        "the two f-vector routes disagree at d={} k={} n={}",
        params.d,
        params.k,
        params.n
    );
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqvec::{is_log_concave, is_nonincreasing};
    use crate::transform::binom;

    fn ov(start: i64, e: &[u64]) -> OffsetVec {
        OffsetVec::from_u64s(start, e)
    }

    #[test]
    fn border_golden_values() {
        assert_eq!(face_correction_border(5, 7).unwrap(), ov(-1, &[0, 1, 3]));
        assert_eq!(face_correction_border(5, 5).unwrap(), ov(-1, &[0, 1, 1]));
        assert_eq!(face_correction_border(7, 9).unwrap(), ov(-1, &[0, 1, 4, 6]));
        assert_eq!(face_correction_border(9, 12).unwrap(), ov(-1, &[0, 1, 6, 15, 20]));
    }

    #[test]
    fn correction_golden_values() {
        assert_eq!(face_correction(5, 7).unwrap(), ov(-1, &[0, 1, 6, 12, 10, 3]));
        assert_eq!(face_correction(5, 5).unwrap(), ov(-1, &[0, 1, 4, 6, 4, 1]));
        assert_eq!(face_correction(7, 9).unwrap(), ov(-1, &[0, 1, 8, 28, 52, 53, 28, 6]));
    }

    #[test]
    fn correction_closed_examples() {
        assert_eq!(face_correction_closed(5, 7, 2).unwrap(), BigInt::from(12));
        assert_eq!(face_correction_closed(5, 7, -1).unwrap(), BigInt::ZERO);
        assert_eq!(face_correction_closed(5, 7, 4).unwrap(), BigInt::from(3));
        assert!(matches!(
            face_correction_closed(5, 7, 5),
            Err(Error::FaceIndexOutOfRange { .. })
        ));
        assert!(matches!(
            face_correction_closed(5, 7, -2),
            Err(Error::FaceIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn correction_triangle_equals_closed_form() {
        for d in [5u32, 7, 9, 11] {
            for k in d..=40 {
                let c = face_correction(d, k).unwrap();
                for j in -1..d as i64 {
                    assert_eq!(
                        c.get(j).unwrap(),
                        &face_correction_closed(d, k, j).unwrap(),
                        "d={d} k={k} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_route_golden() {
        assert_eq!(
            ordinary_f_closed(5, 7, 9).unwrap(),
            ov(-1, &[1, 10, 40, 76, 70, 26])
        );
    }

    #[test]
    fn triangle_route_golden() {
        assert_eq!(
            ordinary_f_triangle(5, 7, 9).unwrap(),
            ov(-1, &[1, 10, 40, 76, 70, 26])
        );
        assert_eq!(
            ordinary_f_triangle(5, 7, 7).unwrap(),
            ov(-1, &[1, 8, 28, 52, 50, 20])
        );
        assert_eq!(
            ordinary_f_triangle(7, 9, 11).unwrap(),
            ov(-1, &[1, 12, 61, 176, 309, 328, 196, 52])
        );
    }

    #[test]
    fn n_equals_k_collapses_to_cyclic() {
        for d in [5u32, 7, 9] {
            for k in d..=20 {
                assert_eq!(
                    ordinary_f_closed(d, k, k).unwrap(),
                    cyclic_f(d, k + 1).unwrap()
                );
                assert_eq!(
                    ordinary_f_triangle(d, k, k).unwrap(),
                    cyclic_f(d, k + 1).unwrap()
                );
            }
        }
        // even dimension through the dispatcher
        let p = PolytopeParams::new(6, 9, 9).unwrap();
        assert_eq!(ordinary_f(&p).unwrap(), cyclic_f(6, 10).unwrap());
    }

    #[test]
    fn route_equivalence_small_grid() {
        for d in [5u32, 7] {
            for k in d..=25 {
                for n in k..=25 {
                    assert_eq!(
                        ordinary_f_closed(d, k, n).unwrap(),
                        ordinary_f_triangle(d, k, n).unwrap(),
                        "d={d} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn dispatcher_golden() {
        let p = PolytopeParams::new(5, 7, 9).unwrap();
        assert_eq!(ordinary_f(&p).unwrap(), ov(-1, &[1, 10, 40, 76, 70, 26]));

        let even = PolytopeParams::new(6, 8, 10).unwrap();
        assert_eq!(ordinary_f(&even).unwrap(), cyclic_f(6, 11).unwrap());
        assert_eq!(
            ordinary_f(&even).unwrap(),
            ov(-1, &[1, 11, 55, 165, 275, 231, 77])
        );

        // the 5-simplex
        let simplex = PolytopeParams::new(5, 5, 5).unwrap();
        let f = ordinary_f(&simplex).unwrap();
        for (pos, e) in f.entries().iter().enumerate() {
            assert_eq!(*e, binom(6, pos as i64));
        }
    }

    #[test]
    fn growth_in_n_is_monotone() {
        for d in [5u32, 6, 7] {
            for k in d..=15 {
                let mut prev: Option<OffsetVec> = None;
                for n in k..=25 {
                    let p = PolytopeParams::new(d, k, n).unwrap();
                    let f = ordinary_f(&p).unwrap();
                    if let Some(prev) = prev {
                        for j in 0..d as i64 {
                            assert!(
                                f.get(j).unwrap() >= prev.get(j).unwrap(),
                                "d={d} k={k} n={n} j={j}"
                            );
                        }
                    }
                    prev = Some(f);
                }
            }
        }
    }

    #[test]
    fn border_hypotheses_hold_on_small_grid() {
        for d in [5u32, 7, 9] {
            let m = (d - 1) / 2;
            for k in d..=30 {
                let h = cyclic_h(d, k + 1).unwrap();
                let tail = h.entries_from(m as i64 + 1).unwrap();
                assert!(is_nonincreasing(tail), "tail d={d} k={k}");
                let u = face_correction_border(d, k).unwrap();
                let v = cyclic_half_f(d, k + 1).unwrap();
                for n in k..=30 {
                    let seed = v.try_add(&u.scaled(&BigInt::from(n - k))).unwrap();
                    assert!(is_log_concave(&seed).holds(), "seed d={d} k={k} n={n}");
                    // the seam into the first appended border stays log-concave
                    if seed.len() >= 2 {
                        let lhs = &seed.entries()[seed.len() - 2] * &tail[0];
                        let rhs = seed.last() * seed.last();
                        assert!(lhs <= rhs, "seam d={d} k={k} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            PolytopeParams::new(4, 7, 9),
            Err(Error::TooSmall { name: "d", .. })
        ));
        assert!(matches!(
            PolytopeParams::new(7, 6, 9),
            Err(Error::CharacteristicBelowDimension { .. })
        ));
        assert!(matches!(
            PolytopeParams::new(5, 7, 6),
            Err(Error::VerticesBelowCharacteristic { .. })
        ));
        assert!(matches!(
            PolytopeParams::strict(5, 7, 9),
            Err(Error::StrictRejectsDimensionFive)
        ));
        assert!(PolytopeParams::strict(7, 9, 11).is_ok());
        assert!(PolytopeParams::strict(6, 8, 10).is_ok());

        let lenient = PolytopeParams::new(5, 7, 9).unwrap();
        assert_eq!(lenient.warnings(), vec![ParamWarning::OddDimensionFive]);
        assert!(PolytopeParams::new(7, 9, 11).unwrap().warnings().is_empty());

        assert!(matches!(
            face_correction_border(6, 8),
            Err(Error::NeedOddDimension { d: 6 })
        ));
        assert!(ordinary_f_triangle(5, 7, 6).is_err());
    }
}
