//! h- and f-vectors of cyclic polytopes.
//!
//! The public parameter is always the vertex count, never the "one less"
//! convention used for ordinary-polytope parameters; the conversion happens
//! in exactly one place ([`CyclicParams::upper_index`]).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::seqvec::{pascal_run, OffsetVec};
use crate::transform::binom;

/// Parameters of the cyclic polytope `C(vertices, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicParams {
    d: u32,
    vertices: u32,
}

impl CyclicParams {
    pub fn new(d: u32, vertices: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::TooSmall {
                name: "d",
                min: 2,
                found: d as u64,
            });
        }
        if vertices <= d {
            return Err(Error::TooFewVertices { d, vertices });
        }
        Ok(Self { d, vertices })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn vertices(&self) -> u32 {
        self.vertices
    }

    /// The classical parameter: vertex count minus one.
    fn upper_index(&self) -> u64 {
        (self.vertices - 1) as u64
    }
}

/// h-vector of `C(vertices, d)`, `d + 1` entries starting at index 0:
/// `h_i = C(n - d + i, i)` up to the middle (`n = vertices - 1`), mirrored
/// beyond it (the Dehn-Sommerville palindrome, built in by construction).
pub fn cyclic_h(d: u32, vertices: u32) -> Result<OffsetVec> {
    let p = CyclicParams::new(d, vertices)?;
    let n = p.upper_index();
    let d = d as usize;
    let mut h: Vec<BigInt> = (0..=d / 2)
        .map(|i| binom(n - d as u64 + i as u64, i as i64))
        .collect();
    for i in d / 2 + 1..=d {
        h.push(h[d - i].clone());
    }
    OffsetVec::new(0, h)
}

/// f-vector of `C(vertices, d)`: the triangle run of [`cyclic_h`].
/// `d + 1` entries `f_{-1}..f_{d-1}`, with `f_{-1} = 1` and
/// `f_0 = vertices`.
pub fn cyclic_f(d: u32, vertices: u32) -> Result<OffsetVec> {
    Ok(pascal_run(&cyclic_h(d, vertices)?))
}

/// Odd dimension only: the row reached after running the first half
/// `(h_0..h_m)` of the h-vector, `m = (d-1)/2`. In closed form the entries
/// are `C(n - m, i + 1)` for `i = -1..m-1` with `n = vertices - 1`;
/// equality with the triangle route is enforced by tests over a wide grid.
pub fn cyclic_half_f(d: u32, vertices: u32) -> Result<OffsetVec> {
    if d % 2 == 0 {
        return Err(Error::NeedOddDimension { d });
    }
    let p = CyclicParams::new(d, vertices)?;
    let n = p.upper_index();
    let m = ((d - 1) / 2) as u64;
    let entries = (-1..m as i64).map(|i| binom(n - m, i + 1)).collect();
    OffsetVec::new(-1, entries)
}
