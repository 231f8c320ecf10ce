//! Independent ground truth: enumerate the facets of a cyclic polytope by
//! Gale's evenness condition and count every face by brute force.
//!
//! Nothing here shares code with the formula modules; agreement between
//! this census and [`crate::cyclic::cyclic_f`] is the strongest check the
//! crate has.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::seqvec::OffsetVec;

/// Hard cap on the vertex count for exhaustive enumeration. `C(16, 8)` is
/// 12870 candidate subsets and at most `2^16` face keys.
pub const VERTEX_CAP: u32 = 16;

/// All facets of `C(vertices, d)`: the d-subsets of `{1..vertices}`
/// passing the evenness filter, in lexicographic order, each sorted
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSet {
    vertices: u32,
    dim: u32,
    facets: Vec<Vec<u32>>,
}

impl FacetSet {
    pub fn vertices(&self) -> u32 {
        self.vertices
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// How many facets each vertex `1..=vertices` lies in.
    pub fn vertex_incidence(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.vertices as usize];
        for facet in &self.facets {
            for &v in facet {
                counts[v as usize - 1] += 1;
            }
        }
        counts
    }

    /// Newline-delimited sorted integer tuples, the golden-file format.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for facet in &self.facets {
            let row: Vec<String> = facet.iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Face counts from explicit facet enumeration: `counts` starts at `-1`
/// with `d + 1` entries and `counts[-1] = 1` for the improper face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCensus {
    counts: OffsetVec,
}

impl FaceCensus {
    pub fn counts(&self) -> &OffsetVec {
        &self.counts
    }

    pub fn into_counts(self) -> OffsetVec {
        self.counts
    }
}

fn check_range(vertices: u32, d: u32) -> Result<()> {
    if d < 2 || d >= vertices {
        return Err(Error::BadEnumerationDimension { d, vertices });
    }
    if vertices > VERTEX_CAP {
        return Err(Error::VertexCapExceeded {
            vertices,
            cap: VERTEX_CAP,
        });
    }
    Ok(())
}

/// Gale evenness: a d-subset S is a facet iff every two vertices outside S
/// are separated by evenly many members of S. Checking adjacent outside
/// pairs suffices because between-counts add up across them.
fn is_gale_facet(members: u32, vertices: u32) -> bool {
    let mut run = 0u32; // members of S since the previous outside vertex
    let mut seen_outside = false;
    for v in 0..vertices {
        if members & (1 << v) != 0 {
            run += 1;
        } else {
            if seen_outside && run % 2 == 1 {
                return false;
            }
            seen_outside = true;
            run = 0;
        }
    }
    true
}

/// Enumerate all `C(vertices, d)` candidate subsets and keep the facets.
pub fn gale_facets(vertices: u32, d: u32) -> Result<FacetSet> {
    check_range(vertices, d)?;
    let mut facets = Vec::new();
    // lexicographic combination walk over {1..vertices}
    let mut current: Vec<u32> = (1..=d).collect();
    loop {
        let mask = current.iter().fold(0u32, |m, &v| m | 1 << (v - 1));
        if is_gale_facet(mask, vertices) {
            facets.push(current.clone());
        }
        // advance to the next combination
        let mut i = d as usize;
        loop {
            if i == 0 {
                return Ok(FacetSet {
                    vertices,
                    dim: d,
                    facets,
                });
            }
            i -= 1;
            if current[i] < vertices - (d - 1 - i as u32) {
                current[i] += 1;
                for j in i + 1..d as usize {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Count every face: a subset is a face iff it lies inside some facet
/// (cyclic polytopes are simplicial). Subsets are deduplicated across
/// facets by bitmask.
pub fn gale_face_census(vertices: u32, d: u32) -> Result<FaceCensus> {
    let facet_set = gale_facets(vertices, d)?;
    let mut seen: HashSet<u32> = HashSet::new();
    for facet in facet_set.facets() {
        let mask = facet.iter().fold(0u32, |m, &v| m | 1 << (v - 1));
        // walk all nonempty submasks of the facet
        let mut sub = mask;
        loop {
            seen.insert(sub);
            sub = (sub - 1) & mask;
            if sub == 0 {
                break;
            }
        }
    }
    let mut by_size = vec![0u64; d as usize];
    for mask in &seen {
        by_size[mask.count_ones() as usize - 1] += 1;
    }
    let mut entries = Vec::with_capacity(d as usize + 1);
    entries.push(BigInt::from(1u32)); // the improper face
    entries.extend(by_size.iter().map(|&c| BigInt::from(c)));

    let counts = OffsetVec::new(-1, entries)?;
    let census = FaceCensus { counts };
    census.assert_invariants(vertices, d, facet_set.len());
    Ok(census)
}

impl FaceCensus {
    /// Structural invariants plus Euler's relation
    /// (`sum_j (-1)^j f_j = 1 - (-1)^d` over the proper faces); violations
    /// are bugs, not data.
    fn assert_invariants(&self, vertices: u32, d: u32, facet_count: usize) {
        let c = &self.counts;
        assert_eq!(c.get(0).unwrap(), &BigInt::from(vertices));
        assert_eq!(c.get(d as i64 - 1).unwrap(), &BigInt::from(facet_count));
        assert!(c.entries().iter().all(|e| e > &BigInt::ZERO));
        let mut euler = BigInt::ZERO;
        for j in 0..d as i64 {
            if j % 2 == 0 {
                euler += c.get(j).unwrap();
            } else {
                euler -= c.get(j).unwrap();
            }
        }
        let expected = if d % 2 == 0 { 0 } else { 2 };
        assert_eq!(
            euler,
            BigInt::from(expected),
            "Euler relation failed for V={vertices} d={d}"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::cyclic_f;
    use crate::transform::binom;

    #[test]
    fn facet_counts_match_known_values() {
        assert_eq!(gale_facets(8, 5).unwrap().len(), 20);
        assert_eq!(gale_facets(6, 3).unwrap().len(), 8);
        // the simplex: every d-subset of d+1 vertices
        for d in 2u32..=9 {
            assert_eq!(gale_facets(d + 1, d).unwrap().len(), d as usize + 1);
        }
    }

    #[test]
    fn facets_are_sorted_unique_d_subsets() {
        let fs = gale_facets(9, 4).unwrap();
        let mut seen = HashSet::new();
        for f in fs.facets() {
            assert_eq!(f.len(), 4);
            assert!(f.windows(2).all(|w| w[0] < w[1]));
            assert!(f.iter().all(|&v| (1..=9).contains(&v)));
            assert!(seen.insert(f.clone()));
        }
        // lexicographic emission order
        let mut sorted = fs.facets().to_vec();
        sorted.sort();
        assert_eq!(sorted, fs.facets());
    }

    #[test]
    fn census_golden_values() {
        let c = gale_face_census(8, 5).unwrap();
        assert_eq!(c.counts(), &OffsetVec::from_u64s(-1, &[1, 8, 28, 52, 50, 20]));
        let c = gale_face_census(7, 4).unwrap();
        assert_eq!(c.counts(), &OffsetVec::from_u64s(-1, &[1, 7, 21, 28, 14]));
        let c = gale_face_census(6, 3).unwrap();
        assert_eq!(c.counts(), &OffsetVec::from_u64s(-1, &[1, 6, 12, 8]));
    }

    #[test]
    fn simplex_census_is_binomial_row() {
        for d in 2u32..=9 {
            let c = gale_face_census(d + 1, d).unwrap();
            for j in -1..d as i64 {
                assert_eq!(c.counts().get(j).unwrap(), &binom(d as u64 + 1, j + 1));
            }
        }
    }

    #[test]
    fn census_agrees_with_formula_spot_checks() {
        for (v, d) in [(9, 5), (10, 6), (11, 4), (12, 3), (13, 7)] {
            assert_eq!(
                gale_face_census(v, d).unwrap().into_counts(),
                cyclic_f(d, v).unwrap(),
                "V={v} d={d}"
            );
        }
    }

    #[test]
    fn neighborliness_up_to_half_dimension() {
        for d in 3u32..=9 {
            for v in d + 1..=12 {
                let c = gale_face_census(v, d).unwrap();
                for j in 0..d as i64 {
                    let cap = binom(v as u64, j + 1);
                    assert!(c.counts().get(j).unwrap() <= &cap);
                    if j + 1 <= (d / 2) as i64 {
                        assert_eq!(c.counts().get(j).unwrap(), &cap, "V={v} d={d} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn incidence_profile_even_constant_odd_palindromic() {
        // even dimension: the evenness condition is cyclically symmetric,
        // every vertex lies in the same number of facets; odd dimension is
        // only reflection-symmetric (and genuinely irregular beyond the
        // simplex, e.g. profile 4,3,4,3,4 for V=5, d=3)
        for d in 2u32..=9 {
            for v in d + 2..=13 {
                let prof = gale_facets(v, d).unwrap().vertex_incidence();
                let mut rev = prof.clone();
                rev.reverse();
                assert_eq!(prof, rev, "profile not palindromic V={v} d={d}");
                if d % 2 == 0 {
                    assert!(
                        prof.windows(2).all(|w| w[0] == w[1]),
                        "even-d profile not constant V={v} d={d}: {prof:?}"
                    );
                }
            }
        }
        let prof = gale_facets(5, 3).unwrap().vertex_incidence();
        assert_eq!(prof, vec![4, 3, 4, 3, 4]);
    }

    #[test]
    fn range_guards() {
        assert!(matches!(
            gale_facets(20, 5),
            Err(Error::VertexCapExceeded { vertices: 20, .. })
        ));
        assert!(matches!(
            gale_facets(5, 1),
            Err(Error::BadEnumerationDimension { .. })
        ));
        assert!(matches!(
            gale_facets(5, 5),
            Err(Error::BadEnumerationDimension { .. })
        ));
        // the cap itself is fine
        assert!(gale_facets(16, 3).is_ok());
    }

    #[test]
    fn golden_file_format() {
        let fs = gale_facets(5, 3).unwrap();
        let lines = fs.to_lines();
        assert!(lines.starts_with("1 2 3\n"));
        assert_eq!(lines.lines().count(), fs.len());
        assert!(lines.ends_with('\n'));
    }
}
