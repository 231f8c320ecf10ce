//! Exact face-vector combinatorics of cyclic and ordinary polytopes.
//!
//! Everything is arbitrary-precision integer arithmetic: h- and f-vectors
//! come out of bordered Pascal triangles ([`seqvec`]), the linear
//! conversions and binomials live in [`transform`], the closed forms for
//! cyclic and ordinary polytopes in [`cyclic`] and [`ordinary`], and an
//! independent brute-force face census ([`oracle`]) cross-checks the
//! formulas. Log-concavity and unimodality are decided by exact
//! cross-multiplication, so verdicts carry reproducible integer witnesses
//! instead of tolerances.
//!
//! ```
//! use facevec::{ordinary_f, is_log_concave, PolytopeParams};
//!
//! let params = PolytopeParams::new(5, 7, 9)?;
//! let f = ordinary_f(&params)?;
//! assert_eq!(f.to_decimal_strings(), ["1", "10", "40", "76", "70", "26"]);
//! assert!(is_log_concave(&f).holds());
//! # Ok::<(), facevec::Error>(())
//! ```

pub mod cyclic;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod ordinary;
pub mod seqvec;
pub mod transform;

pub use cyclic::{cyclic_f, cyclic_h, cyclic_half_f, CyclicParams};
pub use error::{Error, Result};
pub use oracle::{gale_face_census, gale_facets, FaceCensus, FacetSet, VERTEX_CAP};
pub use ordinary::{
    face_correction, face_correction_border, face_correction_closed, ordinary_f,
    ordinary_f_closed, ordinary_f_triangle, ParamWarning, PolytopeParams,
};
pub use seqvec::{
    is_log_concave, is_nonincreasing, is_positive, is_unimodal, pascal_extend,
    pascal_extend_traced, pascal_run, pascal_run_traced, pascal_step, CheckResult, OffsetVec,
    TriangleTrace, Witness,
};
pub use transform::{binom, f_to_h, h_to_f, mixed_binomial_seq, HVector};
