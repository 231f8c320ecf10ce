use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by construction, indexed access and parameter validation.
///
/// Everything in this crate is exact; there are no tolerance or overflow
/// errors, only structural ones.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence needs at least one entry")]
    EmptySequence,

    #[error("negative entry {value} at position {position}")]
    NegativeEntry { position: usize, value: BigInt },

    #[error("index {index} outside [{start}, {end})")]
    IndexOutOfRange { index: i64, start: i64, end: i64 },

    #[error("start index {found}, expected {expected}")]
    WrongStart { expected: i64, found: i64 },

    #[error("length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },

    #[error("start indices differ: {left} vs {right}")]
    StartMismatch { left: i64, right: i64 },

    #[error("lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{name} must be at least {min}, got {found}")]
    TooSmall {
        name: &'static str,
        min: u64,
        found: u64,
    },

    #[error("dimension must be odd, got {d}")]
    NeedOddDimension { d: u32 },

    #[error("need at least {} vertices in dimension {d}, got {vertices}", d + 1)]
    TooFewVertices { d: u32, vertices: u32 },

    #[error("characteristic k={k} below dimension d={d}")]
    CharacteristicBelowDimension { d: u32, k: u32 },

    #[error("vertex parameter n={n} below characteristic k={k}")]
    VerticesBelowCharacteristic { k: u32, n: u32 },

    #[error("strict mode rejects d=5 for the odd-dimension closed form (stated for d>5)")]
    StrictRejectsDimensionFive,

    #[error("face index {j} outside [-1, {}]", *d as i64 - 1)]
    FaceIndexOutOfRange { j: i64, d: u32 },

    #[error("vertex count {vertices} exceeds enumeration cap {cap}")]
    VertexCapExceeded { vertices: u32, cap: u32 },

    #[error("facet enumeration needs 2 <= d < vertices, got d={d}, vertices={vertices}")]
    BadEnumerationDimension { d: u32, vertices: u32 },
}
