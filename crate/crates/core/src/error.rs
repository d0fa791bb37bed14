use alloc::string::String;

use num_bigint::BigUint;

use crate::record::Method;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("coloring has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("color {color} at vertex {vertex} is outside [0, {q})")]
    ColorOutOfRange { vertex: usize, color: u32, q: u32 },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} exceeds limit: {size} > {limit}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("{method} is undefined for n = {n}: {reason}; use {suggested}")]
    Threshold {
        method: Method,
        n: usize,
        reason: &'static str,
        suggested: Method,
    },

    #[error("{method} requires {requirement}; use {suggested}")]
    Unsupported {
        method: Method,
        requirement: &'static str,
        suggested: Method,
    },

    #[error("index {index} out of range: only {total} proper colorings exist")]
    IndexOutOfRange { index: BigUint, total: BigUint },

    #[error("expected a monic polynomial")]
    NotMonic,

    #[error("sequence of length {len} is too short for a recurrence of order {order}")]
    InsufficientLength { len: usize, order: usize },

    #[error("inclusion-exclusion precondition failed: |A_{i} ∩ A_{j}| = {size}")]
    OverlappingEvents { i: usize, j: usize, size: u64 },
}
