//! Exact combinatorics of standard Young tableaux: jeu-de-taquin promotion
//! and evacuation (and their duals), the staircase-to-rectangle embedding,
//! extended descent vectors, and cyclic-sieving verification over
//! `Z[q]/(q^N - 1)`.
//!
//! All arithmetic is exact integer arithmetic; there is no floating point
//! anywhere in this crate.

pub mod csp;
pub mod descent;
pub mod dynamics;
pub mod embedding;
pub mod rsk;
pub mod shape;
pub mod tableau;
pub mod verify;

pub use shape::{Partition, ShapeClass};
pub use tableau::Tableau;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed shape: {0}")]
    MalformedShape(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("ragged or invalid shape: {0}")]
    RaggedShape(String),
    #[error("duplicate entry {0}")]
    DuplicateEntry(u32),
    #[error("entries are not exactly 1..{expected}: {detail}")]
    WrongEntrySet { expected: u32, detail: String },
    #[error("row violation: entry {0} is not strictly greater than its left neighbor")]
    RowViolation(u32),
    #[error("column violation: entry {0} is not strictly greater than the entry above")]
    ColumnViolation(u32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("enumeration limit exceeded: {count} tableaux > limit {limit}")]
    EnumerationLimit { count: u128, limit: u128 },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
