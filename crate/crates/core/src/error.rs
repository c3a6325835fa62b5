use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("{len} entries cannot fill a {rows}x{cols} matrix")]
    EntryCount {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("{op}: expected {expected}, got {found}")]
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("{op}: argument list is empty")]
    EmptyArgument { op: &'static str },

    #[error(
        "enumerating the full square submatrices of a {rows}x{cols} matrix visits {count} \
         submatrices, above the cap of {cap}"
    )]
    EnumerationCap {
        rows: usize,
        cols: usize,
        count: String,
        cap: u64,
    },

    #[error("Bezout coefficients do not combine the minors to {expected}: got {found}")]
    BezoutMismatch { expected: BigInt, found: BigInt },

    #[error("{op}: input exceeds the brute-force guard ({limit})")]
    Guard { op: &'static str, limit: String },

    #[error("an algebra needs at least one block")]
    EmptyAlgebra,

    #[error("block {index} has size zero")]
    ZeroBlock { index: usize },

    #[error("multiplicity at ({row}, {col}) is negative: {value}")]
    NegativeEntry {
        row: usize,
        col: usize,
        value: BigInt,
    },

    #[error(
        "infeasible multiplicities: target block {row} needs {required} but has size {available}"
    )]
    Infeasible {
        row: usize,
        required: BigInt,
        available: BigInt,
    },

    #[error("cannot compose: source of the outer map {outer:?} differs from target of the inner map {inner:?}")]
    CompositionMismatch { inner: Vec<u64>, outer: Vec<u64> },

    #[error("the zero homomorphism has no gcd conditions")]
    ZeroHomomorphism,

    #[error("row {row} is not a standard basis pattern")]
    RowPattern { row: usize },
}
