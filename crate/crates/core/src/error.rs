use thiserror::Error;

/// Errors surfaced by the library. Counting operations never fail on
/// out-of-range targets; they return zero instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration would produce more than {cap} witnesses")]
    CapExceeded { cap: usize },

    #[error("enumeration too large: series length {len} exceeds limit {limit}")]
    EnumerationTooLarge { len: u64, limit: u64 },

    #[error("no witness exists for j = {j}, k = {k}")]
    NoWitness { j: u64, k: u64 },

    #[error("empty sequence")]
    EmptySequence,

    #[error("Rascal rule is not integral at row {row}, entry {entry}")]
    IntegralityViolation { row: usize, entry: usize },

    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },

    #[error("precision exhausted at {bits} bits")]
    PrecisionExhausted { bits: usize },

    #[error("prefix sum {sum} exceeds the configured bound {bound}")]
    PrefixSumTooLarge { sum: u128, bound: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
