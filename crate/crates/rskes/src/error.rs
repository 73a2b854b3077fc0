//! Error type shared by the whole crate.
//!
//! Decode *failures* (uncorrectable patterns) are not errors: they are
//! reported through [`crate::decoder::DecodeStatus`]. Everything here is a
//! caller mistake or an internal-inconsistency signal.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree m = {0} out of range (2..=16)")]
    BadExtensionDegree(u32),

    #[error("reduction polynomial {0:#x} must have bit m and bit 0 set")]
    BadReductionPoly(u32),

    #[error("no default reduction polynomial for m = {0}")]
    NoDefaultPoly(u32),

    #[error("generator {generator:#x} invalid for poly {poly:#x}: powers do not enumerate all nonzero elements (reducible polynomial or non-primitive generator)")]
    NotPrimitive { poly: u32, generator: u16 },

    #[error("symbol value {0:#x} out of range for the field")]
    SymbolRange(u16),

    #[error("inverse of zero field element")]
    ZeroInverse,

    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    #[error("division by the zero polynomial")]
    ZeroPolyDivisor,

    #[error("block length n = {n} must divide 2^m - 1 = {order}")]
    BadBlockLength { n: usize, order: usize },

    #[error("radius t = {t} invalid for n = {n}: need 1 <= 2t < n")]
    BadRadius { t: usize, n: usize },

    #[error("message has {got} symbols, expected {expected}")]
    MessageLength { expected: usize, got: usize },

    #[error("received word must have degree below n = {0}")]
    ReceivedTooLong(usize),

    #[error("syndrome polynomial must have degree below 2t = {0}")]
    SyndromeTooLong(usize),

    #[error("position {pos} out of range [0, {n})")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("duplicate errata position {0}")]
    DuplicatePosition(usize),

    #[error("error value at position {0} must be nonzero")]
    ZeroErrorValue(usize),

    #[error("erasure location must be a nonzero field element")]
    ZeroErasureLocation,

    #[error("duplicate erasure location {0:#x}")]
    DuplicateErasureLocation(u16),

    #[error("{mu} erasures exceed the 2t = {budget} budget")]
    TooManyErasures { mu: usize, budget: usize },

    #[error("erasures are not supported by an errors-only solver")]
    ErasuresNotSupported,

    #[error("key equation solver already completed its 2t iterations")]
    KesFinished,

    #[error("solver registers violate the expected output layout: {0}")]
    LayoutViolation(&'static str),

    #[error("zero denominator in the errata-value formula")]
    ZeroDenominator,

    #[error("brute-force search space of {0} codewords exceeds the guard")]
    BruteForceGuard(u128),
}
