//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by parsing, validation and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed monomial text or ideal document. `pos` is a byte offset
    /// into the offending input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A variable index fell outside the ambient ring `[1, n]`.
    #[error("variable index {index} outside [1, {n}]")]
    IndexOutOfRange { index: u32, n: u32 },

    /// A spread vector needs at least one entry.
    #[error("spread vector must have at least one entry")]
    EmptySpread,

    /// The shifting maps are only defined for degrees up to the spread arity.
    #[error("degree {degree} exceeds spread arity {arity}")]
    DegreeExceedsArity { degree: usize, arity: usize },

    /// An operation required a t-spread monomial and got something else.
    #[error("monomial {monomial} is not {spread}-spread")]
    NotSpread { monomial: String, spread: String },

    /// An operation required a t-spread strongly stable ideal. The message
    /// names the escaping exchange.
    #[error("ideal is not t-spread strongly stable: {witness}")]
    NotStronglyStable { witness: String },

    /// Membership precondition failed.
    #[error("monomial {monomial} does not belong to the ideal")]
    NotMember { monomial: String },

    /// Invariants of the zero ideal are undefined.
    #[error("invariant undefined for the zero ideal")]
    ZeroIdeal,

    /// Invariants of the unit ideal (a degree-0 generator) are undefined.
    #[error("invariant undefined for the unit ideal")]
    UnitIdeal,

    /// Colon quotients are indexed by the second generator onwards.
    #[error("colon index k={k} outside 2..={m}")]
    ColonIndex { k: usize, m: usize },

    /// An argument outside an operation's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The brute-force oracle refuses inputs past its subset-enumeration cap.
    #[error("generator count {count} exceeds oracle cap {cap}")]
    GeneratorCap { count: usize, cap: usize },

    /// Two supposedly-equal computation routes disagreed. This indicates a
    /// bug, never a property of the input.
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
