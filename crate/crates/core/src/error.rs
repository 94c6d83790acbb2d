//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by diagram, decomposition, fan and cohomology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A degree sequence (or root sequence candidate) is not strictly monotone.
    #[error("sequence is not strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),

    /// A root sequence is not strictly decreasing.
    #[error("sequence is not strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<i64>),

    /// Window bounds disagree in length or violate `a <= b`.
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// A column below the top nonzero column of a diagram is entirely zero.
    #[error("column {0} is entirely zero below the top nonzero column")]
    ZeroColumnGap(usize),

    /// A pure diagram has support where the target diagram is zero.
    #[error("pure diagram entry at column {col}, degree {degree} has no matching entry")]
    MismatchedSupport { col: usize, degree: i64 },

    /// The diagram left the cone during greedy decomposition.
    #[error("NOT_IN_CONE {0}")]
    NotInCone(String),

    /// The oracle's chain enumeration exceeded its configured cap.
    #[error("window has more than {cap} maximal chains ({count})")]
    WindowTooLarge { cap: u64, count: u64 },

    /// The degree sequence and column index do not form a type-3 facet pattern.
    #[error("invalid facet: {0}")]
    InvalidFacet(String),

    /// A diagram has support outside the window of a coefficient diagram.
    #[error("diagram entry at column {col}, degree {degree} lies outside the window")]
    SupportOutsideWindow { col: usize, degree: i64 },

    /// A cohomology table does not cover the twists a pairing needs.
    #[error("table range does not cover twist {0}")]
    InsufficientTableRange(i64),

    /// A table row is still nonzero at the top of the declared range, so its
    /// vanishing cannot be witnessed.
    #[error("row {0} is nonzero at the top of the declared twist range")]
    TruncatedTable(usize),

    /// A corner position falls outside the declared twist range.
    #[error("corner position (row {row}, twist {twist}) is outside the declared range")]
    RangeTooSmall { row: usize, twist: i64 },

    /// Three root sequences do not form the one-position consecutive pattern.
    #[error("invalid root triple: {0}")]
    InvalidPattern(String),

    /// A partition has more nonzero parts than the dimension allows.
    #[error("partition has {parts} nonzero parts, more than n = {n}")]
    TooManyParts { parts: usize, n: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
