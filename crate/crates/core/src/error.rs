use core::fmt;

/// Errors raised by ring arithmetic and the matrix algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An exact division left a nonzero remainder.
    InexactDivision,
    /// Division by zero (or by a non-unit where a unit was required).
    DivisionByZero,
    /// The ring cannot divide exactly by `divisor`, which the
    /// trace-based algorithms need for every divisor up to `n`.
    Characteristic { divisor: u64, characteristic: u64 },
    /// Operands live in different rings.
    RingMismatch,
    /// Operand dimensions disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// An entry is not in canonical form for the matrix ring.
    NotAnElement { row: usize, col: usize },
    /// Modulus below 2.
    InvalidModulus(u64),
    /// Block size for the baby-step giant-step loop out of `1..=n`.
    InvalidBlockSize { m: usize, n: usize },
    /// The cofactor oracle refuses inputs above its size limit.
    OracleTooLarge { n: usize, limit: usize },
    /// The algorithm needs more structure than the ring provides.
    UnsupportedRing {
        algorithm: &'static str,
        requires: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InexactDivision => write!(f, "inexact division: nonzero remainder"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Characteristic { divisor, characteristic } => write!(
                f,
                "characteristic error: cannot divide exactly by {divisor} in a ring of characteristic {characteristic}"
            ),
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotAnElement { row, col } => {
                write!(f, "entry ({row}, {col}) is not a canonical element of the ring")
            }
            Error::InvalidModulus(m) => write!(f, "modulus must be at least 2, got {m}"),
            Error::InvalidBlockSize { m, n } => {
                write!(f, "block size m = {m} must satisfy 1 <= m <= n = {n}")
            }
            Error::OracleTooLarge { n, limit } => {
                write!(f, "cofactor oracle limited to n <= {limit}, got n = {n}")
            }
            Error::UnsupportedRing { algorithm, requires } => {
                write!(f, "{algorithm} requires {requires}")
            }
        }
    }
}

impl core::error::Error for Error {}
pub type Result<T> = core::result::Result<T, Error>;
