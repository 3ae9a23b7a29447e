use alloc::string::String;
use core::fmt;

/// Errors produced by every fallible operation in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation (branch cut,
    /// validity zone, non-positive log-gamma argument, ...).
    Domain(String),
    /// Relative error against an exact value of zero, or a division by zero.
    DivisionByZero,
    /// The ratio `w_k` vanished: the evaluation point is a zero of `pi_k`.
    ZeroRatio { k: usize },
    /// Quadrature did not settle within the allowed number of panel doublings.
    NonConvergence { doublings: u32 },
    /// Double-run agreement was not reached before the precision cap.
    PrecisionExhausted { max_bits: u32 },
    /// Zero isolation lost a bracket; indicates a bug, not bad input.
    BracketFailure(String),
    /// A sweep had too few usable points to fit an order.
    InsufficientData { usable: usize },
    /// A value left the representable exponent range.
    Overflow,
    /// Malformed input (parse failure, unsorted grids, bad precision).
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for failures caused by the numerics rather than by the caller.
    pub fn is_numerical_failure(&self) -> bool {
        matches!(
            self,
            Error::PrecisionExhausted { .. }
                | Error::NonConvergence { .. }
                | Error::Overflow
                | Error::BracketFailure(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ZeroRatio { k } => {
                write!(f, "ratio w_{k} vanished: point is a zero of pi_{k}")
            }
            Error::NonConvergence { doublings } => {
                write!(
                    f,
                    "quadrature did not converge after {doublings} panel doublings"
                )
            }
            Error::PrecisionExhausted { max_bits } => {
                write!(
                    f,
                    "results did not agree before reaching the {max_bits}-bit precision cap"
                )
            }
            Error::BracketFailure(msg) => write!(f, "zero bracket lost: {msg}"),
            Error::InsufficientData { usable } => {
                write!(f, "only {usable} usable points (need at least 3)")
            }
            Error::Overflow => f.write_str("exponent overflow"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
