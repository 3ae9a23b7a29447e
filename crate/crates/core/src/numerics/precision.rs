use crate::error::{Error, Result};
use alloc::format;

/// Default precision cap for escalation.
pub const DEFAULT_MAX_BITS: u32 = 8192;

/// Extra bits used by the second run of the double-run policy.
pub const DOUBLE_RUN_EXTRA_BITS: u32 = 64;

/// Binary digits carried in a significand. Never below 53.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 53;

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::invalid(format!(
                "precision {bits} below the {} bit minimum",
                Self::MIN_BITS
            )));
        }
        Ok(Precision(bits))
    }

    /// Infallible constructor that clamps to the minimum.
    pub fn clamped(bits: u32) -> Self {
        Precision(bits.max(Self::MIN_BITS))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn plus(self, extra: u32) -> Self {
        Precision(self.0 + extra)
    }

    pub fn max(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(256)
    }
}

/// Values that can be compared across two runs at different precisions.
pub trait Agree {
    /// True when `self` and `other` agree to relative error `2^tol_log2`.
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool;
}

impl<T: Agree> Agree for alloc::vec::Vec<T> {
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.agrees(b, tol_log2))
    }
}

impl<A: Agree, B: Agree> Agree for (A, B) {
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool {
        self.0.agrees(&other.0, tol_log2) && self.1.agrees(&other.1, tol_log2)
    }
}

/// Run-at-two-precisions policy.
///
/// Every floating evaluation runs at `p` and `p + 64` bits. The results must
/// agree to relative error `2^(16-p)`; otherwise `p` doubles until the cap.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start: Precision,
    pub max_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            start: Precision::default(),
            max_bits: DEFAULT_MAX_BITS,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(start: Precision, max_bits: u32) -> Self {
        PrecisionPolicy { start, max_bits }
    }

    pub fn with_start(self, start: Precision) -> Self {
        PrecisionPolicy { start, ..self }
    }

    /// Evaluates `f` under the double-run policy and returns the result of
    /// the lower-precision run together with the precision it used.
    pub fn run<T, F>(&self, mut f: F) -> Result<(T, Precision)>
    where
        T: Agree,
        F: FnMut(Precision) -> Result<T>,
    {
        let mut prec = self.start;
        loop {
            let hi = prec.plus(DOUBLE_RUN_EXTRA_BITS);
            if hi.bits()
                > self
                    .max_bits
                    .max(Precision::MIN_BITS + DOUBLE_RUN_EXTRA_BITS)
            {
                return Err(Error::PrecisionExhausted {
                    max_bits: self.max_bits,
                });
            }
            let a = f(prec)?;
            let b = f(hi)?;
            if a.agrees(&b, 16 - i64::from(prec.bits())) {
                return Ok((a, prec));
            }
            prec = Precision(prec.bits() * 2);
        }
    }
}
