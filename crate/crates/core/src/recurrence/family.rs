use crate::error::{Error, Result};
use alloc::format;
use core::fmt;
use core::str::FromStr;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// The three monic families, each fixed by its recurrence coefficients.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `a_n = 0`, `b_n = n^2 / (4n^2 - 1)`
    Legendre,
    /// `a_n = 0`, `b_n = n / 2`
    Hermite,
    /// `a_n = n^2`, `b_n = 1 / 4`
    Ismail,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Legendre, Family::Hermite, Family::Ismail];

    pub fn a(self, n: u64) -> BigRational {
        match self {
            Family::Legendre | Family::Hermite => BigRational::zero(),
            Family::Ismail => BigRational::from_integer(BigInt::from(n) * BigInt::from(n)),
        }
    }

    /// `b_n` for `n >= 1`.
    pub fn b(self, n: u64) -> BigRational {
        debug_assert!(n >= 1);
        let n = BigInt::from(n);
        match self {
            Family::Legendre => {
                let n2 = &n * &n;
                BigRational::new(n2.clone(), n2 * 4 - 1)
            }
            Family::Hermite => BigRational::new(n, BigInt::from(2)),
            Family::Ismail => BigRational::new(BigInt::from(1), BigInt::from(4)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Legendre => "legendre",
            Family::Hermite => "hermite",
            Family::Ismail => "ismail",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "legendre" => Ok(Family::Legendre),
            "hermite" => Ok(Family::Hermite),
            "ismail" => Ok(Family::Ismail),
            _ => Err(Error::invalid(format!("unknown family {s:?}"))),
        }
    }
}
