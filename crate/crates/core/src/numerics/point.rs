use super::complex::ApComplex;
use super::precision::Precision;
use super::real::{parse_rational, ApReal};
use crate::error::{Error, Result};
use alloc::format;
use core::fmt;
use core::str::FromStr;
use num_rational::BigRational;
use num_traits::Zero;

/// A complex point with exact rational parts, as typed by the user.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub re: BigRational,
    pub im: BigRational,
}

impl Point {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Point { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Point {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_complex(&self, prec: Precision) -> ApComplex {
        ApComplex::new(
            ApReal::from_ratio(&self.re, prec),
            ApReal::from_ratio(&self.im, prec),
        )
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let p = Precision::clamped(64);
        (
            ApReal::from_ratio(&self.re, p).to_f64(),
            ApReal::from_ratio(&self.im, p).to_f64(),
        )
    }
}

/// Parses `"re,im"`, two decimal literals separated by a comma.
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| Error::invalid(format!("point {s:?} is not of the form re,im")))?;
        Ok(Point {
            re: parse_rational(re.trim())?,
            im: parse_rational(im.trim())?,
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn parses_pairs() {
        let p: Point = "0.25,0".parse().unwrap();
        assert_eq!(p.re, BigRational::new(BigInt::from(1), BigInt::from(4)));
        assert!(p.is_real());
        let q: Point = "-1.5, 2e-1".parse().unwrap();
        assert_eq!(q.to_f64_pair(), (-1.5, 0.2));
        assert!("1.0".parse::<Point>().is_err());
        assert!("a,b".parse::<Point>().is_err());
    }
}
