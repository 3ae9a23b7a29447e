use crate::error::{Error, Result};
use crate::recurrence::Family;
use alloc::format;
use core::fmt;
use core::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// Away from the interval of oscillation.
    Outer,
    /// A thin complex neighbourhood of the interior of that interval.
    Oscillatory,
}

impl Region {
    pub const ALL: [Region; 2] = [Region::Outer, Region::Oscillatory];

    pub fn name(self) -> &'static str {
        match self {
            Region::Outer => "outer",
            Region::Oscillatory => "oscillatory",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outer" => Ok(Region::Outer),
            "oscillatory" => Ok(Region::Oscillatory),
            _ => Err(Error::invalid(format!("unknown region {s:?}"))),
        }
    }
}

/// Validity zones. The outer formulas need distance at least `delta_min`
/// from the oscillation interval; the oscillatory ones need distance at
/// most `rho` from the interval shrunk by `delta` at both ends.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Zones {
    pub delta_min: f64,
    pub delta: f64,
    pub rho: f64,
}

impl Default for Zones {
    fn default() -> Self {
        Zones {
            delta_min: 0.05,
            delta: 0.1,
            rho: 0.1,
        }
    }
}

/// Interval of oscillation in the variable the approximants use.
pub fn oscillation_interval(family: Family) -> (f64, f64) {
    match family {
        Family::Legendre | Family::Hermite => (-1.0, 1.0),
        Family::Ismail => (0.0, 1.0),
    }
}

fn distance(re: f64, im: f64, lo: f64, hi: f64) -> f64 {
    let dx = if re < lo {
        lo - re
    } else if re > hi {
        re - hi
    } else {
        0.0
    };
    num_traits::Float::hypot(dx, im)
}

impl Zones {
    /// Wider strip used where outer and oscillatory forms are compared at
    /// the same point.
    pub fn matching() -> Self {
        Zones {
            rho: 0.25,
            ..Zones::default()
        }
    }

    pub fn contains(&self, family: Family, region: Region, re: f64, im: f64) -> bool {
        let (lo, hi) = oscillation_interval(family);
        match region {
            Region::Outer => distance(re, im, lo, hi) >= self.delta_min,
            Region::Oscillatory => {
                if im == 0.0 && !(lo < re && re < hi) {
                    // no analytic continuation past the turning points
                    return false;
                }
                distance(re, im, lo + self.delta, hi - self.delta) <= self.rho
            }
        }
    }

    pub fn check(&self, family: Family, region: Region, re: f64, im: f64) -> Result<()> {
        if self.contains(family, region, re, im) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "point ({re}, {im}) is outside the {region} zone of the {family} family"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_zones() {
        let z = Zones::default();
        assert!(z.contains(Family::Legendre, Region::Outer, 2.0, 0.0));
        assert!(!z.contains(Family::Legendre, Region::Outer, 1.02, 0.0));
        assert!(z.contains(Family::Legendre, Region::Oscillatory, 0.5, 0.0));
        assert!(z.contains(Family::Legendre, Region::Oscillatory, 0.5, 0.05));
        assert!(!z.contains(Family::Legendre, Region::Oscillatory, 0.5, 0.2));
        assert!(!z.contains(Family::Hermite, Region::Oscillatory, 1.0, 0.0));
        assert!(!z.contains(Family::Ismail, Region::Oscillatory, 1.01, 0.0));
        assert!(z.contains(Family::Ismail, Region::Oscillatory, 0.25, 0.0));
        assert!(!z.contains(Family::Ismail, Region::Outer, 0.5, 0.01));
        assert!(Zones::matching().contains(Family::Legendre, Region::Oscillatory, 0.5, 0.2));
    }
}
