use crate::error::{Error, Result};
use crate::numerics::elementary as el;
use crate::numerics::{ApReal, LogGamma, Precision};
use crate::recurrence::Family;
use alloc::format;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct GammaRow {
    pub n: u64,
    pub ratio: ApReal,
    /// `n^2 |ratio - limit|`
    pub scaled: f64,
}

#[derive(Clone, Debug)]
pub struct GammaTable {
    pub family: Family,
    pub rows: Vec<GammaRow>,
}

impl GammaTable {
    /// Largest scaled deviation is at most twice the one at the smallest `n`.
    pub fn bounded(&self) -> bool {
        let Some(first) = self.rows.first() else {
            return false;
        };
        let max = self.rows.iter().map(|r| r.scaled).fold(0.0, f64::max);
        max <= 2.0 * first.scaled
    }
}

/// Gamma-function ratios from the normalisation constants:
/// Legendre `Gamma(n/2+1/2)^2 (n/2+1/4) / Gamma(n/2+1)^2 = 1 + O(n^-2)`,
/// Hermite `Gamma(n/2+1/2) sqrt(n/2) / Gamma(n/2+1) ~ 1 - 1/(4n)`.
pub fn gamma_ratio_check(family: Family, ns: &[u64], prec: Precision) -> Result<GammaTable> {
    if family == Family::Ismail {
        return Err(Error::invalid("no gamma ratio for the ismail family"));
    }
    if let Some(&n) = ns.iter().find(|&&n| n < 4) {
        return Err(Error::invalid(format!("gamma ratio needs n >= 4, got {n}")));
    }
    let lg = LogGamma::new(prec);
    let one = ApReal::one(prec);
    let rows = ns
        .iter()
        .map(|&n| {
            let half_n = ApReal::from_u64(n, prec).mul_pow2(-1);
            let a = lg.eval(&(&half_n + &one.mul_pow2(-1)))?;
            let b = lg.eval(&(&half_n + &one))?;
            let (ratio, limit) = match family {
                Family::Legendre => {
                    let r = el::exp(&(&a - &b).mul_pow2(1))? * (&half_n + &one.mul_pow2(-2));
                    (r, one.clone())
                }
                _ => {
                    let r = el::exp(&(&a - &b))? * half_n.sqrt()?;
                    let limit = &one - &ApReal::from_u64(4 * n, prec).recip().unwrap();
                    (r, limit)
                }
            };
            let dev = (&ratio - &limit).abs().to_f64();
            Ok(GammaRow {
                n,
                ratio,
                scaled: (n as f64) * (n as f64) * dev,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaTable { family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_at_ten() {
        let t = gamma_ratio_check(Family::Legendre, &[10], Precision::new(256).unwrap()).unwrap();
        assert!((t.rows[0].ratio.to_f64() - 0.998873).abs() < 1e-6);
        assert!((t.rows[0].scaled - 0.1127).abs() < 1e-3);
    }

    #[test]
    fn hermite_at_ten() {
        let t = gamma_ratio_check(Family::Hermite, &[10], Precision::new(256).unwrap()).unwrap();
        assert!((t.rows[0].ratio.to_f64() - (1.0 - 1.0 / 40.0)).abs() < 1e-2);
    }
}
