use crate::error::{Error, Result};
use crate::numerics::{ApReal, Precision};
use crate::recurrence::{find_zeros, Family};
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct ZeroRow {
    pub j: u64,
    /// Zero of `pi_n` nearest to `j^2`.
    pub zero: ApReal,
    /// `|zero - j^2| / (2j + 1)`
    pub deviation: f64,
}

#[derive(Clone, Debug)]
pub struct ZeroTable {
    pub n: u64,
    pub rows: Vec<ZeroRow>,
}

impl ZeroTable {
    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(|r| r.deviation).fold(0.0, f64::max)
    }

    pub fn median_deviation(&self) -> f64 {
        let mut d: Vec<f64> = self.rows.iter().map(|r| r.deviation).collect();
        d.sort_by(f64::total_cmp);
        match d.len() {
            0 => f64::NAN,
            k if k % 2 == 1 => d[k / 2],
            k => 0.5 * (d[k / 2 - 1] + d[k / 2]),
        }
    }
}

/// The sine factor of the oscillatory Ismail approximant vanishes at
/// `y = (j/n)^2`, i.e. `x = j^2`. For the interior indices
/// `sqrt(delta) <= j/n <= sqrt(1 - delta)` this reports how far the true
/// zero nearest `j^2` sits, in units of the local spacing `2j + 1`.
pub fn zero_proximity(n: u64, delta: f64, prec: Precision) -> Result<ZeroTable> {
    if n < 10 {
        return Err(Error::invalid("zero proximity needs n >= 10"));
    }
    let zeros = find_zeros(Family::Ismail, n as usize, prec)?;
    let nf = n as f64;
    let rows = (1..=n)
        .filter(|&j| {
            let r = j as f64 / nf;
            r >= num_traits::Float::sqrt(delta) && r <= num_traits::Float::sqrt(1.0 - delta)
        })
        .map(|j| {
            let target = ApReal::from_u64(j * j, prec);
            let idx = zeros.partition_point(|z| *z < target);
            let nearest = [idx.checked_sub(1), (idx < zeros.len()).then_some(idx)]
                .into_iter()
                .flatten()
                .map(|i| &zeros[i])
                .min_by(|a, b| {
                    let da = (*a - &target).abs();
                    let db = (*b - &target).abs();
                    da.partial_cmp(&db).unwrap()
                })
                .expect("n >= 1 zeros");
            let deviation = (nearest - &target).abs().to_f64() / (2 * j + 1) as f64;
            ZeroRow {
                j,
                zero: nearest.clone(),
                deviation,
            }
        })
        .collect();
    Ok(ZeroTable { n, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty() {
        let t = zero_proximity(20, 0.1, Precision::new(128).unwrap()).unwrap();
        assert!(t.rows.iter().any(|r| r.j == 10));
        assert!(t.max_deviation() <= 0.25);
        assert!(zero_proximity(5, 0.1, Precision::new(128).unwrap()).is_err());
    }
}
