use super::compare::{compare, CompareOptions, ErrorReport};
use crate::asymptotics::Region;
use crate::error::{Error, Result};
use crate::numerics::elementary as el;
use crate::numerics::Point;
use crate::recurrence::Family;
use alloc::vec::Vec;

/// Approximants below this fraction of their envelope are near a zero and
/// left out of the fit.
pub const NEAR_ZERO_FRACTION: f64 = 0.1;

#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub report: ErrorReport,
    /// Skipped because the approximant is close to one of its zeros.
    pub excluded: bool,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub entries: Vec<SweepEntry>,
    /// Least-squares slope of `ln rel_err` against `ln n` over the usable
    /// entries.
    pub empirical_order: f64,
    /// Usable relative errors strictly decrease with `n`.
    pub monotone: bool,
}

impl SweepResult {
    pub fn usable(&self) -> impl Iterator<Item = &ErrorReport> {
        self.entries
            .iter()
            .filter(|e| !e.excluded)
            .map(|e| &e.report)
    }
}

fn near_zero(report: &ErrorReport) -> bool {
    let Some(env) = &report.envelope else {
        return false;
    };
    if report.approx.is_zero() {
        return true;
    }
    if env.is_zero() {
        return false;
    }
    let gap = (report.approx.logmod() - env.logmod()).to_f64();
    gap < num_traits::Float::ln(NEAR_ZERO_FRACTION)
}

/// One point of a sweep, with the near-zero flag attached.
pub fn sweep_point(
    family: Family,
    region: Region,
    point: &Point,
    n: u64,
    opts: &CompareOptions,
) -> Result<SweepEntry> {
    let report = compare(family, region, n, point, opts)?;
    let excluded = region == Region::Oscillatory && near_zero(&report);
    Ok(SweepEntry { report, excluded })
}

/// Builds the sweep summary from entries ordered by strictly increasing `n`.
pub fn assemble_sweep(entries: Vec<SweepEntry>) -> Result<SweepResult> {
    if entries.windows(2).any(|w| w[0].report.n >= w[1].report.n) {
        return Err(Error::invalid("sweep degrees must be strictly increasing"));
    }
    let pts: Vec<(f64, f64)> = entries
        .iter()
        .filter(|e| !e.excluded && !e.report.rel_err.is_zero())
        .map(|e| {
            let ln_err = el::ln(&e.report.rel_err).expect("positive").to_f64();
            (num_traits::Float::ln(e.report.n as f64), ln_err)
        })
        .collect();
    if pts.len() < 3 {
        return Err(Error::InsufficientData { usable: pts.len() });
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let usable: Vec<&ErrorReport> = entries
        .iter()
        .filter(|e| !e.excluded)
        .map(|e| &e.report)
        .collect();
    let monotone = usable.windows(2).all(|w| w[1].rel_err < w[0].rel_err);
    Ok(SweepResult {
        entries,
        empirical_order: sxy / sxx,
        monotone,
    })
}

pub fn convergence_sweep(
    family: Family,
    region: Region,
    point: &Point,
    ns: &[u64],
    opts: &CompareOptions,
) -> Result<SweepResult> {
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("sweep degrees must be strictly increasing"));
    }
    let entries = ns
        .iter()
        .map(|&n| sweep_point(family, region, point, n, opts))
        .collect::<Result<Vec<_>>>()?;
    assemble_sweep(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_outer_sweep() {
        let p: Point = "2,0".parse().unwrap();
        let s = convergence_sweep(
            Family::Legendre,
            Region::Outer,
            &p,
            &[16, 32, 64, 128],
            &CompareOptions::default(),
        )
        .unwrap();
        assert!(s.monotone);
        assert!(
            (s.empirical_order + 1.0).abs() < 0.3,
            "{}",
            s.empirical_order
        );
    }

    #[test]
    fn rejects_unsorted_degrees() {
        let p: Point = "2,0".parse().unwrap();
        let e = convergence_sweep(
            Family::Legendre,
            Region::Outer,
            &p,
            &[32, 16, 64],
            &CompareOptions::default(),
        );
        assert!(matches!(e, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn vanishing_approximants_are_excluded() {
        // sin(n pi / 2) = 0 for even n at y = 1/4
        let p: Point = "0.25,0".parse().unwrap();
        let e = sweep_point(
            Family::Ismail,
            Region::Oscillatory,
            &p,
            16,
            &CompareOptions::default(),
        )
        .unwrap();
        assert!(e.excluded);
        let e = sweep_point(
            Family::Ismail,
            Region::Oscillatory,
            &p,
            17,
            &CompareOptions::default(),
        )
        .unwrap();
        assert!(!e.excluded);
    }
}
