//! The two-sided bounds on the ratios `w_k` used to derive the outer
//! asymptotics, checked pointwise on the real axis.

use crate::error::{Error, Result};
use crate::numerics::elementary::GUARD;
use crate::numerics::{ApReal, Precision};
use crate::recurrence::{ratios, Family};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct BracketRow {
    pub k: usize,
    pub lower: ApReal,
    pub w: ApReal,
    pub upper: ApReal,
    pub holds: bool,
}

impl BracketRow {
    /// Smaller gap to either bound, relative to `|w_k|`.
    pub fn margin(&self) -> f64 {
        let lo = &self.w - &self.lower;
        let hi = &self.upper - &self.w;
        let m = if lo < hi { lo } else { hi };
        m.checked_div(&self.w.abs()).map_or(0.0, |v| v.to_f64())
    }
}

#[derive(Clone, Debug)]
pub struct BracketReport {
    pub rows: Vec<BracketRow>,
}

impl BracketReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Hermite: with `x = sqrt(2n) y`, `X = x^2 - 2k` and `c = (x + sqrt X)/2`,
/// `c [1 + 1/(2X) - (5x - sqrt X) / (8 X^(5/2))] < w_k(x) < c [1 + 1/(2X)]`.
///
/// Evaluated in floating point; a bound only counts as holding when the
/// gap clears the rounding level by a wide margin.
pub fn bracket_check_hermite(n: usize, y: &BigRational, prec: Precision) -> Result<BracketReport> {
    if *y <= BigRational::one() {
        return Err(Error::domain("Hermite bracket needs real y > 1"));
    }
    let w = prec.plus(GUARD);
    let x = &ApReal::from_u64(2 * n as u64, w).sqrt()? * &ApReal::from_ratio(y, w);
    let ws = ratios(Family::Hermite, n, &x)?;
    let x2 = &x * &x;
    let one = ApReal::one(w);
    let slack_exp = 16 - i64::from(prec.bits());
    let mut rows = Vec::with_capacity(n);
    for (i, wk) in ws.into_iter().enumerate() {
        let k = i + 1;
        let big_x = &x2 - &ApReal::from_u64(2 * k as u64, w);
        let root = big_x.sqrt()?;
        let c = (&x + &root).mul_pow2(-1);
        let base = &one + &big_x.recip().unwrap().mul_pow2(-1);
        let x52 = &(&big_x * &big_x) * &root;
        let corr = (&(&x * &ApReal::from_u64(5, w)) - &root) / x52.mul_pow2(3);
        let upper = &c * &base;
        let lower = &c * &(&base - &corr);
        let slack = wk.abs().mul_pow2(slack_exp);
        let holds = (&wk - &lower) > slack && (&upper - &wk) > slack;
        rows.push(BracketRow {
            k,
            lower: lower.with_prec(prec),
            w: wk.with_prec(prec),
            upper: upper.with_prec(prec),
            holds,
        });
    }
    Ok(BracketReport { rows })
}

/// Ismail: `x - (k-1)^2 - 1 < w_k(x) < x - (k-1)^2 + 1` for real `x`
/// outside `[0, n^2]`. Everything here is exact.
pub fn bracket_check_ismail(n: usize, x: &BigRational, prec: Precision) -> Result<BracketReport> {
    let n2 = BigRational::from_integer(BigInt::from(n) * BigInt::from(n));
    let zero = BigRational::from_integer(BigInt::from(0));
    if *x >= zero && *x <= n2 {
        return Err(Error::domain("Ismail bracket needs x outside [0, n^2]"));
    }
    let ws = ratios(Family::Ismail, n, x)?;
    let one = BigRational::one();
    let rows = ws
        .into_iter()
        .enumerate()
        .map(|(i, wk)| {
            let shift = BigRational::from_integer(BigInt::from(i) * BigInt::from(i));
            let mid = x - shift;
            let lower = &mid - &one;
            let upper = &mid + &one;
            BracketRow {
                k: i + 1,
                holds: lower < wk && wk < upper,
                lower: ApReal::from_ratio(&lower, prec),
                w: ApReal::from_ratio(&wk, prec),
                upper: ApReal::from_ratio(&upper, prec),
            }
        })
        .collect();
    Ok(BracketReport { rows })
}
