use super::elementary as el;
use super::precision::Precision;
use super::real::ApReal;
use crate::error::{Error, Result};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Even Bernoulli numbers `B_2, B_4, ..., B_2m`, obtained from the tangent
/// numbers `T_k` through `B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))`.
/// The tangent numbers come from an integer-only triangle, so no gcd work
/// happens until the final division.
pub fn bernoulli_even(m: usize) -> Vec<BigRational> {
    if m == 0 {
        return Vec::new();
    }
    let mut t: Vec<BigInt> = alloc::vec![BigInt::zero(); m + 1];
    t[1] = BigInt::one();
    for k in 2..=m {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=m {
        for j in k..=m {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    (1..=m)
        .map(|k| {
            let four_k = BigInt::one() << (2 * k);
            let num = &t[k] * BigInt::from(2 * k);
            let den = &four_k * (&four_k - BigInt::one());
            let b = BigRational::new(num, den);
            if k % 2 == 0 {
                -b
            } else {
                b
            }
        })
        .collect()
}

/// Stirling-series evaluator for `ln Gamma` with its Bernoulli coefficients
/// prepared once per precision.
#[derive(Clone, Debug)]
pub struct LogGamma {
    prec: Precision,
    work: Precision,
    threshold: u64,
    /// `B_2k / (2k (2k-1))` as reals
    coeffs: Vec<ApReal>,
    half_ln_2pi: ApReal,
}

impl LogGamma {
    pub fn new(prec: Precision) -> Self {
        let work = prec.plus(el::GUARD + 64);
        let wb = u64::from(work.bits());
        let threshold = 16u64.max((wb * 12).div_ceil(100));
        // the smallest Stirling term at z >= threshold sits near k = pi z;
        // terms shrink at least geometrically well before that
        let m = (wb as usize / 2).max(8);
        let coeffs = bernoulli_even(m)
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                let k = 2 * (i as i64 + 1);
                ApReal::from_ratio(
                    &(b / BigRational::from_integer(BigInt::from(k * (k - 1)))),
                    work,
                )
            })
            .collect();
        let two_pi = el::pi(work).mul_pow2(1);
        let half_ln_2pi = el::ln(&two_pi).unwrap().mul_pow2(-1);
        LogGamma {
            prec,
            work,
            threshold,
            coeffs,
            half_ln_2pi,
        }
    }

    /// Argument below which the recurrence shifts upward.
    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    /// `ln Gamma(z)` for real `z > 0`.
    pub fn eval(&self, z: &ApReal) -> Result<ApReal> {
        if !z.is_positive() {
            return Err(Error::domain("log_gamma needs a positive argument"));
        }
        let one = ApReal::one(self.work);
        let mut x = z.with_prec(self.work);
        if x == one || x == &one + &one {
            return Ok(ApReal::zero(self.prec));
        }
        let t = ApReal::from_u64(self.threshold, self.work);
        let mut shift = one.clone();
        while x < t {
            shift = &shift * &x;
            x = &x + &one;
        }
        let lx = el::ln(&x)?;
        let half = one.mul_pow2(-1);
        let mut s = &(&(&x - &half) * &lx) - &x;
        s = &s + &self.half_ln_2pi;
        let inv = x.recip().unwrap();
        let inv2 = &inv * &inv;
        let mut pw = inv;
        let tiny = s.abs().max_ref(&one).msb_exponent().unwrap() - i64::from(self.work.bits());
        let mut prev: Option<i64> = None;
        let mut converged = false;
        for c in &self.coeffs {
            let term = c * &pw;
            let e = term.msb_exponent().unwrap();
            if e < tiny {
                converged = true;
                break;
            }
            if prev.is_some_and(|p| e > p) {
                // asymptotic series started to diverge
                break;
            }
            prev = Some(e);
            s = &s + &term;
            pw = &pw * &inv2;
        }
        if !converged {
            return Err(Error::NonConvergence {
                doublings: self.coeffs.len() as u32,
            });
        }
        if shift != one {
            s = &s - &el::ln(&shift)?;
        }
        Ok(s.with_prec(self.prec))
    }
}

/// `ln Gamma(z)` for real `z > 0`.
pub fn log_gamma(z: &ApReal) -> Result<ApReal> {
    LogGamma::new(z.prec()).eval(z)
}
