//! The Legendre change of variables and the functions `Q_n`.
//!
//! With `w(x) = (x + sqrt(x^2-1)) / 2` and `t(x) = (x - sqrt(x^2-1))^2`
//! the monic Legendre polynomials factor as `pi_n(x) = w(x)^n Q_n(t(x))`.

use crate::error::Result;
use crate::numerics::{sqrt_cut, ApComplex, Scalar};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn legendre_w(x: &ApComplex) -> Result<ApComplex> {
    let s = sqrt_cut(x)?;
    Ok((x + &s).mul_pow2(-1))
}

pub fn legendre_t(x: &ApComplex) -> Result<ApComplex> {
    let s = sqrt_cut(x)?;
    let d = x - &s;
    Ok(&d * &d)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Q_n(t)` from `Q_{k+1} = (1+t) Q_k - 4k^2 t / (4k^2 - 1) Q_{k-1}`.
pub fn qn_recurrence<S: Scalar>(n: usize, t: &S) -> S {
    let one = t.lift(&BigRational::one());
    let one_t = one.plus(t);
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = one_t.clone();
    for k in 1..n as i64 {
        let c = t.lift(&rat(4 * k * k, 4 * k * k - 1));
        let next = one_t.times(&cur).minus(&c.times(t).times(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients of `Q_n` from the closed form
/// `sum_j (1/2)_j (n-j+1)_j / (j! (n-j+1/2)_j) t^j`.
pub fn qn_coefficients(n: usize) -> Vec<BigRational> {
    let n = n as i64;
    (0..=n)
        .map(|j| {
            let mut c = BigRational::one();
            for i in 0..j {
                // (1/2)_j / j!
                c *= rat(2 * i + 1, 2 * (i + 1));
                // (n-j+1)_j / (n-j+1/2)_j
                c *= rat(2 * (n - j + 1 + i), 2 * (n - j) + 1 + 2 * i);
            }
            c
        })
        .collect()
}

/// `Q_n(t)` from the explicit sum (Horner form).
pub fn qn_explicit<S: Scalar>(n: usize, t: &S) -> S {
    let coeffs = qn_coefficients(n);
    let mut acc = t.lift(&BigRational::zero());
    for c in coeffs.iter().rev() {
        acc = acc.times(t).plus(&t.lift(c));
    }
    acc
}
