//! Elementary functions on [`ApReal`].
//!
//! All kernels work in fixed point: a `BigInt` `v` stands for `v / 2^wp`.
//! Working precision is the target precision plus [`GUARD`] bits plus
//! whatever argument reduction or cancellation costs, so results are good to
//! a few ulps at the target precision.

use super::precision::Precision;
use super::real::ApReal;
use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Guard bits added to every working precision.
pub const GUARD: u32 = 40;

fn one_fixed(wp: u32) -> BigInt {
    BigInt::one() << wp as usize
}

/// `round(x * 2^wp)`.
pub(crate) fn to_fixed(x: &ApReal, wp: u32) -> BigInt {
    let (neg, mag, exp) = x.raw_parts();
    let shift = exp + i64::from(wp);
    let m = if shift >= 0 {
        mag << shift as u64
    } else {
        let sh = (-shift) as u64;
        if sh > mag.bits() + 1 {
            return BigInt::zero();
        }
        (mag + (num_bigint::BigUint::one() << (sh - 1))) >> sh
    };
    BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, m)
}

pub(crate) fn from_fixed(v: BigInt, wp: u32, prec: Precision) -> ApReal {
    ApReal::from_bigint_exp(v, -i64::from(wp), prec)
}

fn fixed_mul(a: &BigInt, b: &BigInt, wp: u32) -> BigInt {
    (a * b) >> wp as usize
}

/// `sum_{i>=0} 1 / ((2i+1) k^(2i+1))`, i.e. `atanh(1/k)`, in fixed point.
fn atanh_inv(k: u64, wp: u32) -> BigInt {
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut term = one_fixed(wp) / BigInt::from(k);
    let mut sum = term.clone();
    let mut i = 1u64;
    loop {
        term /= &k2;
        if term.is_zero() {
            break;
        }
        sum += &term / BigInt::from(2 * i + 1);
        i += 1;
    }
    sum
}

/// `atan(1/k)` in fixed point.
fn atan_inv(k: u64, wp: u32) -> BigInt {
    let k2 = BigInt::from(k) * BigInt::from(k);
    let mut term = one_fixed(wp) / BigInt::from(k);
    let mut sum = term.clone();
    let mut i = 1u64;
    loop {
        term /= &k2;
        if term.is_zero() {
            break;
        }
        let t = &term / BigInt::from(2 * i + 1);
        if i % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        i += 1;
    }
    sum
}

pub(crate) fn ln2_fixed(wp: u32) -> BigInt {
    (atanh_inv(3, wp + 8) << 1usize) >> 8usize
}

pub(crate) fn pi_fixed(wp: u32) -> BigInt {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    let a = atan_inv(5, wp + 8) * BigInt::from(16);
    let b = atan_inv(239, wp + 8) * BigInt::from(4);
    (a - b) >> 8usize
}

pub fn pi(prec: Precision) -> ApReal {
    let wp = prec.bits() + GUARD;
    from_fixed(pi_fixed(wp), wp, prec)
}

pub fn ln2(prec: Precision) -> ApReal {
    let wp = prec.bits() + GUARD;
    from_fixed(ln2_fixed(wp), wp, prec)
}

/// `e^x`. Fails with [`Error::Overflow`] when `|x| >= 2^62`.
pub fn exp(x: &ApReal) -> Result<ApReal> {
    let prec = x.prec();
    let Some(m) = x.msb_exponent() else {
        return Ok(ApReal::one(prec));
    };
    if m > 62 {
        return Err(Error::Overflow);
    }
    let wp = prec.bits() + GUARD + m.max(0) as u32 + 2;
    let xf = to_fixed(x, wp);
    let ln2 = ln2_fixed(wp);
    let k = (&xf + (&ln2 >> 1usize)).div_floor(&ln2);
    let r = xf - &k * &ln2;
    // r / 2^h is the integer r read at fixed precision f = wp + h
    let h = 12u32;
    let f = wp + h;
    let mut term = r.clone();
    let mut sum = r.clone();
    let mut i = 2u64;
    loop {
        term = fixed_mul(&term, &r, f) / BigInt::from(i);
        if term.is_zero() {
            break;
        }
        sum += &term;
        i += 1;
    }
    // square h times, tracking e^s - 1 to keep the small part exact
    for _ in 0..h {
        sum = (&sum << 1usize) + fixed_mul(&sum, &sum, f);
    }
    let val = one_fixed(f) + sum;
    let k: i64 = k.try_into().map_err(|_| Error::Overflow)?;
    Ok(ApReal::from_bigint_exp(val, k - i64::from(f), prec))
}

/// `e^x - 1`, accurate for small `|x|`.
pub fn exp_m1(x: &ApReal) -> Result<ApReal> {
    let prec = x.prec();
    let Some(m) = x.msb_exponent() else {
        return Ok(ApReal::zero(prec));
    };
    let extra = if m < 0 { (-m) as u32 } else { 0 };
    let work = prec.plus(GUARD + extra);
    let e = exp(&x.with_prec(work))?;
    Ok((e - ApReal::one(work)).with_prec(prec))
}

/// Natural logarithm of a positive real.
pub fn ln(x: &ApReal) -> Result<ApReal> {
    if !x.is_positive() {
        return Err(Error::domain("logarithm of a non-positive real"));
    }
    let prec = x.prec();
    let (_, mag, exp) = x.raw_parts();
    let p = mag.bits() as i64;
    // x = f * 2^b with f in [sqrt(1/2), sqrt(2))
    let mut b = exp + p;
    let mut fm = mag.clone(); // f = fm / 2^p
    let half_sq = num_bigint::BigUint::one() << (2 * p - 1) as u64;
    if &fm * &fm < half_sq {
        fm <<= 1u32;
        b -= 1;
    }
    let one_p = num_bigint::BigUint::one() << p as u64;
    if b == 0 && fm == one_p {
        return Ok(ApReal::zero(prec));
    }
    // cancellation when f is close to 1 and b == 0
    let extra = if b == 0 {
        let d = if fm > one_p {
            &fm - &one_p
        } else {
            &one_p - &fm
        };
        (p - d.bits() as i64).max(0) as u32
    } else {
        0
    };
    let wp = prec.bits() + GUARD + extra;
    let ff = BigInt::from(fm) << (i64::from(wp) - p).max(0) as usize;
    let ff = if i64::from(wp) < p {
        ff >> (p - i64::from(wp)) as usize
    } else {
        ff
    };
    let one = one_fixed(wp);
    let z = ((&ff - &one) << wp as usize) / (&ff + &one);
    let z2 = fixed_mul(&z, &z, wp);
    let mut term = z.clone();
    let mut sum = z;
    let mut i = 1u64;
    loop {
        term = fixed_mul(&term, &z2, wp);
        let t = &term / BigInt::from(2 * i + 1);
        if t.is_zero() {
            break;
        }
        sum += t;
        i += 1;
    }
    let mut val = sum << 1usize;
    if b != 0 {
        val += ln2_fixed(wp) * BigInt::from(b);
    }
    Ok(from_fixed(val, wp, prec))
}

/// `(sin x, cos x)`.
pub fn sin_cos(x: &ApReal) -> (ApReal, ApReal) {
    let prec = x.prec();
    let Some(m) = x.msb_exponent() else {
        return (ApReal::zero(prec), ApReal::one(prec));
    };
    let target = prec.bits() + GUARD / 2;
    let mut extra = 0u32;
    loop {
        let wp = prec.bits() + GUARD + m.max(0) as u32 + extra;
        let xf = to_fixed(x, wp);
        let half_pi = pi_fixed(wp + 1) >> 2usize;
        let k = (&xf + (&half_pi >> 1usize)).div_floor(&half_pi);
        let r = &xf - &k * &half_pi;
        // r must carry `target` significant bits
        let rbits = r.bits() as u32;
        if rbits < target && extra < 1 << 20 {
            extra += target - rbits + 8;
            continue;
        }
        let r2 = fixed_mul(&r, &r, wp);
        let mut s = r.clone();
        let mut term = r.clone();
        let mut i = 1u64;
        loop {
            term = -fixed_mul(&term, &r2, wp) / BigInt::from((2 * i) * (2 * i + 1));
            if term.is_zero() {
                break;
            }
            s += &term;
            i += 1;
        }
        let mut c = one_fixed(wp);
        let mut term = c.clone();
        let mut i = 1u64;
        loop {
            term = -fixed_mul(&term, &r2, wp) / BigInt::from((2 * i - 1) * (2 * i));
            if term.is_zero() {
                break;
            }
            c += &term;
            i += 1;
        }
        let q = k.mod_floor(&BigInt::from(4));
        let q: u8 = q.try_into().unwrap_or(0);
        let (s, c) = match q {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        return (from_fixed(s, wp, prec), from_fixed(c, wp, prec));
    }
}

pub fn sin(x: &ApReal) -> ApReal {
    sin_cos(x).0
}

pub fn cos(x: &ApReal) -> ApReal {
    sin_cos(x).1
}

/// `atan(z)` for fixed-point `|z| <= 1`.
fn atan_fixed(z: BigInt, wp: u32) -> BigInt {
    let one = one_fixed(wp);
    let h = 8u32;
    let mut z = z;
    for _ in 0..h {
        let z2 = fixed_mul(&z, &z, wp);
        let s = ((&one + z2) << wp as usize).sqrt();
        z = (z << wp as usize) / (&one + s);
    }
    let z2 = fixed_mul(&z, &z, wp);
    let mut term = z.clone();
    let mut sum = z;
    let mut i = 1u64;
    loop {
        term = -fixed_mul(&term, &z2, wp);
        let t = &term / BigInt::from(2 * i + 1);
        if t.is_zero() {
            break;
        }
        sum += t;
        i += 1;
    }
    sum << h as usize
}

/// Four-quadrant arctangent in `(-pi, pi]`; `atan2(0, 0) = 0`.
pub fn atan2(y: &ApReal, x: &ApReal) -> ApReal {
    let prec = y.prec().max(x.prec());
    if y.is_zero() {
        return if x.is_negative() {
            pi(prec)
        } else {
            ApReal::zero(prec)
        };
    }
    if x.is_zero() {
        let hp = pi(prec).mul_pow2(-1);
        return if y.is_negative() { -hp } else { hp };
    }
    let swap = y.abs() > x.abs();
    let (num, den) = if swap { (x, y) } else { (y, x) };
    let ratio_m = num.msb_exponent().unwrap() - den.msb_exponent().unwrap();
    let extra = if ratio_m < 0 { (-ratio_m) as u32 } else { 0 };
    let wp = prec.bits() + GUARD + extra;
    let work = Precision::clamped(wp);
    let t = num
        .with_prec(work)
        .checked_div(&den.with_prec(work))
        .unwrap();
    let a = atan_fixed(to_fixed(&t, wp), wp);
    let pi_f = pi_fixed(wp);
    let val = if !swap {
        if x.is_positive() {
            a
        } else if y.is_negative() {
            a - pi_f
        } else {
            a + pi_f
        }
    } else {
        let hp = pi_f >> 1usize;
        if y.is_positive() {
            hp - a
        } else {
            -hp - a
        }
    };
    from_fixed(val, wp, prec)
}

pub fn atan(x: &ApReal) -> ApReal {
    atan2(x, &ApReal::one(x.prec()))
}

/// `(sinh x, cosh x)` via `expm1`, stable for small `x`.
pub fn sinh_cosh(x: &ApReal) -> Result<(ApReal, ApReal)> {
    let prec = x.prec();
    if x.is_zero() {
        return Ok((ApReal::zero(prec), ApReal::one(prec)));
    }
    let work = prec.plus(GUARD);
    let xw = x.with_prec(work);
    let em = exp_m1(&xw)?;
    let one = ApReal::one(work);
    let e = &em + &one;
    // sinh = (em + em / e) / 2, cosh = (e + 1/e) / 2
    let inv = e.recip().ok_or(Error::Overflow)?;
    let sinh = (&em + &(&em * &inv)).mul_pow2(-1);
    let cosh = (&e + &inv).mul_pow2(-1);
    Ok((sinh.with_prec(prec), cosh.with_prec(prec)))
}

/// `x^y` for `x > 0`.
pub fn powf(x: &ApReal, y: &ApReal) -> Result<ApReal> {
    let prec = x.prec().max(y.prec());
    let work = prec.plus(GUARD + 64);
    let l = ln(&x.with_prec(work))?;
    Ok(exp(&(&l * &y.with_prec(work)))?.with_prec(prec))
}

/// Exact integer test.
pub fn is_integer(x: &ApReal) -> bool {
    let (_, mag, exp) = x.raw_parts();
    x.is_zero() || exp >= 0 || mag.trailing_zeros().unwrap_or(0) >= (-exp) as u64
}

/// `|x|` rounded down to an integer, as a `BigInt` (sign kept).
pub fn trunc(x: &ApReal) -> BigInt {
    let (neg, mag, exp) = x.raw_parts();
    let m = if exp >= 0 {
        BigInt::from(mag.clone()) << exp as usize
    } else {
        BigInt::from(mag >> ((-exp) as u64))
    };
    if neg {
        -m
    } else {
        m.abs()
    }
}
