//! Closed-form leading-order approximants, all returned as [`SignedLog`].
//!
//! Large factors such as `(n/e)^(2n)` are only ever formed as logarithms.
//! Powers with non-integer exponents are principal values, `exp(a Ln z)`,
//! and each such base is formed before its logarithm is taken.

use super::zones::{Region, Zones};
use crate::error::Result;
use crate::numerics::elementary::{self as el, GUARD};
use crate::numerics::{arccos_principal, sqrt_cut, ApComplex, ApReal, Precision, SignedLog};
use crate::recurrence::Family;

/// Working precision for degree `n`: the phase `n * theta` loses about
/// `log2 n` bits.
fn working(prec: Precision, n: u64) -> Precision {
    prec.plus(GUARD + 2 * (64 - n.leading_zeros()))
}

fn real(v: &ApReal) -> ApComplex {
    ApComplex::from_real(v.clone())
}

fn int(n: u64, prec: Precision) -> ApComplex {
    ApComplex::from_real(ApReal::from_u64(n, prec))
}

fn half(prec: Precision) -> ApComplex {
    ApComplex::from_real(ApReal::one(prec).mul_pow2(-1))
}

/// `(n/2) ln(n / (2e))`, zero for `n = 0`.
fn hermite_scale(n: u64, prec: Precision) -> ApReal {
    if n == 0 {
        return ApReal::zero(prec);
    }
    let nn = ApReal::from_u64(n, prec);
    let l = &(&el::ln(&nn).unwrap() - &el::ln2(prec)) - &ApReal::one(prec);
    (&nn * &l).mul_pow2(-1)
}

/// `2n (ln n - 1)`, the log of `(n/e)^(2n)`; zero for `n = 0`.
fn ismail_scale(n: u64, prec: Precision) -> ApReal {
    if n == 0 {
        return ApReal::zero(prec);
    }
    let nn = ApReal::from_u64(n, prec);
    (&nn * &(&el::ln(&nn).unwrap() - &ApReal::one(prec))).mul_pow2(1)
}

fn check(zones: &Zones, family: Family, region: Region, z: &ApComplex) -> Result<()> {
    let (re, im) = z.to_f64_pair();
    zones.check(family, region, re, im)
}

/// An oscillatory approximant together with its envelope: the same
/// expression with the trigonometric factor replaced by one.
#[derive(Clone, Debug)]
pub struct Oscillating {
    pub value: SignedLog,
    pub envelope: SignedLog,
}

pub fn legendre_outer(n: u64, x: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    check(zones, Family::Legendre, Region::Outer, x)?;
    let prec = x.prec();
    let w = working(prec, n);
    let x = x.with_prec(w);
    let s = sqrt_cut(&x)?;
    let u = &x + &s;
    let base = u.mul_pow2(-1).ln()?;
    let pref = u
        .checked_div(&s.mul_pow2(1))
        .expect("s != 0 off the cut")
        .ln()?;
    let l = &(&int(n, w) * &base) + &(&half(w) * &pref);
    Ok(SignedLog::from_log(&l).with_prec(prec))
}

pub fn legendre_oscillatory_parts(n: u64, x: &ApComplex, zones: &Zones) -> Result<Oscillating> {
    check(zones, Family::Legendre, Region::Oscillatory, x)?;
    let prec = x.prec();
    let w = working(prec, n);
    let x = x.with_prec(w);
    let one = ApComplex::one(w);
    let theta = arccos_principal(&x);
    let s = theta.sin()?;
    let f = (&one + &s)
        .checked_div(&s)
        .expect("sin theta != 0 in the strip")
        .sqrt();
    let g = (&one - &s)
        .checked_div(&s)
        .expect("sin theta != 0 in the strip")
        .sqrt();
    let (sn, cn) = (&int(n, w) * &theta).sin_cos()?;
    let bracket = &(&cn * &f) + &(&sn * &g);
    let scale = SignedLog::from_log(&real(&-(&el::ln2(w) * &ApReal::from_u64(n, w))));
    let value = &SignedLog::from_complex(&bracket)? * &scale;
    let envelope = &SignedLog::from_complex(&(&f + &g))? * &scale;
    Ok(Oscillating {
        value: value.with_prec(prec),
        envelope: envelope.with_prec(prec),
    })
}

pub fn legendre_oscillatory(n: u64, x: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    Ok(legendre_oscillatory_parts(n, x, zones)?.value)
}

pub fn hermite_outer(n: u64, y: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    check(zones, Family::Hermite, Region::Outer, y)?;
    let prec = y.prec();
    let w = working(prec, n);
    let y = y.with_prec(w);
    let s = sqrt_cut(&y)?;
    let u = &y + &s;
    let inner = &(&(&y * &y) - &(&y * &s)) + &u.ln()?;
    let pref = u
        .checked_div(&s.mul_pow2(1))
        .expect("s != 0 off the cut")
        .ln()?;
    let l = &(&real(&hermite_scale(n, w)) + &(&int(n, w) * &inner)) + &(&half(w) * &pref);
    Ok(SignedLog::from_log(&l).with_prec(prec))
}

pub fn hermite_oscillatory_parts(n: u64, y: &ApComplex, zones: &Zones) -> Result<Oscillating> {
    check(zones, Family::Hermite, Region::Oscillatory, y)?;
    let prec = y.prec();
    let w = working(prec, n);
    let y = y.with_prec(w);
    let one = ApComplex::one(w);
    let theta = arccos_principal(&y);
    let (s, c) = theta.sin_cos()?;
    let phi = &(&int(n, w) * &(&theta - &(&s * &c))) + &theta.mul_pow2(-1);
    let (sp, cp) = phi.sin_cos()?;
    let trig = &sp + &cp;
    let quarter = ApComplex::from_real(ApReal::one(w).mul_pow2(-2));
    let l = &(&real(&hermite_scale(n, w)) + &(&int(n, w) * &(&y * &y)))
        - &(&quarter * &(&one - &(&y * &y)).ln()?);
    let envelope = SignedLog::from_log(&l);
    let value = &SignedLog::from_complex(&trig)? * &envelope;
    Ok(Oscillating {
        value: value.with_prec(prec),
        envelope: envelope.with_prec(prec),
    })
}

pub fn hermite_oscillatory(n: u64, y: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    Ok(hermite_oscillatory_parts(n, y, zones)?.value)
}

pub fn ismail_outer(n: u64, y: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    check(zones, Family::Ismail, Region::Outer, y)?;
    let prec = y.prec();
    let w = working(prec, n);
    let y = y.with_prec(w);
    let one = ApComplex::one(w);
    let r = y.sqrt();
    let rp = &r + &one;
    let rm = &r - &one;
    let inner = &(&rp * &rp.ln()?) - &(&rm * &rm.ln()?);
    let pref = y
        .checked_div(&(&y - &one))
        .expect("y != 1 outside the zone")
        .ln()?;
    let l = &(&real(&ismail_scale(n, w)) + &(&int(n, w) * &inner)) + &(&half(w) * &pref);
    Ok(SignedLog::from_log(&l).with_prec(prec))
}

pub fn ismail_oscillatory_parts(n: u64, y: &ApComplex, zones: &Zones) -> Result<Oscillating> {
    check(zones, Family::Ismail, Region::Oscillatory, y)?;
    let prec = y.prec();
    let w = working(prec, n);
    let y = y.with_prec(w);
    let one = ApComplex::one(w);
    let nn = int(n, w);
    let r = y.sqrt();
    let ratio = (&one + &r)
        .checked_div(&(&one - &r))
        .expect("y != 1 in the strip");
    let expo = &(&nn - &half(w)) * &(&one - &y).ln()?;
    let l = &(&(&real(&ismail_scale(n, w)) + &(&(&nn * &r) * &ratio.ln()?))
        + &(&half(w) * &y.ln()?))
        + &expo;
    let mut envelope = SignedLog::from_log(&l);
    // (-1)^(n-1) * 2
    let lead = if n % 2 == 1 { 2 } else { -2 };
    envelope = &envelope * &SignedLog::from_real(&ApReal::from_i64(lead, w))?;
    let nr = &nn * &r;
    let value = if nr.is_real() && el::is_integer(&nr.re) {
        // sin(n pi sqrt(y)) vanishes exactly
        SignedLog::zero(w)
    } else {
        let pi = ApComplex::from_real(el::pi(w));
        &SignedLog::from_complex(&(&nr * &pi).sin()?)? * &envelope
    };
    Ok(Oscillating {
        value: value.with_prec(prec),
        envelope: envelope.with_prec(prec),
    })
}

pub fn ismail_oscillatory(n: u64, y: &ApComplex, zones: &Zones) -> Result<SignedLog> {
    Ok(ismail_oscillatory_parts(n, y, zones)?.value)
}
