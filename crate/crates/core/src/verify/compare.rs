use crate::asymptotics::{approximate, ApproxRequest, Region, Zones};
use crate::error::{Error, Result};
use crate::numerics::elementary::GUARD;
use crate::numerics::{
    sl_rel_err, ApComplex, ApReal, Point, Precision, PrecisionPolicy, SignedLog,
};
use crate::recurrence::{value, Family};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct CompareOptions {
    pub zones: Zones,
    pub policy: PrecisionPolicy,
}

/// Exact value against approximant at one `(n, point)`.
#[derive(Clone, Debug)]
pub struct ErrorReport {
    pub family: Family,
    pub region: Region,
    pub n: u64,
    pub point: Point,
    pub exact: SignedLog,
    pub approx: SignedLog,
    /// Present for oscillatory regions.
    pub envelope: Option<SignedLog>,
    pub rel_err: ApReal,
    pub prec_used: Precision,
    /// The exact value came from rational arithmetic.
    pub exact_rational: bool,
}

/// The argument of `pi_n` as an exact rational, when it is one.
///
/// Legendre uses `x` itself, Ismail `n^2 y`, Hermite `sqrt(2n) y`, which
/// is rational only when `2n` is a perfect square.
pub fn rational_argument(family: Family, n: u64, point: &Point) -> Option<BigRational> {
    if !point.is_real() {
        return None;
    }
    let y = &point.re;
    match family {
        Family::Legendre => Some(y.clone()),
        Family::Ismail => Some(y * BigRational::from_integer(BigInt::from(n) * BigInt::from(n))),
        Family::Hermite => {
            let two_n = BigInt::from(2 * n);
            let r = two_n.sqrt();
            (&r * &r == two_n).then(|| y * BigRational::from_integer(r))
        }
    }
}

/// The argument of `pi_n` as a floating complex number.
pub fn float_argument(family: Family, n: u64, point: &Point, prec: Precision) -> Result<ApComplex> {
    let y = point.to_complex(prec);
    Ok(match family {
        Family::Legendre => y,
        Family::Ismail => {
            let n2 = ApReal::from_u64(n, prec).powi(2).unwrap();
            y.scale(&n2)
        }
        Family::Hermite => {
            let w = prec.plus(GUARD);
            let root = ApReal::from_u64(2 * n, w).sqrt()?;
            point.to_complex(w).scale(&root).with_prec(prec)
        }
    })
}

/// `pi_n` at the scaled point. Rational arguments are evaluated exactly
/// and rounded once; the flag reports which path was taken.
pub fn exact_value(
    family: Family,
    n: u64,
    point: &Point,
    prec: Precision,
) -> Result<(SignedLog, bool)> {
    if let Some(x) = rational_argument(family, n, point) {
        let v = value(family, n as usize, &x);
        return Ok((rational_signed_log(&v, prec)?, true));
    }
    let w = prec.plus(GUARD);
    let x = float_argument(family, n, point, w)?;
    let v = value(family, n as usize, &x);
    Ok((SignedLog::from_complex(&v)?.with_prec(prec), false))
}

pub(crate) fn rational_signed_log(q: &BigRational, prec: Precision) -> Result<SignedLog> {
    if q.is_zero() {
        return Ok(SignedLog::zero(prec));
    }
    let mag = SignedLog::from_real(&ApReal::from_ratio(&q.abs(), prec.plus(GUARD)))?;
    let s = if q.is_negative() { mag.neg() } else { mag };
    Ok(s.with_prec(prec))
}

pub fn compare(
    family: Family,
    region: Region,
    n: u64,
    point: &Point,
    opts: &CompareOptions,
) -> Result<ErrorReport> {
    let (re, im) = point.to_f64_pair();
    opts.zones.check(family, region, re, im)?;
    // the rational value does not depend on the precision, so do it once
    let exact_q = rational_argument(family, n, point).map(|x| value(family, n as usize, &x));
    let eval = |p: Precision| -> Result<(SignedLog, SignedLog)> {
        let exact = match &exact_q {
            Some(q) => rational_signed_log(q, p)?,
            None => exact_value(family, n, point, p)?.0,
        };
        let req = ApproxRequest {
            family,
            region,
            n,
            point: point.to_complex(p),
            zones: opts.zones,
        };
        Ok((exact, approximate(&req)?.value))
    };
    let ((exact, approx), prec_used) = opts.policy.run(eval)?;
    if exact.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let req = ApproxRequest {
        family,
        region,
        n,
        point: point.to_complex(prec_used),
        zones: opts.zones,
    };
    let envelope = approximate(&req)?.envelope;
    let rel_err = sl_rel_err(&exact, &approx)?;
    Ok(ErrorReport {
        family,
        region,
        n,
        point: point.clone(),
        exact,
        approx,
        envelope,
        rel_err,
        prec_used,
        exact_rational: exact_q.is_some(),
    })
}
