//! Principal branches with the cut placed on `[-1, 1]`.

use super::complex::ApComplex;
use super::elementary as el;
use super::real::ApReal;
use crate::error::{Error, Result};

/// True when `x` sits on `[-1, 1]` up to `2^(1-prec)`.
fn on_cut(x: &ApComplex) -> bool {
    let prec = x.prec();
    let tol = ApReal::one(prec).mul_pow2(1 - i64::from(prec.bits()));
    if x.im.abs() > tol {
        return false;
    }
    let lim = &ApReal::one(prec) + &tol;
    x.re.abs() <= lim
}

/// `sqrt(x^2 - 1)` as `sqrt(x - 1) * sqrt(x + 1)`, so the cut is exactly
/// `[-1, 1]` and the value behaves like `x` at infinity.
pub fn sqrt_cut(x: &ApComplex) -> Result<ApComplex> {
    if on_cut(x) {
        return Err(Error::domain("sqrt_cut evaluated on the cut [-1, 1]"));
    }
    let prec = x.prec();
    let one = ApComplex::one(prec);
    Ok(&(x - &one).sqrt() * &(x + &one).sqrt())
}

/// `arccos x` with `0 <= Re theta <= pi` on the whole plane.
///
/// Real arguments take dedicated formulas; on `|x| > 1` the value is the
/// limit from the upper half plane, matching `sqrt_cut` there.
pub fn arccos_principal(x: &ApComplex) -> ApComplex {
    let prec = x.prec();
    if x.is_real() {
        let one = ApReal::one(prec);
        let a = x.re.abs();
        if a <= one {
            let s = (&one - &(&x.re * &x.re)).sqrt().expect("1 - x^2 >= 0");
            return ApComplex::from_real(el::atan2(&s, &x.re));
        }
        let root = (&(&a * &a) - &one).sqrt().expect("x^2 - 1 > 0");
        let l = el::ln(&(&a + &root)).expect("argument exceeds one");
        let re = if x.re.is_negative() {
            el::pi(prec)
        } else {
            ApReal::zero(prec)
        };
        return ApComplex::new(re, -l);
    }
    let work = prec.plus(el::GUARD);
    let xw = x.with_prec(work);
    let s = sqrt_cut(&xw).expect("off the real axis");
    let l = (&xw + &s).ln().expect("x + sqrt(x^2-1) never vanishes");
    // -i*l above the axis, i*l below
    let theta = if x.im.is_positive() {
        ApComplex::new(l.im, -l.re)
    } else {
        ApComplex::new(-l.im, l.re)
    };
    theta.with_prec(prec)
}
