use super::elementary::{self as el, GUARD};
use super::precision::{Agree, Precision};
use super::real::ApReal;
use crate::error::{Error, Result};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision complex number; both parts share one precision.
#[derive(Clone, PartialEq)]
pub struct ApComplex {
    pub re: ApReal,
    pub im: ApReal,
}

impl ApComplex {
    pub fn new(re: ApReal, im: ApReal) -> Self {
        let prec = re.prec().max(im.prec());
        ApComplex {
            re: re.with_prec(prec),
            im: im.with_prec(prec),
        }
    }

    pub fn from_real(re: ApReal) -> Self {
        let prec = re.prec();
        ApComplex {
            re,
            im: ApReal::zero(prec),
        }
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_real(ApReal::zero(prec))
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_real(ApReal::one(prec))
    }

    pub fn i(prec: Precision) -> Self {
        ApComplex {
            re: ApReal::zero(prec),
            im: ApReal::one(prec),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: Precision) -> Result<Self> {
        Ok(ApComplex {
            re: ApReal::from_f64(re, prec)?,
            im: ApReal::from_f64(im, prec)?,
        })
    }

    pub fn prec(&self) -> Precision {
        self.re.prec()
    }

    pub fn with_prec(&self, prec: Precision) -> Self {
        ApComplex {
            re: self.re.with_prec(prec),
            im: self.im.with_prec(prec),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Imaginary part exactly zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ApComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, k: &ApReal) -> Self {
        ApComplex {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        ApComplex {
            re: self.re.mul_pow2(k),
            im: self.im.mul_pow2(k),
        }
    }

    pub fn norm_sqr(&self) -> ApReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Modulus.
    pub fn abs(&self) -> ApReal {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        let prec = self.prec();
        let w = self.with_prec(prec.plus(8));
        w.norm_sqr()
            .sqrt()
            .expect("norm is non-negative")
            .with_prec(prec)
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> ApReal {
        el::atan2(&self.im, &self.re)
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if other.im.is_zero() {
            return Some(ApComplex {
                re: self.re.checked_div(&other.re)?,
                im: self.im.checked_div(&other.re)?,
            });
        }
        let prec = self.prec().max(other.prec());
        let work = prec.plus(GUARD);
        let a = self.with_prec(work);
        let b = other.with_prec(work);
        let den = b.norm_sqr();
        let re = &(&a.re * &b.re) + &(&a.im * &b.im);
        let im = &(&a.im * &b.re) - &(&a.re * &b.im);
        Some(ApComplex {
            re: re.checked_div(&den)?.with_prec(prec),
            im: im.checked_div(&den)?.with_prec(prec),
        })
    }

    pub fn recip(&self) -> Option<Self> {
        Self::one(self.prec()).checked_div(self)
    }

    /// Principal logarithm; imaginary part in `(-pi, pi]`.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("logarithm of zero"));
        }
        let prec = self.prec();
        if self.im.is_zero() && self.re.is_positive() {
            return Ok(Self::from_real(el::ln(&self.re)?));
        }
        let work = prec.plus(GUARD);
        let w = self.with_prec(work);
        // ln|z| = ln(|z|^2) / 2
        let re = el::ln(&w.norm_sqr())?.mul_pow2(-1);
        Ok(ApComplex {
            re: re.with_prec(prec),
            im: self.arg(),
        })
    }

    pub fn exp(&self) -> Result<Self> {
        let m = el::exp(&self.re)?;
        if self.im.is_zero() {
            return Ok(Self::from_real(m));
        }
        let (s, c) = el::sin_cos(&self.im);
        Ok(ApComplex {
            re: &m * &c,
            im: &m * &s,
        })
    }

    /// `e^(i t)` for real `t`.
    pub fn cis(t: &ApReal) -> Self {
        let (s, c) = el::sin_cos(t);
        ApComplex { re: c, im: s }
    }

    /// Principal square root (branch cut on the negative real axis, values
    /// on the cut taken from above).
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_zero() {
            return self.clone();
        }
        if self.im.is_zero() {
            return if self.re.is_positive() {
                Self::from_real(self.re.sqrt().unwrap())
            } else {
                ApComplex {
                    re: ApReal::zero(prec),
                    im: (-&self.re).sqrt().unwrap(),
                }
            };
        }
        let work = prec.plus(8);
        let w = self.with_prec(work);
        let t = (&w.abs() + &w.re.abs()).mul_pow2(-1).sqrt().unwrap();
        let other = w.im.abs().checked_div(&t.mul_pow2(1)).unwrap();
        let (re, im) = if w.re.is_negative() {
            let im = if w.im.is_negative() { -t } else { t };
            (other, im)
        } else {
            let im = w.im.checked_div(&t.mul_pow2(1)).unwrap();
            (t, im)
        };
        ApComplex {
            re: re.with_prec(prec),
            im: im.with_prec(prec),
        }
    }

    pub fn sin_cos(&self) -> Result<(Self, Self)> {
        let (s, c) = el::sin_cos(&self.re);
        if self.im.is_zero() {
            return Ok((Self::from_real(s), Self::from_real(c)));
        }
        let (sh, ch) = el::sinh_cosh(&self.im)?;
        let sin = ApComplex {
            re: &s * &ch,
            im: &c * &sh,
        };
        let cos = ApComplex {
            re: &c * &ch,
            im: -(&s * &sh),
        };
        Ok((sin, cos))
    }

    pub fn sin(&self) -> Result<Self> {
        Ok(self.sin_cos()?.0)
    }

    pub fn cos(&self) -> Result<Self> {
        Ok(self.sin_cos()?.1)
    }

    /// Principal power `exp(w ln z)`; `0^w = 0`.
    pub fn pow(&self, w: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero(self.prec()));
        }
        let prec = self.prec().max(w.prec());
        let work = prec.plus(GUARD);
        let l = self.with_prec(work).ln()?;
        Ok((&l * &w.with_prec(work)).exp()?.with_prec(prec))
    }

    pub fn powi(&self, n: i64) -> Option<Self> {
        let prec = self.prec();
        let work = prec.plus(GUARD + 64 - n.unsigned_abs().leading_zeros());
        let mut base = self.with_prec(work);
        let mut acc = Self::one(work);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        let out = if n < 0 { acc.recip()? } else { acc };
        Some(out.with_prec(prec))
    }

    /// `|self - other| / |other|`.
    pub fn rel_diff(&self, other: &Self) -> ApReal {
        let d = (self - other).abs();
        let o = other.abs();
        if o.is_zero() {
            d
        } else {
            d.checked_div(&o).unwrap()
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Agree for ApComplex {
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool {
        let d = (self - other).abs();
        if d.is_zero() {
            return true;
        }
        let scale = self.abs().max_ref(&other.abs()).clone();
        match scale.msb_exponent() {
            Some(s) => d.msb_exponent().unwrap() - s <= tol_log2,
            None => false,
        }
    }
}

impl fmt::Debug for ApComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl<'a> Add<&'a ApComplex> for &'a ApComplex {
    type Output = ApComplex;
    fn add(self, rhs: &'a ApComplex) -> ApComplex {
        ApComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a ApComplex> for &'a ApComplex {
    type Output = ApComplex;
    fn sub(self, rhs: &'a ApComplex) -> ApComplex {
        ApComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a ApComplex> for &'a ApComplex {
    type Output = ApComplex;
    fn mul(self, rhs: &'a ApComplex) -> ApComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ApComplex::from_real(&self.re * &rhs.re);
        }
        ApComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Add for ApComplex {
    type Output = ApComplex;
    fn add(self, rhs: ApComplex) -> ApComplex {
        &self + &rhs
    }
}

impl Sub for ApComplex {
    type Output = ApComplex;
    fn sub(self, rhs: ApComplex) -> ApComplex {
        &self - &rhs
    }
}

impl Mul for ApComplex {
    type Output = ApComplex;
    fn mul(self, rhs: ApComplex) -> ApComplex {
        &self * &rhs
    }
}

impl Neg for ApComplex {
    type Output = ApComplex;
    fn neg(self) -> ApComplex {
        ApComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &ApComplex {
    type Output = ApComplex;
    fn neg(self) -> ApComplex {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ApComplex {
        ApComplex::from_f64(re, im, Precision::new(128).unwrap()).unwrap()
    }

    fn close(a: &ApComplex, re: f64, im: f64) {
        let (x, y) = a.to_f64_pair();
        assert!(
            (x - re).abs() < 1e-14 && (y - im).abs() < 1e-14,
            "({x}, {y}) vs ({re}, {im})"
        );
    }

    #[test]
    fn principal_sqrt_branches() {
        close(&c(-4.0, 0.0).sqrt(), 0.0, 2.0);
        close(&c(3.0, 4.0).sqrt(), 2.0, 1.0);
        close(&c(3.0, -4.0).sqrt(), 2.0, -1.0);
        close(&c(-3.0, 4.0).sqrt(), 1.0, 2.0);
        close(&c(-3.0, -4.0).sqrt(), 1.0, -2.0);
    }

    #[test]
    fn log_exp_and_trig() {
        let z = c(1.5, -0.75);
        let back = z.ln().unwrap().exp().unwrap();
        close(&back, 1.5, -0.75);
        close(&c(-1.0, 0.0).ln().unwrap(), 0.0, core::f64::consts::PI);
        // cos(1+i) = cos1 cosh1 - i sin1 sinh1
        let cz = c(1.0, 1.0).cos().unwrap();
        close(&cz, 1f64.cos() * 1f64.cosh(), -(1f64.sin() * 1f64.sinh()));
        let sz = c(1.0, 1.0).sin().unwrap();
        close(&sz, 1f64.sin() * 1f64.cosh(), 1f64.cos() * 1f64.sinh());
    }

    #[test]
    fn division_and_powers() {
        let q = c(1.0, 2.0).checked_div(&c(3.0, -1.0)).unwrap();
        close(&q, 0.1, 0.7);
        assert!(c(1.0, 1.0).checked_div(&c(0.0, 0.0)).is_none());
        close(&c(0.0, 1.0).powi(4).unwrap(), 1.0, 0.0);
        close(&c(0.0, 1.0).pow(&c(2.0, 0.0)).unwrap(), -1.0, 0.0);
        close(&c(2.0, 0.0).powi(-2).unwrap(), 0.25, 0.0);
    }

    #[test]
    fn real_inputs_stay_real() {
        let z = c(2.0, 0.0);
        assert!(z.ln().unwrap().is_real());
        assert!(z.exp().unwrap().is_real());
        assert!(z.sqrt().is_real());
        assert!((&z * &z).is_real());
        assert!(z.cos().unwrap().is_real());
    }
}
