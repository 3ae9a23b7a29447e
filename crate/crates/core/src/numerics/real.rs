use super::precision::{Agree, Precision};
use crate::error::{Error, Result};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision binary floating point number.
///
/// The value is `(-1)^neg * mag * 2^exp` where `mag` is either zero or has
/// exactly `prec` significant bits. Every operation rounds to nearest, ties to
/// even. The exponent is an `i64`, so magnitudes like `e^(10^6)` are ordinary
/// finite values.
#[derive(Clone)]
pub struct ApReal {
    neg: bool,
    mag: BigUint,
    exp: i64,
    prec: Precision,
}

impl ApReal {
    pub fn zero(prec: Precision) -> Self {
        ApReal {
            neg: false,
            mag: BigUint::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_u64(1, prec)
    }

    /// Rounds `(-1)^neg * mag * 2^exp` to `prec` bits.
    pub(crate) fn from_parts(neg: bool, mag: BigUint, exp: i64, prec: Precision) -> Self {
        if mag.is_zero() {
            return Self::zero(prec);
        }
        let p = u64::from(prec.bits());
        let bits = mag.bits();
        let (mag, exp) = match bits.cmp(&p) {
            Ordering::Greater => {
                let shift = bits - p;
                let mut q = &mag >> shift;
                let half = mag.bit(shift - 1);
                let sticky = shift >= 2 && mag.trailing_zeros().unwrap_or(0) < shift - 1;
                if half && (sticky || q.bit(0)) {
                    q += 1u32;
                }
                let mut e = exp + shift as i64;
                if q.bits() > p {
                    q >>= 1u32;
                    e += 1;
                }
                (q, e)
            }
            Ordering::Less => {
                let shift = p - bits;
                (mag << shift, exp - shift as i64)
            }
            Ordering::Equal => (mag, exp),
        };
        ApReal {
            neg,
            mag,
            exp,
            prec,
        }
    }

    pub(crate) fn from_bigint_exp(v: BigInt, exp: i64, prec: Precision) -> Self {
        let (sign, mag) = v.into_parts();
        Self::from_parts(sign == Sign::Minus, mag, exp, prec)
    }

    pub fn from_u64(v: u64, prec: Precision) -> Self {
        Self::from_parts(false, BigUint::from(v), 0, prec)
    }

    pub fn from_i64(v: i64, prec: Precision) -> Self {
        Self::from_parts(v < 0, BigUint::from(v.unsigned_abs()), 0, prec)
    }

    pub fn from_bigint(v: &BigInt, prec: Precision) -> Self {
        Self::from_bigint_exp(v.clone(), 0, prec)
    }

    /// Exact conversion of a finite `f64`, then rounding to `prec`.
    pub fn from_f64(v: f64, prec: Precision) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::invalid("non-finite f64"));
        }
        if v == 0.0 {
            return Ok(Self::zero(prec));
        }
        let bits = v.to_bits();
        let neg = bits >> 63 == 1;
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Ok(Self::from_parts(neg, BigUint::from(mant), exp, prec))
    }

    /// Rounded quotient of a rational.
    pub fn from_ratio(q: &BigRational, prec: Precision) -> Self {
        let num = q.numer();
        if num.is_zero() {
            return Self::zero(prec);
        }
        let neg = num.is_negative() != q.denom().is_negative();
        let n = num.magnitude();
        let d = q.denom().magnitude();
        // quotient needs at least prec + 2 bits before rounding
        let want = u64::from(prec.bits()) + 2;
        let shift = (want + d.bits()).saturating_sub(n.bits()) as i64;
        let scaled = if shift >= 0 {
            n << shift as u64
        } else {
            n.clone()
        };
        let (q, r) = scaled.div_rem(d);
        // sticky bit keeps round-to-nearest exact
        let q = (q << 1u32) | BigUint::from(u32::from(!r.is_zero()));
        Self::from_parts(neg, q, -shift - 1, prec)
    }

    /// Exact rational value of this float.
    pub fn to_ratio(&self) -> BigRational {
        let m = BigInt::from_biguint(
            if self.neg { Sign::Minus } else { Sign::Plus },
            self.mag.clone(),
        );
        if self.exp >= 0 {
            BigRational::from_integer(m << self.exp as u64)
        } else {
            BigRational::new(m, BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn prec(&self) -> Precision {
        self.prec
    }

    /// Re-rounds to another precision.
    pub fn with_prec(&self, prec: Precision) -> Self {
        Self::from_parts(self.neg, self.mag.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg && !self.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.neg && !self.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        }
    }

    /// `m` with `2^(m-1) <= |x| < 2^m`, or `None` for zero.
    pub fn msb_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mag.bits() as i64)
        }
    }

    pub(crate) fn raw_parts(&self) -> (bool, &BigUint, i64) {
        (self.neg, &self.mag, self.exp)
    }

    pub fn abs(&self) -> Self {
        ApReal {
            neg: false,
            ..self.clone()
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        ApReal {
            exp: self.exp + k,
            ..self.clone()
        }
    }

    /// Nearest `f64` (saturating to infinity outside the `f64` range).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = Self::from_parts(self.neg, self.mag.clone(), self.exp, Precision::clamped(53));
        let m = r.mag.to_u64().unwrap_or(u64::MAX) as f64;
        let mut e = r.exp;
        let mut v = m;
        while e > 0 {
            let step = e.min(1000);
            v *= num_traits::Float::powi(2f64, step as i32);
            e -= step;
            if v.is_infinite() {
                break;
            }
        }
        while e < 0 {
            let step = (-e).min(1000);
            v *= num_traits::Float::powi(2f64, -(step as i32));
            e += step;
            if v == 0.0 {
                break;
            }
        }
        if r.neg {
            -v
        } else {
            v
        }
    }

    /// Integer nearest to the value (ties away from zero).
    pub fn round_to_bigint(&self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let mag = if self.exp >= 0 {
            &self.mag << self.exp as u64
        } else {
            let sh = (-self.exp) as u64;
            (&self.mag + (BigUint::one() << (sh - 1))) >> sh
        };
        BigInt::from_biguint(if self.neg { Sign::Minus } else { Sign::Plus }, mag)
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        let prec = self.prec.max(other.prec);
        let oneg = other.neg ^ negate_other;
        if other.is_zero() {
            return self.with_prec(prec);
        }
        if self.is_zero() {
            return Self::from_parts(oneg, other.mag.clone(), other.exp, prec);
        }
        let (hi, hi_neg, lo, lo_neg) = if self.msb_exponent() >= other.msb_exponent() {
            (self, self.neg, other, oneg)
        } else {
            (other, oneg, self, self.neg)
        };
        let p = i64::from(prec.bits());
        // a low operand entirely below the rounding point only matters as a sticky bit
        let floor_exp = hi.msb_exponent().unwrap() - p - 4;
        let (lo_mag, lo_exp) = if lo.msb_exponent().unwrap() < floor_exp {
            (BigUint::one(), floor_exp - 1)
        } else {
            (lo.mag.clone(), lo.exp)
        };
        let base = hi.exp.min(lo_exp);
        let a = &hi.mag << (hi.exp - base) as u64;
        let b = lo_mag << (lo_exp - base) as u64;
        if hi_neg == lo_neg {
            Self::from_parts(hi_neg, a + b, base, prec)
        } else if a >= b {
            Self::from_parts(hi_neg, a - b, base, prec)
        } else {
            Self::from_parts(lo_neg, b - a, base, prec)
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        Self::from_parts(
            self.neg ^ other.neg,
            &self.mag * &other.mag,
            self.exp + other.exp,
            prec,
        )
    }

    /// Quotient, or `None` when `other` is zero.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return Some(Self::zero(prec));
        }
        let want = u64::from(prec.bits()) + 2;
        let shift = (want + other.mag.bits()).saturating_sub(self.mag.bits());
        let (q, r) = (&self.mag << shift).div_rem(&other.mag);
        let q = (q << 1u32) | BigUint::from(u32::from(!r.is_zero()));
        Some(Self::from_parts(
            self.neg ^ other.neg,
            q,
            self.exp - other.exp - shift as i64 - 1,
            prec,
        ))
    }

    pub fn recip(&self) -> Option<Self> {
        Self::one(self.prec).checked_div(self)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.neg {
            return Err(Error::domain("square root of a negative real"));
        }
        let p = u64::from(self.prec.bits());
        // radicand needs 2p + 4 bits and an even exponent
        let mut shift = (2 * p + 4).saturating_sub(self.mag.bits()) as i64;
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mag << shift as u64;
        let r = num_integer::Roots::sqrt(&m);
        let exact = &r * &r == m;
        let r = (r << 1u32) | BigUint::from(u32::from(!exact));
        Ok(Self::from_parts(
            false,
            r,
            (self.exp - shift) / 2 - 1,
            self.prec,
        ))
    }

    /// Integer power by repeated squaring with guard bits.
    pub fn powi(&self, n: i64) -> Option<Self> {
        let prec = self.prec;
        let work = prec.plus(32 + 64 - n.unsigned_abs().leading_zeros());
        let mut base = self.with_prec(work);
        let mut acc = Self::one(work);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            k >>= 1;
        }
        let out = if n < 0 { acc.recip()? } else { acc };
        Some(out.with_prec(prec))
    }

    /// Relative distance `|self - other| / |other|` (absolute if `other` is 0).
    pub fn rel_diff(&self, other: &Self) -> Self {
        let d = (self - other).abs();
        if other.is_zero() {
            d
        } else {
            d.checked_div(&other.abs()).unwrap()
        }
    }

    pub fn max_ref<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Scientific decimal rendering with `digits` significant digits,
    /// e.g. `5.3241016259282512e2`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            let mut s = String::from("0.");
            s.extend(core::iter::repeat_n('0', digits - 1));
            s.push_str("e0");
            return s;
        }
        let msb = self.msb_exponent().unwrap();
        // estimate of floor(log10 |x|), corrected below
        let mut e10 =
            num_traits::Float::floor((msb - 1) as f64 * core::f64::consts::LOG10_2) as i64;
        let ten = BigUint::from(10u32);
        let num_abs = |e10: i64| -> BigUint {
            // round(|x| * 10^(digits - 1 - e10))
            let s = digits as i64 - 1 - e10;
            let mut num = self.mag.clone();
            let mut den = BigUint::one();
            if s >= 0 {
                num *= num_traits::pow(ten.clone(), s as usize);
            } else {
                den *= num_traits::pow(ten.clone(), (-s) as usize);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            (num * 2u32 + &den) / (den * 2u32)
        };
        let mut n = num_abs(e10);
        let limit = num_traits::pow(ten.clone(), digits);
        let floor = num_traits::pow(ten.clone(), digits - 1);
        while n >= limit {
            e10 += 1;
            n = num_abs(e10);
        }
        while n < floor {
            e10 -= 1;
            n = num_abs(e10);
        }
        let ds = n.to_str_radix(10);
        let mut out = String::new();
        if self.neg {
            out.push('-');
        }
        out.push_str(&ds[..1]);
        if digits > 1 {
            out.push('.');
            out.push_str(&ds[1..]);
        }
        out.push('e');
        out.push_str(&alloc::format!("{e10}"));
        out
    }

    /// Sum of a slice at the precision of the first element.
    pub fn sum<'a, I: IntoIterator<Item = &'a ApReal>>(prec: Precision, it: I) -> Self {
        it.into_iter().fold(Self::zero(prec), |acc, x| &acc + x)
    }
}

impl PartialEq for ApReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for ApReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl ApReal {
    fn cmp_value(&self, other: &Self) -> Ordering {
        match (self.signum(), other.signum()) {
            (a, b) if a != b => a.cmp(&b),
            (0, _) => Ordering::Equal,
            (s, _) => {
                let mag = match self.msb_exponent().cmp(&other.msb_exponent()) {
                    Ordering::Equal => {
                        let base = self.exp.min(other.exp);
                        let a = &self.mag << (self.exp - base) as u64;
                        let b = &other.mag << (other.exp - base) as u64;
                        a.cmp(&b)
                    }
                    o => o,
                };
                if s < 0 {
                    mag.reverse()
                } else {
                    mag
                }
            }
        }
    }
}

impl fmt::Debug for ApReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_sci_string(20), self.prec.bits())
    }
}

impl fmt::Display for ApReal {
    /// Shows as many decimal digits as the precision carries, or the
    /// formatter's precision when one is given.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or_else(|| (f64::from(self.prec.bits()) * core::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl Agree for ApReal {
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        let d = (self - other).abs();
        if d.is_zero() {
            return true;
        }
        let scale = self.abs().max_ref(&other.abs()).clone();
        d.msb_exponent().unwrap() - scale.msb_exponent().unwrap() <= tol_log2
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a ApReal> for &'a ApReal {
            type Output = ApReal;
            fn $method(self, rhs: &'a ApReal) -> ApReal {
                let f: fn(&ApReal, &ApReal) -> ApReal = $body;
                f(self, rhs)
            }
        }
        impl $tr<ApReal> for ApReal {
            type Output = ApReal;
            fn $method(self, rhs: ApReal) -> ApReal {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a ApReal> for ApReal {
            type Output = ApReal;
            fn $method(self, rhs: &'a ApReal) -> ApReal {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<ApReal> for &'a ApReal {
            type Output = ApReal;
            fn $method(self, rhs: ApReal) -> ApReal {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
// Panics on division by zero, like integer division; use `checked_div` otherwise.
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("ApReal division by zero"));

impl Neg for ApReal {
    type Output = ApReal;
    fn neg(mut self) -> ApReal {
        if !self.is_zero() {
            self.neg = !self.neg;
        }
        self
    }
}

impl Neg for &ApReal {
    type Output = ApReal;
    fn neg(self) -> ApReal {
        -(self.clone())
    }
}

/// Parses a decimal literal such as `-1.25`, `.5`, `3e-2` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::invalid(alloc::format!("not a decimal literal: {s:?}"));
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(i) => (&body[..i], &body[i + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
    let digits = core::str::from_utf8(&digits).map_err(|_| bad())?;
    let mut num = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
    if neg {
        num = -num;
    }
    let scale = exp10 - frac_part.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(bad());
    }
    let ten = BigInt::from(10u32);
    Ok(if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    })
}
