use super::complex::ApComplex;
use super::elementary as el;
use super::precision::{Agree, Precision};
use super::real::ApReal;
use crate::error::{Error, Result};
use core::ops::Mul;

/// Unit factor of a [`SignedLog`].
#[derive(Clone, Debug, PartialEq)]
pub enum Phase {
    Zero,
    Plus,
    Minus,
    /// Unit-modulus complex number; never real.
    Unit(ApComplex),
}

impl Phase {
    fn from_unit(u: ApComplex) -> Phase {
        if u.im.is_zero() {
            if u.re.is_negative() {
                Phase::Minus
            } else {
                Phase::Plus
            }
        } else {
            Phase::Unit(u)
        }
    }

    pub fn to_complex(&self, prec: Precision) -> ApComplex {
        match self {
            Phase::Zero => ApComplex::zero(prec),
            Phase::Plus => ApComplex::one(prec),
            Phase::Minus => -ApComplex::one(prec),
            Phase::Unit(u) => u.with_prec(prec),
        }
    }

    /// Argument in `(-pi, pi]`; zero for `Zero`.
    pub fn angle(&self, prec: Precision) -> ApReal {
        match self {
            Phase::Zero | Phase::Plus => ApReal::zero(prec),
            Phase::Minus => el::pi(prec),
            Phase::Unit(u) => u.with_prec(prec).arg(),
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, Phase::Unit(_))
    }
}

/// A value stored as `phase * exp(logmod)`, so magnitudes like
/// `(n/e)^(2n)` never leave the exponent range.
#[derive(Clone, Debug)]
pub struct SignedLog {
    phase: Phase,
    logmod: ApReal,
}

impl SignedLog {
    pub fn zero(prec: Precision) -> Self {
        SignedLog {
            phase: Phase::Zero,
            logmod: ApReal::zero(prec),
        }
    }

    pub fn one(prec: Precision) -> Self {
        SignedLog {
            phase: Phase::Plus,
            logmod: ApReal::zero(prec),
        }
    }

    pub fn from_real(x: &ApReal) -> Result<Self> {
        let prec = x.prec();
        if x.is_zero() {
            return Ok(Self::zero(prec));
        }
        Ok(SignedLog {
            phase: if x.is_negative() {
                Phase::Minus
            } else {
                Phase::Plus
            },
            logmod: el::ln(&x.abs())?,
        })
    }

    pub fn from_complex(z: &ApComplex) -> Result<Self> {
        if z.is_real() {
            return Self::from_real(&z.re);
        }
        let m = z.abs();
        Ok(SignedLog {
            phase: Phase::from_unit(ApComplex::new(
                z.re.checked_div(&m).ok_or(Error::DivisionByZero)?,
                z.im.checked_div(&m).ok_or(Error::DivisionByZero)?,
            )),
            logmod: el::ln(&m)?,
        })
    }

    /// `exp(l)` for complex `l`.
    pub fn from_log(l: &ApComplex) -> Self {
        let phase = if l.im.is_zero() {
            Phase::Plus
        } else {
            Phase::from_unit(ApComplex::cis(&l.im))
        };
        SignedLog {
            phase,
            logmod: l.re.clone(),
        }
    }

    pub fn phase(&self) -> &Phase {
        &self.phase
    }

    pub fn logmod(&self) -> &ApReal {
        &self.logmod
    }

    pub fn prec(&self) -> Precision {
        self.logmod.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.phase == Phase::Zero
    }

    /// Real sign (`1`, `-1`, `0`), or `None` for a genuinely complex value.
    pub fn sign(&self) -> Option<i8> {
        match self.phase {
            Phase::Zero => Some(0),
            Phase::Plus => Some(1),
            Phase::Minus => Some(-1),
            Phase::Unit(_) => None,
        }
    }

    /// Same value with modulus replaced by `|self|`.
    pub fn abs(&self) -> Self {
        SignedLog {
            phase: if self.is_zero() {
                Phase::Zero
            } else {
                Phase::Plus
            },
            logmod: self.logmod.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        let phase = match &self.phase {
            Phase::Zero => Phase::Zero,
            Phase::Plus => Phase::Minus,
            Phase::Minus => Phase::Plus,
            Phase::Unit(u) => Phase::Unit(-u),
        };
        SignedLog {
            phase,
            logmod: self.logmod.clone(),
        }
    }

    pub fn powi(&self, n: i64) -> Self {
        let prec = self.prec();
        if n == 0 {
            return Self::one(prec);
        }
        let phase = match &self.phase {
            Phase::Zero => Phase::Zero,
            Phase::Plus => Phase::Plus,
            Phase::Minus if n % 2 == 0 => Phase::Plus,
            Phase::Minus => Phase::Minus,
            Phase::Unit(u) => Phase::from_unit(u.powi(n).expect("unit modulus")),
        };
        SignedLog {
            phase,
            logmod: &self.logmod * &ApReal::from_i64(n, prec),
        }
    }

    /// Back to an ordinary complex number. Fails when the modulus is out of
    /// the exponent range.
    pub fn to_complex(&self) -> Result<ApComplex> {
        let prec = self.prec();
        if self.is_zero() {
            return Ok(ApComplex::zero(prec));
        }
        let m = el::exp(&self.logmod)?;
        Ok(self.phase.to_complex(prec).scale(&m))
    }

    /// `log10 |value|`; `None` for zero.
    pub fn log10(&self) -> Option<ApReal> {
        if self.is_zero() {
            return None;
        }
        let prec = self.prec();
        let ln10 = el::ln(&ApReal::from_u64(10, prec)).unwrap();
        Some(self.logmod.checked_div(&ln10).unwrap())
    }

    pub fn with_prec(&self, prec: Precision) -> Self {
        SignedLog {
            phase: match &self.phase {
                Phase::Unit(u) => Phase::Unit(u.with_prec(prec)),
                p => p.clone(),
            },
            logmod: self.logmod.with_prec(prec),
        }
    }
}

impl<'a> Mul<&'a SignedLog> for &'a SignedLog {
    type Output = SignedLog;
    fn mul(self, rhs: &'a SignedLog) -> SignedLog {
        let phase = match (&self.phase, &rhs.phase) {
            (Phase::Zero, _) | (_, Phase::Zero) => Phase::Zero,
            (Phase::Plus, p) | (p, Phase::Plus) => p.clone(),
            (Phase::Minus, Phase::Minus) => Phase::Plus,
            (Phase::Minus, Phase::Unit(u)) | (Phase::Unit(u), Phase::Minus) => Phase::Unit(-u),
            (Phase::Unit(a), Phase::Unit(b)) => Phase::from_unit(a * b),
        };
        SignedLog {
            phase,
            logmod: &self.logmod + &rhs.logmod,
        }
    }
}

impl Mul for SignedLog {
    type Output = SignedLog;
    fn mul(self, rhs: SignedLog) -> SignedLog {
        &self * &rhs
    }
}

/// `|approx / exact - 1|`, evaluated in the log domain.
///
/// With `d` the log-modulus difference and `alpha` the phase difference,
/// `approx/exact - 1 = expm1(d) e^(i alpha) + (e^(i alpha) - 1)` and the
/// second term is formed from `sin(alpha/2)` to avoid cancellation.
pub fn sl_rel_err(exact: &SignedLog, approx: &SignedLog) -> Result<ApReal> {
    let prec = exact.prec().max(approx.prec());
    if exact.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if approx.is_zero() {
        return Ok(ApReal::one(prec));
    }
    let work = prec.plus(el::GUARD);
    let d = &approx.logmod.with_prec(work) - &exact.logmod.with_prec(work);
    let em1 = el::exp_m1(&d)?;
    let out = match (exact.sign(), approx.sign()) {
        (Some(a), Some(b)) if a == b => em1.abs(),
        (Some(_), Some(_)) => &el::exp(&d)? + &ApReal::one(work),
        _ => {
            let alpha = &approx.phase.angle(work) - &exact.phase.angle(work);
            let (s, c) = el::sin_cos(&alpha);
            let (sh, _) = el::sin_cos(&alpha.mul_pow2(-1));
            let unit_m1 = ApComplex::new(-(&sh * &sh).mul_pow2(1), s.clone());
            let rot = ApComplex::new(c, s).scale(&em1);
            (&rot + &unit_m1).abs()
        }
    };
    Ok(out.with_prec(prec))
}

impl Agree for SignedLog {
    fn agrees(&self, other: &Self, tol_log2: i64) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => match sl_rel_err(other, self) {
                Ok(r) => r.msb_exponent().is_none_or(|m| m <= tol_log2),
                Err(_) => false,
            },
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    fn real(v: f64) -> SignedLog {
        SignedLog::from_real(&ApReal::from_f64(v, p()).unwrap()).unwrap()
    }

    #[test]
    fn relative_error_examples() {
        let r = sl_rel_err(&real(2.0), &real(2.02)).unwrap().to_f64();
        assert!((r - 0.01).abs() < 1e-15);
        assert!(sl_rel_err(&real(3.5), &real(3.5)).unwrap().is_zero());
        let r = sl_rel_err(&real(5.0), &real(-5.0)).unwrap().to_f64();
        assert!((r - 2.0).abs() < 1e-15);
        assert_eq!(
            sl_rel_err(&SignedLog::zero(p()), &real(1.0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn huge_magnitudes_compare() {
        let l = ApReal::from_u64(10_000, p());
        let a = SignedLog::from_log(&ApComplex::from_real(l.clone()));
        let b = SignedLog::from_log(&ApComplex::from_real(
            &l + &ApReal::from_f64(1e-3, p()).unwrap(),
        ));
        let r = sl_rel_err(&a, &b).unwrap().to_f64();
        assert!((r - 1e-3f64.exp_m1()).abs() < 1e-15);
    }

    #[test]
    fn complex_round_trip_and_product() {
        let z = ApComplex::from_f64(-1.5, 2.0, p()).unwrap();
        let w = ApComplex::from_f64(0.25, -3.0, p()).unwrap();
        let zs = SignedLog::from_complex(&z).unwrap();
        let ws = SignedLog::from_complex(&w).unwrap();
        let prod = (&zs * &ws).to_complex().unwrap();
        let direct = &z * &w;
        assert!(prod.rel_diff(&direct).to_f64() < 1e-30);
        let small_turn =
            SignedLog::from_complex(&ApComplex::from_f64(1.0, 1e-20, p()).unwrap()).unwrap();
        let r = sl_rel_err(&SignedLog::one(p()), &small_turn)
            .unwrap()
            .to_f64();
        assert!((r - 1e-20).abs() < 1e-33);
    }

    #[test]
    fn powers_follow_signs() {
        let m = real(-2.0);
        assert_eq!(m.powi(3).sign(), Some(-1));
        assert_eq!(m.powi(4).sign(), Some(1));
        assert!((m.powi(4).logmod().to_f64() - 16f64.ln()).abs() < 1e-15);
    }
}
