//! Closed-form integrals behind the outer asymptotics, checked by
//! quadrature.

use crate::error::Result;
use crate::numerics::{integrate, ApComplex, ApReal, Precision, QuadOptions};
use alloc::vec::Vec;
use core::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `int_0^1 log(y + sqrt(y^2 - t)) dt = y^2 - 1/2 - y sqrt(y^2-1) + log(y + sqrt(y^2-1))`
    HermiteLog,
    /// `int_0^1 dt / (4 (y^2 - t)) = log(y^2 / (y^2 - 1)) / 4`
    HermiteCorrection,
    /// `int_0^1 log(y - t^2) dt = (sqrt y + 1) log(sqrt y + 1) - (sqrt y - 1) log(sqrt y - 1) - 2`
    IsmailLog,
    /// `int_0^1 2t / (y - t^2) dt = log(y / (y - 1))`
    IsmailCorrection,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::HermiteLog,
        Identity::HermiteCorrection,
        Identity::IsmailLog,
        Identity::IsmailCorrection,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Identity::HermiteLog => "a",
            Identity::HermiteCorrection => "b",
            Identity::IsmailLog => "c",
            Identity::IsmailCorrection => "d",
        }
    }

    fn integrand(self, y: &ApComplex, t: &ApReal) -> Result<ApComplex> {
        let prec = y.prec();
        let t = ApComplex::from_real(t.clone());
        let y2 = y * y;
        Ok(match self {
            Identity::HermiteLog => (y + &(&y2 - &t).sqrt()).ln()?,
            Identity::HermiteCorrection => (&y2 - &t).mul_pow2(2).recip().expect("y^2 != t"),
            Identity::IsmailLog => (y - &(&t * &t)).ln()?,
            Identity::IsmailCorrection => t
                .mul_pow2(1)
                .checked_div(&(y - &(&t * &t)))
                .expect("y != t^2"),
        })
        .map(|v: ApComplex| v.with_prec(prec))
    }

    fn closed_form(self, y: &ApComplex) -> Result<ApComplex> {
        let prec = y.prec();
        let one = ApComplex::one(prec);
        let y2 = y * y;
        Ok(match self {
            Identity::HermiteLog => {
                let s = (&y2 - &one).sqrt();
                &(&(&y2 - &one.mul_pow2(-1)) - &(y * &s)) + &(y + &s).ln()?
            }
            Identity::HermiteCorrection => {
                y2.checked_div(&(&y2 - &one)).unwrap().ln()?.mul_pow2(-2)
            }
            Identity::IsmailLog => {
                let r = y.sqrt();
                let rp = &r + &one;
                let rm = &r - &one;
                &(&(&rp * &rp.ln()?) - &(&rm * &rm.ln()?)) - &one.mul_pow2(1)
            }
            Identity::IsmailCorrection => y.checked_div(&(y - &one)).unwrap().ln()?,
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug)]
pub struct QuadCheck {
    pub identity: Identity,
    pub y: ApComplex,
    pub lhs: ApComplex,
    pub rhs: ApComplex,
    pub diff: ApReal,
    pub pass: bool,
}

/// Checks one identity at one `y`; passes when `|lhs - rhs| <= threshold`.
pub fn quadrature_check(
    identity: Identity,
    y: &ApComplex,
    threshold: &ApReal,
) -> Result<QuadCheck> {
    let prec = y.prec();
    let tol = threshold.mul_pow2(-10);
    let zero = ApReal::zero(prec);
    let one = ApReal::one(prec);
    let lhs: ApComplex = integrate(
        |t| identity.integrand(y, t),
        &zero,
        &one,
        &QuadOptions::new(tol),
    )?;
    let rhs = identity.closed_form(y)?;
    let diff = (&lhs - &rhs).abs();
    let pass = diff <= *threshold;
    Ok(QuadCheck {
        identity,
        y: y.clone(),
        lhs,
        rhs,
        diff,
        pass,
    })
}

/// The sample points: every identity at `y = 1.5, 2, 4, 2+i`, plus the
/// large-argument cancellation check of the Ismail log identity at `y = 1e6`.
pub fn sample_points(prec: Precision) -> Vec<(Identity, ApComplex)> {
    let pts = [(1.5, 0.0), (2.0, 0.0), (4.0, 0.0), (2.0, 1.0)];
    let mut out = Vec::new();
    for id in Identity::ALL {
        for (re, im) in pts {
            out.push((id, ApComplex::from_f64(re, im, prec).unwrap()));
        }
    }
    out.push((
        Identity::IsmailLog,
        ApComplex::from_f64(1e6, 0.0, prec).unwrap(),
    ));
    out
}

pub fn quadrature_suite(prec: Precision, threshold: &ApReal) -> Result<Vec<QuadCheck>> {
    sample_points(prec)
        .iter()
        .map(|(id, y)| quadrature_check(*id, y, threshold))
        .collect()
}

/// `10^-20`, the acceptance level for the identities.
pub fn default_threshold(prec: Precision) -> ApReal {
    ApReal::from_ratio(&crate::numerics::parse_rational("1e-20").unwrap(), prec)
}
