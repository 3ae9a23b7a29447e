use crate::error::{Error, Result};
use crate::numerics::elementary as el;
use crate::numerics::{arccos_principal, ApComplex};

/// A phase function with closed-form first and second derivatives.
pub trait AnalyticPhase {
    /// `(phi(y), phi'(y), phi''(y))`
    fn eval(&self, y: &ApComplex) -> Result<[ApComplex; 3]>;
}

/// `arccos y - y sqrt(1 - y^2)`, the Hermite phase.
#[derive(Copy, Clone, Debug, Default)]
pub struct HermitePhase;

/// `pi sqrt(y)`, the Ismail phase.
#[derive(Copy, Clone, Debug, Default)]
pub struct IsmailPhase;

#[derive(Clone, Debug)]
pub struct ConstantPhase(pub ApComplex);

impl AnalyticPhase for HermitePhase {
    fn eval(&self, y: &ApComplex) -> Result<[ApComplex; 3]> {
        let prec = y.prec();
        let root = (&ApComplex::one(prec) - &(y * y)).sqrt();
        let value = &arccos_principal(y) - &(y * &root);
        let d1 = -root.mul_pow2(1);
        let d2 = y
            .mul_pow2(1)
            .checked_div(&root)
            .ok_or_else(|| Error::domain("Hermite phase at y = +-1"))?;
        Ok([value, d1, d2])
    }
}

impl AnalyticPhase for IsmailPhase {
    fn eval(&self, y: &ApComplex) -> Result<[ApComplex; 3]> {
        let prec = y.prec();
        let pi = ApComplex::from_real(el::pi(prec));
        let r = y.sqrt();
        let value = &pi * &r;
        let d1 = pi
            .checked_div(&r.mul_pow2(1))
            .ok_or_else(|| Error::domain("Ismail phase at y = 0"))?;
        let d2 = -pi.checked_div(&(y * &r).mul_pow2(2)).unwrap();
        Ok([value, d1, d2])
    }
}

impl AnalyticPhase for ConstantPhase {
    fn eval(&self, y: &ApComplex) -> Result<[ApComplex; 3]> {
        let z = ApComplex::zero(y.prec());
        Ok([self.0.with_prec(y.prec()), z.clone(), z])
    }
}

/// How degree and argument shift together in a lemma.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExpansionKind {
    /// `y_pm = (n / (n +- 1))^(1/2) y`, the Hermite scaling
    SqrtScaling,
    /// `y_pm = (n / (n +- 1))^2 y`, the Ismail scaling
    SquareScaling,
}

#[derive(Clone, Debug)]
pub struct LocalExpansion {
    pub lambda: ApComplex,
    pub mu: ApComplex,
    pub kind: ExpansionKind,
}

/// The first and second order phase corrections `(lambda, mu)`.
pub fn local_expansion(
    phi: &dyn AnalyticPhase,
    kind: ExpansionKind,
    y: &ApComplex,
) -> Result<LocalExpansion> {
    let [v, d1, d2] = phi.eval(y)?;
    let y_d1 = y * &d1;
    let y2_d2 = &(y * y) * &d2;
    let (lambda, mu) = match kind {
        ExpansionKind::SqrtScaling => (&v - &y_d1.mul_pow2(-1), (&y2_d2 - &y_d1).mul_pow2(-3)),
        ExpansionKind::SquareScaling => (&v - &y_d1.mul_pow2(1), &y_d1 + &y2_d2.mul_pow2(1)),
    };
    Ok(LocalExpansion { lambda, mu, kind })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Precision;

    fn y(v: f64) -> ApComplex {
        ApComplex::from_f64(v, 0.0, Precision::new(160).unwrap()).unwrap()
    }

    #[test]
    fn hermite_lemma_constants() {
        let e = local_expansion(&HermitePhase, ExpansionKind::SqrtScaling, &y(0.5)).unwrap();
        assert!((e.lambda.re.to_f64() - core::f64::consts::FRAC_PI_3).abs() < 1e-15);
        let mu = 0.5 / (4.0 * 0.75f64.sqrt());
        assert!((e.mu.re.to_f64() - mu).abs() < 1e-15);
    }

    #[test]
    fn ismail_lemma_vanishes() {
        let e = local_expansion(&IsmailPhase, ExpansionKind::SquareScaling, &y(0.3)).unwrap();
        assert!(e.lambda.abs().to_f64() < 1e-40);
        assert!(e.mu.abs().to_f64() < 1e-40);
    }

    #[test]
    fn constant_phase() {
        let c = ConstantPhase(y(1.25));
        let e = local_expansion(&c, ExpansionKind::SqrtScaling, &y(0.4)).unwrap();
        assert_eq!(e.lambda.re.to_f64(), 1.25);
        assert!(e.mu.is_zero());
    }
}
