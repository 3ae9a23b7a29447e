use crate::asymptotics::{
    local_expansion, AnalyticPhase, ExpansionKind, HermitePhase, IsmailPhase,
};
use crate::error::Result;
use crate::numerics::elementary::GUARD;
use crate::numerics::{ApComplex, ApReal, Precision};
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct LemmaRow {
    pub n: u64,
    /// Largest deviation over the four expansion statements.
    pub residual: ApReal,
}

#[derive(Clone, Debug)]
pub struct LemmaTable {
    pub kind: ExpansionKind,
    pub rows: Vec<LemmaRow>,
}

impl LemmaTable {
    /// `residual(n) / residual(2n)` for every `n` whose double is also in
    /// the table. An `O(n^-2)` residual gives values near 4.
    pub fn doubling_ratios(&self) -> Vec<(u64, f64)> {
        self.rows
            .iter()
            .filter_map(|r| {
                let next = self.rows.iter().find(|s| s.n == 2 * r.n)?;
                let q = r.residual.checked_div(&next.residual)?;
                Some((r.n, q.to_f64()))
            })
            .collect()
    }

    pub fn max_residual(&self) -> Option<&ApReal> {
        self.rows
            .iter()
            .map(|r| &r.residual)
            .reduce(|a, b| a.max_ref(b))
    }
}

/// `y_pm` for the given kind and shift `s = +-1`.
fn shifted(kind: ExpansionKind, n: u64, s: i64, y: &ApComplex) -> Result<ApComplex> {
    let prec = y.prec();
    let q = ApReal::from_u64(n, prec)
        .checked_div(&ApReal::from_i64(n as i64 + s, prec))
        .expect("n + s > 0");
    let f = match kind {
        ExpansionKind::SqrtScaling => q.sqrt()?,
        ExpansionKind::SquareScaling => &q * &q,
    };
    Ok(y.scale(&f))
}

/// Residual of the lemma's four expansions at one `n`.
pub fn lemma_residual(
    phi: &dyn AnalyticPhase,
    kind: ExpansionKind,
    y: &ApComplex,
    n: u64,
) -> Result<ApReal> {
    let prec = y.prec();
    let w = prec.plus(GUARD);
    let y = y.with_prec(w);
    let e = local_expansion(phi, kind, &y)?;
    let nn = ApComplex::from_real(ApReal::from_u64(n, w));
    let base = &nn * &phi.eval(&y)?[0];
    let (sn, cn) = base.sin_cos()?;
    let (sl, cl) = e.lambda.sin_cos()?;
    let mu_n = e.mu.checked_div(&nn).expect("n > 0");
    let mut worst = ApReal::zero(w);
    for s in [1i64, -1] {
        let sc = ApComplex::from_real(ApReal::from_i64(s, w));
        let ys = shifted(kind, n, s, &y)?;
        let arg = &ApComplex::from_real(ApReal::from_i64(n as i64 + s, w)) * &phi.eval(&ys)?[0];
        let (ls, lc) = arg.sin_cos()?;
        // cos(l) -+ (mu/n) sin(l)  and  sin(l) +- (mu/n) cos(l)
        let p = &cl - &(&sc * &(&mu_n * &sl));
        let q = &sl + &(&sc * &(&mu_n * &cl));
        let rc = &(&cn * &p) - &(&sc * &(&sn * &q));
        let rs = &(&sn * &p) + &(&sc * &(&cn * &q));
        for d in [(&lc - &rc).abs(), (&ls - &rs).abs()] {
            if d > worst {
                worst = d;
            }
        }
    }
    Ok(worst.with_prec(prec))
}

/// Residual table for the built-in phase of `kind` (Hermite phase for the
/// square-root scaling, `pi sqrt(y)` for the square scaling).
pub fn lemma_residual_check(kind: ExpansionKind, y: &ApComplex, ns: &[u64]) -> Result<LemmaTable> {
    let phi: &dyn AnalyticPhase = match kind {
        ExpansionKind::SqrtScaling => &HermitePhase,
        ExpansionKind::SquareScaling => &IsmailPhase,
    };
    lemma_residual_table(phi, kind, y, ns)
}

pub fn lemma_residual_table(
    phi: &dyn AnalyticPhase,
    kind: ExpansionKind,
    y: &ApComplex,
    ns: &[u64],
) -> Result<LemmaTable> {
    let rows = ns
        .iter()
        .map(|&n| {
            Ok(LemmaRow {
                n,
                residual: lemma_residual(phi, kind, y, n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaTable { kind, rows })
}

/// Precision-relative bound used for residuals that vanish identically.
pub fn rounding_bound(prec: Precision) -> ApReal {
    ApReal::one(prec).mul_pow2(32 - i64::from(prec.bits()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::ConstantPhase;

    fn y(v: f64) -> ApComplex {
        ApComplex::from_f64(v, 0.0, Precision::new(256).unwrap()).unwrap()
    }

    #[test]
    fn sqrt_kind_decays_quadratically() {
        let t = lemma_residual_check(ExpansionKind::SqrtScaling, &y(0.5), &[64, 128, 256]).unwrap();
        for (_, r) in t.doubling_ratios() {
            assert!((3.0..=5.0).contains(&r), "{r}");
        }
    }

    #[test]
    fn square_kind_is_exact() {
        let t = lemma_residual_check(ExpansionKind::SquareScaling, &y(0.5), &[64, 128]).unwrap();
        assert!(*t.max_residual().unwrap() <= rounding_bound(Precision::new(256).unwrap()));
    }

    #[test]
    fn constant_phase_has_no_residual() {
        let c = ConstantPhase(y(0.7));
        let t = lemma_residual_table(&c, ExpansionKind::SqrtScaling, &y(0.5), &[10, 20]).unwrap();
        assert!(t.max_residual().unwrap().to_f64() < 1e-60);
    }
}
