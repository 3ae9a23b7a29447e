use super::complex::ApComplex;
use super::precision::Precision;
use super::real::ApReal;
use crate::error::{Error, Result};
use alloc::vec::Vec;

/// Values the quadrature can accumulate.
pub trait QuadValue: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, k: &ApReal) -> Self;
    /// Binary exponent of the magnitude, `None` for zero.
    fn magnitude_exponent(&self) -> Option<i64>;
}

impl QuadValue for ApReal {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, k: &ApReal) -> Self {
        self * k
    }
    fn magnitude_exponent(&self) -> Option<i64> {
        self.msb_exponent()
    }
}

impl QuadValue for ApComplex {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn scale(&self, k: &ApReal) -> Self {
        ApComplex::scale(self, k)
    }
    fn magnitude_exponent(&self) -> Option<i64> {
        match (self.re.msb_exponent(), self.im.msb_exponent()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuadOptions {
    /// Absolute tolerance on successive estimates.
    pub tol: ApReal,
    pub max_doublings: u32,
    /// Distance pulled in from both endpoints.
    pub inset: Option<ApReal>,
}

impl QuadOptions {
    pub fn new(tol: ApReal) -> Self {
        QuadOptions {
            tol,
            max_doublings: 24,
            inset: None,
        }
    }

    /// Options for integrands singular at an endpoint: inset `2^(-prec/2)`.
    pub fn singular_endpoints(tol: ApReal, prec: Precision) -> Self {
        let inset = ApReal::one(prec).mul_pow2(-i64::from(prec.bits() / 2));
        QuadOptions {
            inset: Some(inset),
            ..Self::new(tol)
        }
    }
}

/// Composite trapezoid rule with panel doubling. The trapezoid sequence is
/// Richardson-extrapolated (Romberg) and the iteration stops once successive
/// extrapolated estimates differ by less than `opts.tol`.
pub fn integrate<T, F>(mut f: F, a: &ApReal, b: &ApReal, opts: &QuadOptions) -> Result<T>
where
    T: QuadValue,
    F: FnMut(&ApReal) -> Result<T>,
{
    let (a, b) = match &opts.inset {
        Some(e) => (a + e, b - e),
        None => (a.clone(), b.clone()),
    };
    let h0 = &b - &a;
    let half = ApReal::one(a.prec()).mul_pow2(-1);
    let mut trap = f(&a)?.add(&f(&b)?).scale(&(&h0 * &half));
    let mut row: Vec<T> = alloc::vec![trap.clone()];
    let tol_exp = opts.tol.msb_exponent();
    for level in 1..=opts.max_doublings {
        // new midpoints at odd multiples of h0 / 2^level
        let panels = 1u64 << (level - 1);
        let h = h0.mul_pow2(-i64::from(level));
        let mut mid: Option<T> = None;
        for i in 0..panels {
            let x = &a + &(&h * &ApReal::from_u64(2 * i + 1, a.prec()));
            let v = f(&x)?;
            mid = Some(match mid {
                Some(m) => m.add(&v),
                None => v,
            });
        }
        trap = trap
            .scale(&half)
            .add(&mid.expect("at least one panel").scale(&h));
        let mut next: Vec<T> = Vec::with_capacity(row.len() + 1);
        next.push(trap.clone());
        for (j, prev) in row.iter().enumerate() {
            // R(i, j+1) = R(i, j) + (R(i, j) - R(i-1, j)) / (4^(j+1) - 1)
            let denom = ApReal::from_u64((1u64 << (2 * (j + 1))) - 1, a.prec());
            let cur = &next[j];
            let d = cur.sub(prev).scale(&denom.recip().unwrap());
            next.push(cur.add(&d));
        }
        let best = next.last().unwrap().clone();
        let diff = best.sub(row.last().unwrap());
        row = next;
        let small = match (diff.magnitude_exponent(), tol_exp) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(d), Some(t)) => d < t,
        };
        if level >= 3 && small {
            return Ok(best);
        }
    }
    Err(Error::NonConvergence {
        doublings: opts.max_doublings,
    })
}
