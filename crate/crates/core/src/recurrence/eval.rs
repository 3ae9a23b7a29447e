use super::family::Family;
use crate::error::{Error, Result};
use crate::numerics::{ApComplex, Scalar};
use alloc::vec::Vec;
use num_rational::BigRational;

/// Where a sequence is evaluated: an exact rational or a floating complex
/// number that carries its own precision.
#[derive(Clone, Debug, PartialEq)]
pub enum EvalPoint {
    Exact(BigRational),
    Float(ApComplex),
}

/// `pi_0..pi_N`, in the representation of the point.
#[derive(Clone, Debug, PartialEq)]
pub enum Values {
    Exact(Vec<BigRational>),
    Float(Vec<ApComplex>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SequenceEval {
    pub family: Family,
    pub point: EvalPoint,
    pub values: Values,
}

impl SequenceEval {
    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact(_))
    }

    pub fn len(&self) -> usize {
        match &self.values {
            Values::Exact(v) => v.len(),
            Values::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `pi_N` of an exact sequence.
    pub fn last_exact(&self) -> Option<&BigRational> {
        match &self.values {
            Values::Exact(v) => v.last(),
            Values::Float(_) => None,
        }
    }

    pub fn last_float(&self) -> Option<&ApComplex> {
        match &self.values {
            Values::Float(v) => v.last(),
            Values::Exact(_) => None,
        }
    }
}

/// `pi_0(x), ..., pi_N(x)` by the forward recurrence.
pub fn sequence<S: Scalar>(family: Family, n: usize, x: &S) -> Vec<S> {
    let one = x.lift(&BigRational::from_integer(1.into()));
    let mut out = Vec::with_capacity(n + 1);
    out.push(one);
    if n == 0 {
        return out;
    }
    out.push(x.minus(&x.lift(&family.a(0))));
    for k in 1..n {
        let ak = x.lift(&family.a(k as u64));
        let bk = x.lift(&family.b(k as u64));
        let next = x.minus(&ak).times(&out[k]).minus(&bk.times(&out[k - 1]));
        out.push(next);
    }
    out
}

/// `pi_N(x)` only, without keeping the history.
pub fn value<S: Scalar>(family: Family, n: usize, x: &S) -> S {
    let mut prev = x.lift(&BigRational::from_integer(1.into()));
    if n == 0 {
        return prev;
    }
    let mut cur = x.minus(&x.lift(&family.a(0)));
    for k in 1..n {
        let ak = x.lift(&family.a(k as u64));
        let bk = x.lift(&family.b(k as u64));
        let next = x.minus(&ak).times(&cur).minus(&bk.times(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

pub fn eval_sequence(family: Family, n: usize, x: &EvalPoint) -> SequenceEval {
    let values = match x {
        EvalPoint::Exact(q) => Values::Exact(sequence(family, n, q)),
        EvalPoint::Float(z) => Values::Float(sequence(family, n, z)),
    };
    SequenceEval {
        family,
        point: x.clone(),
        values,
    }
}

/// `w_1..w_N` with `w_1 = x - a_0`, `w_{k+1} = x - a_k - b_k / w_k`.
pub fn ratios<S: Scalar>(family: Family, n: usize, x: &S) -> Result<Vec<S>> {
    let mut out: Vec<S> = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    out.push(x.minus(&x.lift(&family.a(0))));
    for k in 1..n {
        let wk = &out[k - 1];
        let q = x
            .lift(&family.b(k as u64))
            .divide(wk)
            .ok_or(Error::ZeroRatio { k })?;
        out.push(x.minus(&x.lift(&family.a(k as u64))).minus(&q));
    }
    Ok(out)
}

/// Ratios in the representation of the point.
#[derive(Clone, Debug, PartialEq)]
pub enum Ratios {
    Exact(Vec<BigRational>),
    Float(Vec<ApComplex>),
}

pub fn ratio_sequence(family: Family, n: usize, x: &EvalPoint) -> Result<Ratios> {
    Ok(match x {
        EvalPoint::Exact(q) => Ratios::Exact(ratios(family, n, q)?),
        EvalPoint::Float(z) => Ratios::Float(ratios(family, n, z)?),
    })
}

/// `prod w_k`; `one` is returned for an empty list.
pub fn reconstruct_product<S: Scalar>(ws: &[S], one: S) -> S {
    ws.iter().fold(one, |acc, w| acc.times(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn documented_values() {
        assert_eq!(value(Family::Legendre, 2, &q(2, 1)), q(11, 3));
        assert_eq!(value(Family::Hermite, 3, &q(1, 1)), q(-1, 2));
        assert_eq!(value(Family::Ismail, 3, &q(0, 1)), q(1, 1));
        for fam in Family::ALL {
            assert_eq!(value(fam, 1, &q(7, 3)), q(7, 3) - fam.a(0));
        }
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(
            ratios(Family::Legendre, 2, &q(2, 1)).unwrap(),
            [q(2, 1), q(11, 6)]
        );
        let w = ratios(Family::Ismail, 2, &q(50, 1)).unwrap();
        assert_eq!(w[1], q(48995, 1000));
        assert_eq!(
            reconstruct_product(&w, q(1, 1)),
            value(Family::Ismail, 2, &q(50, 1))
        );
        assert_eq!(reconstruct_product::<BigRational>(&[], q(1, 1)), q(1, 1));
    }

    #[test]
    fn zero_ratio_is_reported() {
        // x = 0 is a zero of pi_1 for the symmetric families
        assert_eq!(
            ratios(Family::Hermite, 3, &q(0, 1)),
            Err(Error::ZeroRatio { k: 1 })
        );
        // the last ratio may vanish
        assert!(ratios(Family::Hermite, 1, &q(0, 1)).is_ok());
    }

    #[test]
    fn sequence_shape() {
        let s = eval_sequence(Family::Legendre, 4, &EvalPoint::Exact(q(1, 2)));
        assert_eq!(s.len(), 5);
        assert!(s.is_exact());
        assert_eq!(
            s.last_exact().unwrap(),
            &value(Family::Legendre, 4, &q(1, 2))
        );
    }
}
