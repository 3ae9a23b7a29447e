//! Real zeros by Sturm counting with exact integer arithmetic.
//!
//! At a dyadic point `x = m / 2^s` the values `pi_k(x)` are rational. Each is
//! stored as `P_k = D_k pi_k(x)` with a positive integer scale `D_k`, so the
//! signs are exact and no gcd is ever taken. Writing `a_k = p_k / q_k`,
//! `b_k = u_k / v_k` and `d = 2^s`:
//!
//! ```text
//! P_0 = 1,  P_1 = m q_0 - p_0 d
//! P_{k+1} = (m q_k - p_k d) v_k P_k - u_k d q_k r_k P_{k-1}
//! ```
//!
//! where `r_1 = d q_0` and `r_k = d q_{k-1} v_{k-1}`. Because every `b_k`
//! is positive the sequence is a Sturm sequence: its number of sign changes
//! equals the number of zeros of `pi_n` strictly above `x`.

use super::family::Family;
use crate::error::{Error, Result};
use crate::numerics::{ApReal, Precision};
use alloc::format;
use alloc::vec::Vec;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dyadic rational `m / 2^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dyadic {
    m: BigInt,
    s: u32,
}

impl Dyadic {
    fn mid(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let s = a.s.max(b.s) + 1;
        let m = (&a.m << (s - 1 - a.s) as usize) + (&b.m << (s - 1 - b.s) as usize);
        Dyadic { m, s }.reduced()
    }

    fn reduced(mut self) -> Dyadic {
        while self.s > 0 && self.m.is_even() {
            self.m >>= 1usize;
            self.s -= 1;
        }
        self
    }

    /// `b - a <= 2^-w`
    fn close(a: &Dyadic, b: &Dyadic, w: u32) -> bool {
        let s = a.s.max(b.s).max(w);
        let diff = (&b.m << (s - b.s) as usize) - (&a.m << (s - a.s) as usize);
        diff <= (BigInt::one() << (s - w) as usize)
    }

    fn to_real(&self, prec: Precision) -> ApReal {
        ApReal::from_bigint(&self.m, prec).mul_pow2(-i64::from(self.s))
    }
}

/// Coefficients split into integer numerators and denominators once.
struct Coefficients {
    p: Vec<BigInt>,
    q: Vec<BigInt>,
    u: Vec<BigInt>,
    v: Vec<BigInt>,
}

impl Coefficients {
    fn new(family: Family, n: usize) -> Self {
        let mut c = Coefficients {
            p: Vec::with_capacity(n),
            q: Vec::with_capacity(n),
            u: Vec::with_capacity(n),
            v: Vec::with_capacity(n),
        };
        for k in 0..n {
            let a = family.a(k as u64);
            c.p.push(a.numer().clone());
            c.q.push(a.denom().clone());
            if k == 0 {
                c.u.push(BigInt::zero());
                c.v.push(BigInt::one());
            } else {
                let b = family.b(k as u64);
                c.u.push(b.numer().clone());
                c.v.push(b.denom().clone());
            }
        }
        c
    }
}

/// Result of a Sturm count at one point.
struct Count {
    /// zeros of `pi_n` strictly above the point
    above: usize,
    /// the point itself is a zero of `pi_n`
    root: bool,
}

fn sturm_count(c: &Coefficients, n: usize, x: &Dyadic) -> Count {
    let d = BigInt::one() << x.s as usize;
    let mut prev = BigInt::one();
    let mut cur = &x.m * &c.q[0] - &c.p[0] * &d;
    let mut r = &d * &c.q[0];
    let mut changes = 0usize;
    let mut last = Sign::Plus;
    let note = |v: &BigInt, last: &mut Sign, changes: &mut usize| {
        let s = v.sign();
        if s != Sign::NoSign {
            if s != *last {
                *changes += 1;
            }
            *last = s;
        }
    };
    note(&cur, &mut last, &mut changes);
    for k in 1..n {
        let ak = &x.m * &c.q[k] - &c.p[k] * &d;
        let next = &ak * &c.v[k] * &cur - &c.u[k] * &d * &c.q[k] * &r * &prev;
        r = &d * &c.q[k] * &c.v[k];
        prev = cur;
        cur = next;
        note(&cur, &mut last, &mut changes);
    }
    Count {
        above: changes,
        root: cur.is_zero(),
    }
}

/// Power-of-two radius enclosing every zero (Gershgorin on the Jacobi
/// matrix, with `sqrt(b) <= (b + 1) / 2`).
fn zero_bound(family: Family, n: usize) -> u32 {
    let mut best = BigInt::zero();
    for k in 0..n {
        let a = family.a(k as u64);
        let lo = if k == 0 {
            num_rational::BigRational::zero()
        } else {
            family.b(k as u64)
        };
        let hi = if k + 1 < n {
            family.b(k as u64 + 1)
        } else {
            num_rational::BigRational::zero()
        };
        let r = a.abs() + (lo + hi) / BigInt::from(2) + BigInt::from(2);
        let c = r.ceil().to_integer();
        if c > best {
            best = c;
        }
    }
    best.bits() as u32
}

/// The `n` real zeros of `pi_n`, ascending, each refined to an interval of
/// width at most `2^-(prec/2)` and returned as its midpoint.
pub fn find_zeros(family: Family, n: usize, prec: Precision) -> Result<Vec<ApReal>> {
    if n == 0 {
        return Err(Error::invalid("find_zeros needs n >= 1"));
    }
    let width = prec.bits() / 2;
    let c = Coefficients::new(family, n);
    let e = zero_bound(family, n);
    let lo = Dyadic {
        m: -(BigInt::one() << e as usize),
        s: 0,
    };
    let hi = Dyadic {
        m: BigInt::one() << e as usize,
        s: 0,
    };
    let at_lo = sturm_count(&c, n, &lo);
    let at_hi = sturm_count(&c, n, &hi);
    if at_lo.above != n || at_hi.above != 0 || at_lo.root || at_hi.root {
        return Err(Error::BracketFailure(format!(
            "initial interval +-2^{e} does not enclose all {n} zeros"
        )));
    }
    let mut found: Vec<Dyadic> = Vec::with_capacity(n);
    // open intervals (a, b): zeros strictly inside, zeros at or above b
    let mut stack = alloc::vec![(lo, hi, n, 0usize)];
    while let Some((a, b, count, above_b)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 && Dyadic::close(&a, &b, width) {
            found.push(Dyadic::mid(&a, &b));
            continue;
        }
        if Dyadic::close(&a, &b, width + 8) {
            return Err(Error::BracketFailure(format!(
                "{count} zeros left in an interval narrower than 2^-{width}"
            )));
        }
        let m = Dyadic::mid(&a, &b);
        let cm = sturm_count(&c, n, &m);
        let right = cm
            .above
            .checked_sub(above_b)
            .ok_or_else(|| Error::BracketFailure(format!("count decreased at s={}", m.s)))?;
        let left = count
            .checked_sub(right + usize::from(cm.root))
            .ok_or_else(|| Error::BracketFailure(format!("inconsistent counts at s={}", m.s)))?;
        if cm.root {
            found.push(m.clone());
        }
        stack.push((a, m.clone(), left, cm.above + usize::from(cm.root)));
        stack.push((m, b, right, above_b));
    }
    if found.len() != n {
        return Err(Error::BracketFailure(format!(
            "found {} of {n} zeros",
            found.len()
        )));
    }
    let mut out: Vec<ApReal> = found.iter().map(|d| d.to_real(prec)).collect();
    out.sort_by(|x, y| x.partial_cmp(y).expect("zeros are finite"));
    Ok(out)
}
