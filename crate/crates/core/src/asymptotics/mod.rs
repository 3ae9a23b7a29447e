//! Leading-order asymptotic approximants for the three families.

pub mod approximants;
pub mod legendre_map;
pub mod phase;
pub mod zones;

pub use approximants::{
    hermite_oscillatory, hermite_outer, ismail_oscillatory, ismail_outer, legendre_oscillatory,
    legendre_outer, Oscillating,
};
pub use legendre_map::{legendre_t, legendre_w, qn_coefficients, qn_explicit, qn_recurrence};
pub use phase::{
    local_expansion, AnalyticPhase, ConstantPhase, ExpansionKind, HermitePhase, IsmailPhase,
    LocalExpansion,
};
pub use zones::{oscillation_interval, Region, Zones};

use crate::error::Result;
use crate::numerics::elementary as el;
use crate::numerics::{arccos_principal, sqrt_cut, ApComplex, SignedLog};
use crate::recurrence::Family;

/// One approximant evaluation.
#[derive(Clone, Debug)]
pub struct ApproxRequest {
    pub family: Family,
    pub region: Region,
    pub n: u64,
    /// `x` for Legendre, the scaled `y` for Hermite and Ismail.
    pub point: ApComplex,
    pub zones: Zones,
}

#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub value: SignedLog,
    /// Oscillatory approximants only: the value with its trigonometric
    /// factor replaced by one.
    pub envelope: Option<SignedLog>,
}

pub fn approximate(req: &ApproxRequest) -> Result<ApproxResult> {
    let (n, z, zones) = (req.n, &req.point, &req.zones);
    let osc = |o: Oscillating| ApproxResult {
        value: o.value,
        envelope: Some(o.envelope),
    };
    let plain = |v: SignedLog| ApproxResult {
        value: v,
        envelope: None,
    };
    Ok(match (req.family, req.region) {
        (Family::Legendre, Region::Outer) => plain(legendre_outer(n, z, zones)?),
        (Family::Hermite, Region::Outer) => plain(hermite_outer(n, z, zones)?),
        (Family::Ismail, Region::Outer) => plain(ismail_outer(n, z, zones)?),
        (Family::Legendre, Region::Oscillatory) => {
            osc(approximants::legendre_oscillatory_parts(n, z, zones)?)
        }
        (Family::Hermite, Region::Oscillatory) => {
            osc(approximants::hermite_oscillatory_parts(n, z, zones)?)
        }
        (Family::Ismail, Region::Oscillatory) => {
            osc(approximants::ismail_oscillatory_parts(n, z, zones)?)
        }
    })
}

/// Auxiliary quantities attached to a point. Entries that are undefined at
/// the point (for instance the Legendre map on its cut) are `None`.
#[derive(Clone, Debug)]
pub struct PhaseData {
    /// `arccos z`
    pub theta: ApComplex,
    /// Legendre map `t(z) = (z - sqrt(z^2-1))^2`
    pub t: Option<ApComplex>,
    /// Legendre ratio limit `w(z) = (z + sqrt(z^2-1)) / 2`
    pub w: Option<ApComplex>,
    /// Hermite phase `arccos z - z sqrt(1 - z^2)` or Ismail phase `pi sqrt z`
    pub phi: Option<ApComplex>,
    /// Ismail amplitude base `(1-z) ((1+sqrt z)/(1-sqrt z))^sqrt z`
    pub r: Option<ApComplex>,
}

impl PhaseData {
    pub fn new(family: Family, z: &ApComplex) -> Result<Self> {
        let prec = z.prec();
        let theta = arccos_principal(z);
        let (w, t) = match sqrt_cut(z) {
            Ok(s) => {
                let d = z - &s;
                (Some((z + &s).mul_pow2(-1)), Some(&d * &d))
            }
            Err(_) => (None, None),
        };
        let (phi, r) = match family {
            Family::Legendre => (None, None),
            Family::Hermite => (Some(HermitePhase.eval(z)?[0].clone()), None),
            Family::Ismail => {
                let one = ApComplex::one(prec);
                let root = z.sqrt();
                let phi = &ApComplex::from_real(el::pi(prec)) * &root;
                let r = (&one + &root)
                    .checked_div(&(&one - &root))
                    .map(|q| -> Result<ApComplex> {
                        let pw = (&root * &q.ln()?).exp()?;
                        Ok(&(&one - z) * &pw)
                    })
                    .transpose()?;
                (Some(phi), r)
            }
        };
        Ok(PhaseData {
            theta,
            t,
            w,
            phi,
            r,
        })
    }
}
