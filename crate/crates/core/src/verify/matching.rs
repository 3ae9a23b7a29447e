use crate::asymptotics::{approximate, ApproxRequest, Region, Zones};
use crate::error::Result;
use crate::numerics::{sl_rel_err, ApComplex, ApReal, SignedLog};
use crate::recurrence::Family;

/// Outer and oscillatory approximants at one point of their overlap.
#[derive(Clone, Debug)]
pub struct MatchReport {
    pub family: Family,
    pub n: u64,
    pub outer: SignedLog,
    pub oscillatory: SignedLog,
    /// `|oscillatory / outer - 1|`
    pub mutual_rel_err: ApReal,
}

/// Both zone checks must pass at `point`; a point that only one form
/// accepts is a domain error.
pub fn matching_check(
    family: Family,
    n: u64,
    point: &ApComplex,
    zones: &Zones,
) -> Result<MatchReport> {
    let req = |region| ApproxRequest {
        family,
        region,
        n,
        point: point.clone(),
        zones: *zones,
    };
    let outer = approximate(&req(Region::Outer))?.value;
    let oscillatory = approximate(&req(Region::Oscillatory))?.value;
    let mutual_rel_err = sl_rel_err(&outer, &oscillatory)?;
    Ok(MatchReport {
        family,
        n,
        outer,
        oscillatory,
        mutual_rel_err,
    })
}
