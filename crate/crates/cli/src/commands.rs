use crate::output::{self, CheckRow, ExactRow, Format, ReportRow, ValueRow, ZeroRow};
use crate::{ApproxArgs, CheckArgs, Command, CompareArgs, EvalArgs, Suite, ZerosArgs, ZoneArgs};
use orthoasym_core::asymptotics::{approximate, ApproxRequest, ExpansionKind, Zones};
use orthoasym_core::numerics::{
    parse_rational, ApComplex, Precision, PrecisionPolicy, SignedLog, DEFAULT_MAX_BITS,
};
use orthoasym_core::recurrence::{find_zeros, value, Family};
use orthoasym_core::verify::{
    self, assemble_sweep, bracket_check_hermite, bracket_check_ismail, compare, gamma_ratio_check,
    lemma_residual_check, matching_check, quadrature_check, rounding_bound, sweep_point,
    zero_proximity, CompareOptions,
};
use orthoasym_core::Error;
use rayon::prelude::*;
use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

pub const MAX_BITS_ENV: &str = "ORTHOASYM_MAX_BITS";

/// Largest normalized zero deviation accepted at n = 80 by `check --suite zeros`.
pub const ZERO_DEVIATION_BOUND: f64 = 1.5e-5;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Nothing left to report, or a check did not pass.
    Failed(String),
    Core(Error),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
            CliError::Core(e) if e.is_numerical_failure() => 3,
            CliError::Core(Error::InsufficientData { .. }) => 1,
            CliError::Core(_) => 2,
            // a closed pipe is not worth a distinct code
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Core(e) => e.fmt(f),
            CliError::Io(e) => write!(f, "write failed: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn max_bits() -> Result<u32> {
    match std::env::var(MAX_BITS_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_BITS_ENV}={s:?} is not a bit count"))),
        Err(_) => Ok(DEFAULT_MAX_BITS),
    }
}

fn precision(bits: u32) -> Result<Precision> {
    Precision::new(bits).map_err(|e| CliError::Usage(e.to_string()))
}

fn policy(bits: u32) -> Result<PrecisionPolicy> {
    Ok(PrecisionPolicy::new(precision(bits)?, max_bits()?))
}

fn zones(args: &ZoneArgs) -> Zones {
    let d = Zones::default();
    Zones {
        delta: args.delta.unwrap_or(d.delta),
        delta_min: args.delta_min.unwrap_or(d.delta_min),
        rho: args.rho.unwrap_or(d.rho),
    }
}

pub fn run<W: Write>(command: Command, out: W) -> Result<ExitCode> {
    match command {
        Command::Eval(a) => eval(a, out),
        Command::Approx(a) => approx(a, out),
        Command::Compare(a) => compare_cmd(a, false, out),
        Command::Sweep(a) => compare_cmd(a, true, out),
        Command::Zeros(a) => zeros(a, out),
        Command::Check(a) => check(a, out),
    }
}

fn eval<W: Write>(a: EvalArgs, mut out: W) -> Result<ExitCode> {
    let family = a.family;
    let n = a.n as usize;
    if a.exact {
        if !a.point.is_real() {
            return Err(CliError::Usage(
                "--exact needs a real point (imaginary part 0)".into(),
            ));
        }
        let v = value(family, n, &a.point.re);
        match a.common.format {
            Format::Csv => writeln!(out, "{v}")?,
            Format::Json => {
                let row = ExactRow {
                    family: family.name().into(),
                    n: a.n,
                    point: a.point.to_string(),
                    value: v.to_string(),
                };
                serde_json::to_writer_pretty(&mut out, &row).map_err(io::Error::from)?;
                writeln!(out)?;
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let point = a.point.clone();
    let (v, used) = policy(a.common.bits)?.run(|p| {
        SignedLog::from_complex(&value(family, n, &point.to_complex(p.plus(40))))
            .map(|s| s.with_prec(p))
    })?;
    let row = ValueRow::new(family.name(), "", a.n, &a.point, &v, used);
    output::emit(&[row], a.common.format, out)?;
    Ok(ExitCode::SUCCESS)
}

fn approx<W: Write>(a: ApproxArgs, out: W) -> Result<ExitCode> {
    let zones = zones(&a.zones);
    let (re, im) = a.point.to_f64_pair();
    zones.check(a.family, a.region, re, im)?;
    let (v, used) = policy(a.common.bits)?.run(|p| {
        let req = ApproxRequest {
            family: a.family,
            region: a.region,
            n: a.n,
            point: a.point.to_complex(p),
            zones,
        };
        Ok(approximate(&req)?.value)
    })?;
    let row = ValueRow::new(a.family.name(), a.region.name(), a.n, &a.point, &v, used);
    output::emit(&[row], a.common.format, out)?;
    Ok(ExitCode::SUCCESS)
}

fn degrees(a: &CompareArgs) -> Result<Vec<u64>> {
    let ns = match a.n {
        Some(n) => vec![n],
        None => a.ns.clone(),
    };
    if ns.is_empty() {
        return Err(CliError::Usage("no degrees given".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("--ns must be strictly increasing".into()));
    }
    if ns.contains(&0) {
        return Err(CliError::Usage("degrees must be positive".into()));
    }
    Ok(ns)
}

/// `compare` evaluates every degree in turn; `sweep` fans the degrees out
/// over worker threads and drops the points where the approximant is near
/// one of its zeros.
fn compare_cmd<W: Write>(a: CompareArgs, sweep: bool, out: W) -> Result<ExitCode> {
    let ns = degrees(&a)?;
    let opts = CompareOptions {
        zones: zones(&a.zones),
        policy: policy(a.common.bits)?,
    };
    let (re, im) = a.point.to_f64_pair();
    opts.zones.check(a.family, a.region, re, im)?;
    let rows: Vec<ReportRow> = if sweep {
        let entries = ns
            .par_iter()
            .map(|&n| sweep_point(a.family, a.region, &a.point, n, &opts))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let dropped: Vec<u64> = entries
            .iter()
            .filter(|e| e.excluded)
            .map(|e| e.report.n)
            .collect();
        if !dropped.is_empty() {
            eprintln!("near a zero of the approximant, excluded: n = {dropped:?}");
        }
        let rows: Vec<ReportRow> = entries
            .iter()
            .filter(|e| !e.excluded)
            .map(|e| ReportRow::new(&e.report))
            .collect();
        match assemble_sweep(entries) {
            Ok(s) => eprintln!(
                "empirical order {:.4}, strictly decreasing: {}",
                s.empirical_order, s.monotone
            ),
            Err(Error::InsufficientData { usable }) if usable > 0 => {
                eprintln!("only {usable} usable points, no order fitted")
            }
            Err(_) => {}
        }
        rows
    } else {
        ns.iter()
            .map(|&n| {
                Ok(ReportRow::new(&compare(
                    a.family, a.region, n, &a.point, &opts,
                )?))
            })
            .collect::<Result<_>>()?
    };
    if rows.is_empty() {
        return Err(CliError::Failed(
            "every point was excluded as near a zero of the approximant".into(),
        ));
    }
    output::emit(&rows, a.common.format, out)?;
    if let Some(tol) = a.tol {
        let over: Vec<u64> = rows
            .iter()
            .filter(|r| r.rel_err > tol)
            .map(|r| r.n)
            .collect();
        if !over.is_empty() {
            return Err(CliError::Failed(format!(
                "relative error above {tol:e} at n = {over:?}"
            )));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn zeros<W: Write>(a: ZerosArgs, out: W) -> Result<ExitCode> {
    if a.n == 0 {
        return Err(CliError::Usage("pi_0 has no zeros".into()));
    }
    let zs = find_zeros(a.family, a.n, precision(a.common.bits)?)?;
    let rows: Vec<ZeroRow> = zs
        .iter()
        .enumerate()
        .map(|(i, z)| ZeroRow {
            family: a.family.name().into(),
            n: a.n as u64,
            index: i + 1,
            zero: z.to_sci_string(17),
        })
        .collect();
    output::emit(&rows, a.common.format, out)?;
    Ok(ExitCode::SUCCESS)
}

fn row(suite: &str, case: String, value: f64, threshold: f64, pass: bool) -> CheckRow {
    CheckRow {
        suite: suite.into(),
        case,
        value,
        threshold,
        pass,
    }
}

fn check_quadrature(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let threshold = tol.unwrap_or(1e-20);
    // the integration target stays at the default level; only the verdict moves
    let level = verify::quadrature::default_threshold(prec);
    verify::quadrature::sample_points(prec)
        .iter()
        .map(|(id, y)| {
            let c = quadrature_check(*id, y, &level)?;
            let (re, im) = y.to_f64_pair();
            let diff = c.diff.to_f64();
            Ok(row(
                "quadrature",
                format!("{} y={re}{im:+}i", id.label()),
                diff,
                threshold,
                diff <= threshold,
            ))
        })
        .collect()
}

fn check_brackets(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let threshold = tol.unwrap_or(0.0);
    let mut rows = Vec::new();
    for n in [10usize, 50, 200] {
        let n2 = (n * n) as f64;
        let cases = [
            ("hermite y", 1.1, false),
            ("hermite y", 1.5, false),
            ("hermite y", 2.0, false),
            ("ismail x", -5.0, true),
            ("ismail x", 1.5 * n2, true),
            ("ismail x", 2.0 * n2, true),
        ];
        for (label, v, ismail) in cases {
            let q = parse_rational(&v.to_string())?;
            let report = if ismail {
                bracket_check_ismail(n, &q, prec)?
            } else {
                bracket_check_hermite(n, &q, prec)?
            };
            let margin = report
                .rows
                .iter()
                .map(|r| r.margin())
                .fold(f64::INFINITY, f64::min);
            rows.push(row(
                "brackets",
                format!("{label}={v} n={n} min relative margin"),
                margin,
                threshold,
                report.all_hold() && margin >= threshold,
            ));
        }
    }
    Ok(rows)
}

fn check_lemma(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let y = ApComplex::from_f64(0.5, 0.0, prec)?;
    let ns = [64, 128, 256];
    let mut rows: Vec<CheckRow> = lemma_residual_check(ExpansionKind::SqrtScaling, &y, &ns)?
        .doubling_ratios()
        .into_iter()
        .map(|(n, q)| {
            row(
                "lemma",
                format!("sqrt scaling residual({n})/residual({}) in [3,5]", 2 * n),
                q,
                5.0,
                (3.0..=5.0).contains(&q),
            )
        })
        .collect();
    let threshold = tol.unwrap_or_else(|| rounding_bound(prec).to_f64());
    let sq = lemma_residual_check(ExpansionKind::SquareScaling, &y, &ns)?;
    let max = sq.max_residual().map_or(0.0, |r| r.to_f64());
    rows.push(row(
        "lemma",
        "square scaling max residual".into(),
        max,
        threshold,
        max <= threshold,
    ));
    Ok(rows)
}

fn check_gamma(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let threshold = tol.unwrap_or(2.0);
    let ns: Vec<u64> = (1..=128).map(|k| 8 * k).collect();
    [Family::Legendre, Family::Hermite]
        .into_iter()
        .map(|family| {
            let t = gamma_ratio_check(family, &ns, prec)?;
            let first = t.rows[0].scaled;
            let max = t.rows.iter().map(|r| r.scaled).fold(0.0, f64::max);
            let growth = max / first;
            Ok(row(
                "gamma",
                format!("{family} max/first of n^2 deviation, n=8..1024"),
                growth,
                threshold,
                growth <= threshold,
            ))
        })
        .collect()
}

fn check_matching(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let threshold = tol.unwrap_or(1.0);
    let z = Zones::matching();
    let cases = [
        (Family::Legendre, 50, 100, "x=0.5+0.2i"),
        (Family::Hermite, 64, 128, "y=0.5+0.2i"),
    ];
    cases
        .into_iter()
        .map(|(family, lo, hi, label)| {
            let p = ApComplex::from_f64(0.5, 0.2, prec)?;
            let a = matching_check(family, lo, &p, &z)?.mutual_rel_err;
            let b = matching_check(family, hi, &p, &z)?.mutual_rel_err;
            let q = b.checked_div(&a).map_or(f64::INFINITY, |q| q.to_f64());
            Ok(row(
                "matching",
                format!("{family} {label} err(n={hi})/err(n={lo})"),
                q,
                threshold,
                q < threshold,
            ))
        })
        .collect()
}

fn check_zeros(prec: Precision, tol: Option<f64>) -> Result<Vec<CheckRow>> {
    let threshold = tol.unwrap_or(ZERO_DEVIATION_BOUND);
    let t20 = zero_proximity(20, 0.1, prec)?;
    let t80 = zero_proximity(80, 0.1, prec)?;
    let max = t80.max_deviation();
    let trend = t80.median_deviation() / t20.median_deviation();
    Ok(vec![
        row(
            "zeros",
            "ismail n=80 max normalized deviation".into(),
            max,
            threshold,
            max <= threshold,
        ),
        row(
            "zeros",
            "ismail median deviation n=80 / n=20".into(),
            trend,
            1.0,
            trend <= 1.0,
        ),
    ])
}

type SuiteFn = fn(Precision, Option<f64>) -> Result<Vec<CheckRow>>;

fn check<W: Write>(a: CheckArgs, out: W) -> Result<ExitCode> {
    let prec = precision(a.common.bits)?;
    let all: [(Suite, SuiteFn); 6] = [
        (Suite::Quadrature, check_quadrature),
        (Suite::Brackets, check_brackets),
        (Suite::Lemma, check_lemma),
        (Suite::Gamma, check_gamma),
        (Suite::Matching, check_matching),
        (Suite::Zeros, check_zeros),
    ];
    let mut rows = Vec::new();
    for (suite, f) in all {
        if a.suite == Suite::All || a.suite == suite {
            rows.extend(f(prec, a.tol)?);
        }
    }
    output::emit(&rows, a.common.format, out)?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        return Err(CliError::Failed(format!(
            "{failed} of {} checks failed",
            rows.len()
        )));
    }
    Ok(ExitCode::SUCCESS)
}
