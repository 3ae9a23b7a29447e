//! Acceptance run: one PASS/FAIL line per criterion with its wall time.
//!
//! A criterion listed in `KNOWN_FAILURES` still prints FAIL, but it does not
//! turn the exit status red. If it ever starts passing, the run fails so the
//! list gets revisited.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use orthoasym_core::asymptotics::{qn_explicit, qn_recurrence, ExpansionKind, Region, Zones};
use orthoasym_core::numerics::{ApComplex, ApReal, Point, Precision};
use orthoasym_core::recurrence::{ratios, reconstruct_product, sequence, Family};
use orthoasym_core::verify::{
    bracket_check_hermite, bracket_check_ismail, compare, convergence_sweep, gamma_ratio_check,
    lemma_residual_check, matching_check, quadrature_suite, rounding_bound, zero_proximity,
    CompareOptions, SweepResult,
};
use orthoasym_core::Error;
use std::process::ExitCode;
use std::time::{Duration, Instant};

/// Criterion 5 asks for a decreasing error over n in {16, 32, 64, 128} at
/// y = 1/4 for the Ismail family. There n*sqrt(y) = n/2 is an integer for
/// every even n, so the approximant is exactly zero at all four degrees and
/// nothing is left after near-zero exclusion.
const KNOWN_FAILURES: &[u32] = &[5];

/// Largest interior normalized zero deviation accepted at n = 80, with
/// delta = 0.1. Measured 3.49e-6; the bound leaves a factor of about four.
const ZERO_DEVIATION_BOUND: f64 = 1.5e-5;

type Outcome = Result<String, String>;

/// Id, name, check and optional time budget.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pt(s: &str) -> Point {
    s.parse().expect("valid point")
}

fn bits(b: u32) -> Precision {
    Precision::new(b).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn errs(s: &SweepResult) -> Vec<(u64, f64)> {
    s.usable().map(|r| (r.n, r.rel_err.to_f64())).collect()
}

fn fmt_errs(v: &[(u64, f64)]) -> String {
    v.iter()
        .map(|(n, e)| format!("{n}:{e:.4e}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn err_at(v: &[(u64, f64)], n: u64) -> Result<f64, String> {
    v.iter()
        .find(|p| p.0 == n)
        .map(|p| p.1)
        .ok_or_else(|| format!("no usable entry at n={n}"))
}

fn classical_legendre(n: usize, x: &BigRational) -> BigRational {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    let (mut p0, mut p1) = (BigRational::one(), x.clone());
    if n == 0 {
        return p0;
    }
    for k in 1..n as i64 {
        let next = (rat(2 * k + 1, 1) * x * &p1 - rat(k, 1) * &p0) / rat(k + 1, 1);
        p0 = p1;
        p1 = next;
    }
    p1
}

fn classical_hermite(n: usize, x: &BigRational) -> BigRational {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    let two = rat(2, 1);
    let (mut h0, mut h1) = (BigRational::one(), &two * x);
    if n == 0 {
        return h0;
    }
    for k in 1..n as i64 {
        let next = &two * x * &h1 - rat(2 * k, 1) * &h0;
        h0 = h1;
        h1 = next;
    }
    h1
}

/// Leading coefficient of P_n: (2n)! / (2^n (n!)^2).
fn legendre_leading(n: usize) -> BigRational {
    let mut c = BigRational::one();
    for k in 1..=n as i64 {
        c *= rat(2 * k - 1, k);
    }
    c
}

fn criterion_1() -> Outcome {
    let ts = [rat(1, 4), rat(-3, 7), rat(5, 2), rat(0, 1)];
    for t in &ts {
        for n in 0..=40 {
            ensure(
                qn_explicit(n, t) == qn_recurrence(n, t),
                format!("Q_{n} mismatch at t={t}"),
            )?;
        }
    }
    let xs = [rat(2, 1), rat(1, 3), rat(-7, 5), rat(11, 4)];
    for x in &xs {
        let leg = sequence(Family::Legendre, 30, x);
        let her = sequence(Family::Hermite, 30, x);
        for n in 0..=30 {
            ensure(
                leg[n] == classical_legendre(n, x) / legendre_leading(n),
                format!("legendre n={n} x={x}"),
            )?;
            let scale = rat(1, 1) / BigRational::from_integer(BigInt::one() << n);
            ensure(
                her[n] == classical_hermite(n, x) * scale,
                format!("hermite n={n} x={x}"),
            )?;
        }
        for family in Family::ALL {
            let pis = sequence(family, 50, x);
            let ws = ratios(family, 50, x).map_err(|e| e.to_string())?;
            for n in 1..=50 {
                ensure(
                    reconstruct_product(&ws[..n], BigRational::one()) == pis[n],
                    format!("{family} product n={n} x={x}"),
                )?;
            }
        }
    }
    Ok("Q_n forms agree to n=40, classical scalings to n=30, products to n=50".into())
}

fn criterion_2() -> Outcome {
    let opts = CompareOptions::default();
    let s = convergence_sweep(
        Family::Legendre,
        Region::Outer,
        &pt("2,0"),
        &[16, 32, 64, 128],
        &opts,
    )
    .map_err(|e| e.to_string())?;
    let v = errs(&s);
    let e64 = err_at(&v, 64)?;
    ensure(e64 <= 0.01, format!("rel_err(64)={e64}"))?;
    ensure(s.monotone && v.len() == 4, "not strictly decreasing")?;
    ensure(
        (-1.3..=-0.7).contains(&s.empirical_order),
        format!("order {}", s.empirical_order),
    )?;
    Ok(format!("{} order={:.3}", fmt_errs(&v), s.empirical_order))
}

fn criterion_3() -> Outcome {
    let opts = CompareOptions::default();
    let s = convergence_sweep(
        Family::Legendre,
        Region::Oscillatory,
        &pt("0.5,0"),
        &[6, 12, 24, 48, 96],
        &opts,
    )
    .map_err(|e| e.to_string())?;
    let v = errs(&s);
    ensure(v.len() == 5, "points excluded near a zero")?;
    ensure(s.monotone, "not strictly decreasing")?;
    ensure(err_at(&v, 48)? <= 0.05, "rel_err(48) > 0.05")?;
    let e6 = err_at(&v, 6)?;
    ensure((e6 / 0.024 - 1.0).abs() <= 0.2, format!("rel_err(6)={e6}"))?;
    Ok(fmt_errs(&v))
}

fn criterion_4() -> Outcome {
    let opts = CompareOptions::default();
    let ns = [16, 32, 64, 128];
    let mut detail = Vec::new();
    for family in [Family::Hermite, Family::Ismail] {
        let s = convergence_sweep(family, Region::Outer, &pt("2,0"), &ns, &opts)
            .map_err(|e| e.to_string())?;
        let v = errs(&s);
        ensure(err_at(&v, 64)? <= 0.02, format!("{family} rel_err(64)"))?;
        ensure(
            s.monotone && v.len() == 4,
            format!("{family} not decreasing"),
        )?;
        detail.push(format!("{family}[{}]", fmt_errs(&v)));
    }
    let exact = sequence(Family::Ismail, 5, &rat(50, 1))[5].clone();
    ensure(exact == rat(1256170817, 8), format!("pi_5(50)={exact}"))?;
    let r =
        compare(Family::Ismail, Region::Outer, 5, &pt("2,0"), &opts).map_err(|e| e.to_string())?;
    let e5 = r.rel_err.to_f64();
    ensure(e5 <= 0.05, format!("ismail n=5 rel_err={e5}"))?;
    detail.push(format!("ismail n=5 {e5:.4e}"));
    Ok(detail.join(" "))
}

fn criterion_5() -> Outcome {
    let opts = CompareOptions::default();
    let ns = [16, 32, 64, 128];
    let mut detail = Vec::new();
    let mut failures = Vec::new();

    let her = compare(Family::Hermite, Region::Oscillatory, 4, &pt("0.5,0"), &opts)
        .map_err(|e| e.to_string())?
        .rel_err
        .to_f64();
    if (her / 0.046 - 1.0).abs() > 0.2 {
        failures.push(format!("hermite n=4 rel_err={her}"));
    }
    let ism = compare(Family::Ismail, Region::Oscillatory, 5, &pt("0.25,0"), &opts)
        .map_err(|e| e.to_string())?
        .rel_err
        .to_f64();
    if (ism / 0.045 - 1.0).abs() > 0.2 {
        failures.push(format!("ismail n=5 rel_err={ism}"));
    }
    detail.push(format!("hermite n=4 {her:.4e}, ismail n=5 {ism:.4e}"));

    match convergence_sweep(
        Family::Hermite,
        Region::Oscillatory,
        &pt("0.5,0"),
        &ns,
        &opts,
    ) {
        Ok(s) if s.monotone => detail.push(format!("hermite[{}]", fmt_errs(&errs(&s)))),
        Ok(s) => failures.push(format!("hermite not decreasing [{}]", fmt_errs(&errs(&s)))),
        Err(e) => failures.push(format!("hermite sweep: {e}")),
    }
    match convergence_sweep(
        Family::Ismail,
        Region::Oscillatory,
        &pt("0.25,0"),
        &ns,
        &opts,
    ) {
        Ok(s) if s.monotone => detail.push(format!("ismail[{}]", fmt_errs(&errs(&s)))),
        Ok(s) => failures.push(format!("ismail not decreasing [{}]", fmt_errs(&errs(&s)))),
        Err(Error::InsufficientData { usable }) => {
            // odd degrees keep the sine factor away from zero; shown for reference only
            let odd = convergence_sweep(
                Family::Ismail,
                Region::Oscillatory,
                &pt("0.25,0"),
                &[17, 33, 65, 129],
                &opts,
            )
            .map(|s| fmt_errs(&errs(&s)))
            .unwrap_or_else(|e| e.to_string());
            failures.push(format!(
                "ismail y=0.25: {usable} usable points, approximant vanishes at even n \
                 (odd n for reference: {odd})"
            ));
        }
        Err(e) => failures.push(format!("ismail sweep: {e}")),
    }
    if failures.is_empty() {
        Ok(detail.join(" "))
    } else {
        Err(format!("{}; {}", failures.join("; "), detail.join(" ")))
    }
}

fn criterion_6() -> Outcome {
    let prec = bits(256);
    let mut rows = 0;
    for n in [10usize, 50, 200] {
        for y in [rat(11, 10), rat(3, 2), rat(2, 1)] {
            let r = bracket_check_hermite(n, &y, prec).map_err(|e| e.to_string())?;
            ensure(r.all_hold(), format!("hermite n={n} y={y}"))?;
            rows += r.rows.len();
        }
        let n2 = (n * n) as i64;
        for x in [rat(-5, 1), rat(3 * n2, 2), rat(2 * n2, 1)] {
            let r = bracket_check_ismail(n, &x, prec).map_err(|e| e.to_string())?;
            ensure(r.all_hold(), format!("ismail n={n} x={x}"))?;
            rows += r.rows.len();
        }
    }
    Ok(format!("{rows} inequalities hold"))
}

fn criterion_7() -> Outcome {
    let prec = bits(256);
    let threshold = ApReal::from_f64(1e-20, prec).unwrap();
    let checks = quadrature_suite(prec, &threshold).map_err(|e| e.to_string())?;
    let worst = checks.iter().map(|c| c.diff.to_f64()).fold(0.0, f64::max);
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(format!(
            "{} at {:?}: diff {:e}",
            bad.identity.label(),
            bad.y.to_f64_pair(),
            bad.diff.to_f64()
        ));
    }
    Ok(format!(
        "{} checks, max |lhs-rhs| = {worst:.3e}",
        checks.len()
    ))
}

fn criterion_8() -> Outcome {
    let prec = bits(256);
    let y = ApComplex::from_f64(0.5, 0.0, prec).unwrap();
    let t = lemma_residual_check(ExpansionKind::SqrtScaling, &y, &[64, 128, 256])
        .map_err(|e| e.to_string())?;
    let ratios = t.doubling_ratios();
    ensure(ratios.len() == 2, "missing doubling ratios")?;
    for (n, q) in &ratios {
        ensure((3.0..=5.0).contains(q), format!("ratio at n={n} is {q}"))?;
    }
    let sq = lemma_residual_check(ExpansionKind::SquareScaling, &y, &[64, 128, 256])
        .map_err(|e| e.to_string())?;
    let max = sq
        .max_residual()
        .cloned()
        .unwrap_or_else(|| ApReal::zero(prec));
    ensure(
        max <= rounding_bound(prec),
        format!("square residual {:e}", max.to_f64()),
    )?;
    let shown: Vec<String> = ratios.iter().map(|(n, q)| format!("{n}:{q:.3}")).collect();
    Ok(format!(
        "ratios {} square max {:.2e}",
        shown.join(" "),
        max.to_f64()
    ))
}

fn criterion_9() -> Outcome {
    let ns: Vec<u64> = (1..=128).map(|k| 8 * k).collect();
    let mut detail = Vec::new();
    for family in [Family::Legendre, Family::Hermite] {
        let t = gamma_ratio_check(family, &ns, bits(256)).map_err(|e| e.to_string())?;
        let max = t.rows.iter().map(|r| r.scaled).fold(0.0, f64::max);
        let first = t.rows[0].scaled;
        ensure(t.bounded(), format!("{family}: max {max} vs first {first}"))?;
        detail.push(format!("{family} first {first:.4} max {max:.4}"));
    }
    Ok(detail.join(", "))
}

fn criterion_10() -> Outcome {
    let z = Zones::matching();
    let x = ApComplex::from_f64(0.5, 0.2, bits(256)).unwrap();
    let a = matching_check(Family::Legendre, 50, &x, &z).map_err(|e| e.to_string())?;
    let b = matching_check(Family::Legendre, 100, &x, &z).map_err(|e| e.to_string())?;
    let (ea, eb) = (a.mutual_rel_err.to_f64(), b.mutual_rel_err.to_f64());
    ensure(b.mutual_rel_err < a.mutual_rel_err, format!("{eb} !< {ea}"))?;
    Ok(format!("n=50 {ea:.3e}, n=100 {eb:.3e}"))
}

fn criterion_11() -> Outcome {
    let prec = bits(128);
    let t20 = zero_proximity(20, 0.1, prec).map_err(|e| e.to_string())?;
    let t80 = zero_proximity(80, 0.1, prec).map_err(|e| e.to_string())?;
    let max = t80.max_deviation();
    let (m20, m80) = (t20.median_deviation(), t80.median_deviation());
    ensure(!t80.rows.is_empty(), "no interior zeros")?;
    ensure(max <= ZERO_DEVIATION_BOUND, format!("max deviation {max}"))?;
    ensure(m80 <= m20, format!("median {m20} -> {m80}"))?;
    Ok(format!(
        "n=80 max {max:.3e}, median 20 -> 80: {m20:.3e} -> {m80:.3e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            1,
            "exact identities",
            criterion_1,
            Some(Duration::from_secs(10)),
        ),
        (
            2,
            "legendre outer decay",
            criterion_2,
            Some(Duration::from_secs(30)),
        ),
        (3, "legendre oscillatory decay", criterion_3, None),
        (4, "hermite/ismail outer decay", criterion_4, None),
        (5, "hermite/ismail oscillatory decay", criterion_5, None),
        (
            6,
            "ratio bracket inequalities",
            criterion_6,
            Some(Duration::from_secs(10)),
        ),
        (7, "integral identities", criterion_7, None),
        (8, "local expansion residuals", criterion_8, None),
        (9, "gamma ratios", criterion_9, None),
        (10, "outer/oscillatory matching", criterion_10, None),
        (
            11,
            "ismail zero proximity",
            criterion_11,
            Some(Duration::from_secs(120)),
        ),
    ];
    let mut unexpected = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, budget {limit:?}"));
            }
        }
        let known = KNOWN_FAILURES.contains(&id);
        let (tag, detail) = match (&outcome, known) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => {
                unexpected += 1;
                ("PASS (listed as known failure)", d.clone())
            }
            (Err(d), true) => ("FAIL (known)", d.clone()),
            (Err(d), false) => {
                unexpected += 1;
                ("FAIL", d.clone())
            }
        };
        println!("criterion {id:>2} {tag:<14} {elapsed:>10.2?}  {name}: {detail}");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria did not match their expected outcome");
        ExitCode::FAILURE
    }
}
