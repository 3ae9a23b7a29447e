//! Report records and their CSV / JSON renderings.
//!
//! Every value goes out as a sign (or phase angle) plus the base-10 log of
//! its modulus. Raw decimals overflow long before the interesting degrees.

use orthoasym_core::numerics::{ApReal, Phase, Point, Precision, SignedLog};
use serde::Serialize;
use std::io::{self, Write};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Fixed rendering used for every floating field in CSV output.
pub fn sci(v: f64) -> String {
    if v.is_infinite() {
        return if v < 0.0 { "-inf".into() } else { "inf".into() };
    }
    format!("{v:.16e}")
}

fn point_parts(p: &Point) -> (f64, f64) {
    p.to_f64_pair()
}

/// `"+1"`, `"-1"`, `"0"`, or the phase angle in radians.
pub fn sign_or_phase(v: &SignedLog) -> String {
    match v.phase() {
        Phase::Zero => "0".into(),
        Phase::Plus => "+1".into(),
        Phase::Minus => "-1".into(),
        Phase::Unit(_) => sci(v.phase().angle(v.prec()).to_f64()),
    }
}

/// `log10 |v|`, `None` for an exact zero.
pub fn log10(v: &SignedLog) -> Option<f64> {
    v.log10().map(|l| round17(&l))
}

/// Nearest double to the 17-significant-digit decimal of `x`.
pub fn round17(x: &ApReal) -> f64 {
    x.to_sci_string(17).parse().expect("well-formed decimal")
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub region: String,
    pub n: u64,
    pub point_re: f64,
    pub point_im: f64,
    pub exact_sign_or_phase: String,
    pub exact_log10: Option<f64>,
    pub approx_sign_or_phase: String,
    pub approx_log10: Option<f64>,
    pub rel_err: f64,
    pub bits_used: u32,
}

impl ReportRow {
    pub fn new(report: &orthoasym_core::verify::ErrorReport) -> Self {
        let (re, im) = point_parts(&report.point);
        ReportRow {
            family: report.family.name().into(),
            region: report.region.name().into(),
            n: report.n,
            point_re: re,
            point_im: im,
            exact_sign_or_phase: sign_or_phase(&report.exact),
            exact_log10: log10(&report.exact),
            approx_sign_or_phase: sign_or_phase(&report.approx),
            approx_log10: log10(&report.approx),
            rel_err: round17(&report.rel_err),
            bits_used: report.prec_used.bits(),
        }
    }
}

/// A single value: `eval` rows leave `region` empty.
#[derive(Clone, Debug, Serialize)]
pub struct ValueRow {
    pub family: String,
    pub region: String,
    pub n: u64,
    pub point_re: f64,
    pub point_im: f64,
    pub sign_or_phase: String,
    pub log10: Option<f64>,
    pub bits_used: u32,
}

impl ValueRow {
    pub fn new(
        family: &str,
        region: &str,
        n: u64,
        point: &Point,
        v: &SignedLog,
        prec: Precision,
    ) -> Self {
        let (re, im) = point_parts(point);
        ValueRow {
            family: family.into(),
            region: region.into(),
            n,
            point_re: re,
            point_im: im,
            sign_or_phase: sign_or_phase(v),
            log10: log10(v),
            bits_used: prec.bits(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactRow {
    pub family: String,
    pub n: u64,
    pub point: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroRow {
    pub family: String,
    pub n: u64,
    pub index: usize,
    /// Decimal with 17 significant digits, kept as text so large zeros of
    /// the Ismail family keep their digits in JSON too.
    pub zero: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub case: String,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// Rows that know how to lay themselves out as CSV text fields.
pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

fn opt(v: Option<f64>) -> String {
    sci(v.unwrap_or(f64::NEG_INFINITY))
}

impl Record for ReportRow {
    const HEADER: &'static [&'static str] = &[
        "family",
        "region",
        "n",
        "point_re",
        "point_im",
        "exact_sign_or_phase",
        "exact_log10",
        "approx_sign_or_phase",
        "approx_log10",
        "rel_err",
        "bits_used",
    ];

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.region.clone(),
            self.n.to_string(),
            sci(self.point_re),
            sci(self.point_im),
            self.exact_sign_or_phase.clone(),
            opt(self.exact_log10),
            self.approx_sign_or_phase.clone(),
            opt(self.approx_log10),
            sci(self.rel_err),
            self.bits_used.to_string(),
        ]
    }
}

impl Record for ValueRow {
    const HEADER: &'static [&'static str] = &[
        "family",
        "region",
        "n",
        "point_re",
        "point_im",
        "sign_or_phase",
        "log10",
        "bits_used",
    ];

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.region.clone(),
            self.n.to_string(),
            sci(self.point_re),
            sci(self.point_im),
            self.sign_or_phase.clone(),
            opt(self.log10),
            self.bits_used.to_string(),
        ]
    }
}

impl Record for ZeroRow {
    const HEADER: &'static [&'static str] = &["family", "n", "index", "zero"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.index.to_string(),
            self.zero.clone(),
        ]
    }
}

impl Record for CheckRow {
    const HEADER: &'static [&'static str] = &["suite", "case", "value", "threshold", "pass"];

    fn fields(&self) -> Vec<String> {
        vec![
            self.suite.clone(),
            self.case.clone(),
            sci(self.value),
            sci(self.threshold),
            self.pass.to_string(),
        ]
    }
}

pub fn emit<R: Record, W: Write>(rows: &[R], format: Format, out: W) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(R::HEADER)?;
            for r in rows {
                w.write_record(r.fields())?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.write_all(b"\n")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Tiny {
        a: f64,
    }

    impl Record for Tiny {
        const HEADER: &'static [&'static str] = &["a"];
        fn fields(&self) -> Vec<String> {
            vec![sci(self.a)]
        }
    }

    #[test]
    fn one_row_is_two_csv_lines() {
        let mut buf = Vec::new();
        emit(&[Tiny { a: 0.5 }], Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "a\n5.0000000000000000e-1\n"
        );
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(sci(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(sci(f64::NEG_INFINITY), "-inf");
    }
}
