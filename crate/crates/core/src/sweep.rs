//! Range sweeps over `(v, d)` and report rendering.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::{
    build_triangle, f_vector_direct, f_vector_from_triangle, f_vector_streaming, ExtendedFSequence,
    PolytopeParams,
};
use crate::oracle::oracle_f_vector;
use crate::shape::{analyze_shape, audit_dip_propagation, PositiveSequence, ShapeReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    LogConcave,
    Unimodal,
    Euler,
    /// Direct transform against the materialized triangle, on a subsample.
    Routes,
    Audit,
    /// Gale-evenness face count; only pairs within the oracle cap.
    Oracle,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::LogConcave,
        Check::Unimodal,
        Check::Euler,
        Check::Routes,
        Check::Audit,
        Check::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::LogConcave => "log-concave",
            Check::Unimodal => "unimodal",
            Check::Euler => "euler",
            Check::Routes => "routes",
            Check::Audit => "audit",
            Check::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check '{s}' (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub d_min: u32,
    pub d_max: u32,
    /// Lower vertex bound; `None` starts every dimension at `d + 1`.
    pub v_min: Option<u32>,
    pub v_max: u32,
    pub checks: Vec<Check>,
    /// Route equivalence runs on every `route_sample`-th pair in `(d, v)`
    /// order, starting with the first.
    pub route_sample: usize,
    pub oracle_cap: u32,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            d_min: 2,
            d_max: 16,
            v_min: None,
            v_max: 200,
            checks: vec![Check::LogConcave, Check::Euler, Check::Routes],
            route_sample: 50,
            oracle_cap: crate::oracle::DEFAULT_ORACLE_CAP,
            jobs: 0,
        }
    }
}

impl SweepConfig {
    /// Valid pairs in `(d, v)` order.
    pub fn pairs(&self) -> Vec<PolytopeParams> {
        let mut out = Vec::new();
        for d in self.d_min.max(2)..=self.d_max {
            let lo = self.v_min.unwrap_or(0).max(d + 1);
            for v in lo..=self.v_max {
                out.push(PolytopeParams::new(v, d).expect("range filtered to valid pairs"));
            }
        }
        out
    }
}

/// Per-pair output row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub v: u32,
    pub d: u32,
    #[serde(serialize_with = "decimal_strings")]
    pub f_vector: Vec<num_bigint::BigUint>,
    pub log_concave: bool,
    pub unimodal: bool,
    pub peak_start: Option<i64>,
    pub peak_end: Option<i64>,
}

fn decimal_strings<S: serde::Serializer>(
    xs: &[num_bigint::BigUint],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_str_radix(10)))
}

impl PairRecord {
    pub fn new(f: &ExtendedFSequence, shape: &ShapeReport) -> Self {
        Self {
            v: f.params().v(),
            d: f.params().d(),
            f_vector: f.entries().to_vec(),
            log_concave: shape.log_concave,
            unimodal: shape.unimodal,
            peak_start: shape.peak_start,
            peak_end: shape.peak_end,
        }
    }

    fn joined(&self, sep: &str) -> String {
        self.f_vector
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub v: u32,
    pub d: u32,
    pub check: Check,
    pub details: String,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub d_min: u32,
    pub d_max: u32,
    pub v_min: Option<u32>,
    pub v_max: u32,
    pub checked: usize,
    pub records: Vec<PairRecord>,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_pair(
    params: PolytopeParams,
    ordinal: usize,
    cfg: &SweepConfig,
) -> (PairRecord, Vec<Failure>) {
    let f = f_vector_streaming(params);
    let shape = analyze_shape(&PositiveSequence::from(&f));
    let mut failures = Vec::new();
    let mut fail = |check, details: String| {
        failures.push(Failure {
            v: params.v(),
            d: params.d(),
            check,
            details,
        })
    };
    for &check in &cfg.checks {
        match check {
            Check::LogConcave if !shape.log_concave => {
                fail(check, format!("dips at {:?}", shape.dips))
            }
            Check::Unimodal if !shape.unimodal => fail(check, "not unimodal".into()),
            Check::Euler if !f.satisfies_euler() => fail(check, "alternating sum mismatch".into()),
            Check::Routes if ordinal.is_multiple_of(cfg.route_sample.max(1)) => {
                let direct = f_vector_direct(params);
                let tri = f_vector_from_triangle(&build_triangle(params));
                if direct != f || tri != f {
                    fail(
                        check,
                        format!("direct [{direct}] triangle [{tri}] streaming [{f}]"),
                    );
                }
            }
            Check::Audit => {
                let audit = audit_dip_propagation(params);
                if !audit.passed {
                    fail(check, format!("{audit:?}"));
                }
            }
            Check::Oracle if params.v() <= cfg.oracle_cap => {
                match oracle_f_vector(params, cfg.oracle_cap) {
                    Ok(o) if o == f => {}
                    Ok(o) => fail(check, format!("oracle [{o}] formula [{f}]")),
                    Err(e) => fail(check, e.to_string()),
                }
            }
            _ => {}
        }
    }
    (PairRecord::new(&f, &shape), failures)
}

/// Runs every selected check on every valid pair. Results are ordered by
/// `(d, v)` whatever the thread count.
pub fn run_sweep(cfg: &SweepConfig) -> io::Result<SweepReport> {
    let start = Instant::now();
    let pairs = cfg.pairs();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(io::Error::other)?;
    let mut results: Vec<(PairRecord, Vec<Failure>)> = pool.install(|| {
        pairs
            .par_iter()
            .enumerate()
            .map(|(i, &p)| check_pair(p, i, cfg))
            .collect()
    });
    results.sort_by_key(|(r, _)| (r.d, r.v));

    let checked = results.len();
    let mut records = Vec::with_capacity(checked);
    let mut failures = Vec::new();
    for (r, f) in results {
        records.push(r);
        failures.extend(f);
    }
    Ok(SweepReport {
        d_min: cfg.d_min,
        d_max: cfg.d_max,
        v_min: cfg.v_min,
        v_max: cfg.v_max,
        checked,
        records,
        failures,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!(
                "unknown format '{other}' (expected json, csv or text)"
            )),
        }
    }
}

pub const CSV_HEADER: [&str; 7] = [
    "v",
    "d",
    "f_vector",
    "log_concave",
    "unimodal",
    "peak_start",
    "peak_end",
];

/// Writes records: JSON as one object per line, CSV with a header row, text
/// as one line per pair.
pub fn render_records<W: Write>(
    records: &[PairRecord],
    format: Format,
    out: &mut W,
) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                let opt = |x: Option<i64>| x.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([
                    r.v.to_string(),
                    r.d.to_string(),
                    r.joined(";"),
                    r.log_concave.to_string(),
                    r.unimodal.to_string(),
                    opt(r.peak_start),
                    opt(r.peak_end),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                let peak = match (r.peak_start, r.peak_end) {
                    (Some(a), Some(b)) if a == b => format!("peak {a}"),
                    (Some(a), Some(b)) => format!("peak {a}..{b}"),
                    _ => "no peak".to_string(),
                };
                writeln!(
                    out,
                    "C({},{}): {}  log-concave: {}  unimodal: {}  {}",
                    r.v,
                    r.d,
                    r.joined(" "),
                    r.log_concave,
                    r.unimodal,
                    peak
                )?;
            }
        }
    }
    Ok(())
}

/// Records followed, for text output only, by a summary of the sweep.
pub fn render<W: Write>(report: &SweepReport, format: Format, out: &mut W) -> io::Result<()> {
    render_records(&report.records, format, out)?;
    if format == Format::Text {
        write_summary(report, out)?;
    }
    Ok(())
}

pub fn write_summary<W: Write>(report: &SweepReport, out: &mut W) -> io::Result<()> {
    let v_min = report
        .v_min
        .map(|v| v.to_string())
        .unwrap_or_else(|| "d+1".into());
    writeln!(
        out,
        "sweep d {}..{} v {}..{}: checked {} pairs, {} failures in {:.2?}",
        report.d_min,
        report.d_max,
        v_min,
        report.v_max,
        report.checked,
        report.failures.len(),
        report.elapsed
    )?;
    for f in &report.failures {
        writeln!(out, "FAIL C({},{}) {}: {}", f.v, f.d, f.check, f.details)?;
    }
    writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(d: (u32, u32), v: (Option<u32>, u32)) -> SweepConfig {
        SweepConfig {
            d_min: d.0,
            d_max: d.1,
            v_min: v.0,
            v_max: v.1,
            ..SweepConfig::default()
        }
    }

    fn render_string(records: &[PairRecord], format: Format) -> String {
        let mut buf = Vec::new();
        render_records(records, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    fn record(v: u32, d: u32) -> PairRecord {
        let f = f_vector_direct(PolytopeParams::new(v, d).unwrap());
        PairRecord::new(&f, &analyze_shape(&PositiveSequence::from(&f)))
    }

    #[test]
    fn empty_intersection() {
        let r = run_sweep(&cfg((10, 10), (Some(5), 8))).unwrap();
        assert_eq!(r.checked, 0);
        assert!(r.passed());
    }

    #[test]
    fn pairs_skip_invalid_combinations() {
        let c = cfg((1, 3), (Some(3), 5));
        let got: Vec<(u32, u32)> = c.pairs().iter().map(|p| (p.d(), p.v())).collect();
        assert_eq!(got, vec![(2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]);
    }

    #[test]
    fn small_sweep_with_every_check() {
        let mut c = cfg((2, 8), (None, 14));
        c.checks = Check::ALL.to_vec();
        c.route_sample = 1;
        let r = run_sweep(&c).unwrap();
        assert_eq!(r.checked, c.pairs().len());
        assert!(r.passed(), "{:?}", r.failures);
        let keys: Vec<_> = r.records.iter().map(|x| (x.d, x.v)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn json_record() {
        let s = render_string(&[record(6, 4)], Format::Json);
        assert_eq!(
            s,
            "{\"v\":6,\"d\":4,\"f_vector\":[\"1\",\"6\",\"15\",\"18\",\"9\",\"1\"],\
             \"log_concave\":true,\"unimodal\":true,\"peak_start\":2,\"peak_end\":2}\n"
        );
    }

    #[test]
    fn csv_records() {
        let s = render_string(&[record(6, 4), record(5, 4)], Format::Csv);
        let mut lines = s.lines();
        assert_eq!(
            lines.next(),
            Some("v,d,f_vector,log_concave,unimodal,peak_start,peak_end")
        );
        assert_eq!(lines.next(), Some("6,4,1;6;15;18;9;1,true,true,2,2"));
        assert_eq!(lines.next(), Some("5,4,1;5;10;10;5;1,true,true,1,2"));
        assert!(s.ends_with('\n'));
    }

    #[test]
    fn text_record() {
        let s = render_string(&[record(5, 4)], Format::Text);
        assert_eq!(s.lines().count(), 1);
        assert!(s.contains("1 5 10 10 5 1"));
    }

    #[test]
    fn big_entries_stay_exact_in_json() {
        let rec = record(999, 16);
        let s = render_string(std::slice::from_ref(&rec), Format::Json);
        let v: serde_json::Value = serde_json::from_str(s.trim()).unwrap();
        let biggest = rec.f_vector.iter().max().unwrap();
        assert!(*biggest > num_bigint::BigUint::from(u64::MAX));
        let pos = rec.f_vector.iter().position(|x| x == biggest).unwrap();
        assert_eq!(v["f_vector"][pos].as_str().unwrap(), biggest.to_string());
    }
}
