use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclic_faces::sweep::{self, Check, Format, PairRecord, SweepConfig};
use cyclic_faces::{
    analyze_shape, audit_dip_propagation, build_triangle, enumerate_facets, f_vector_direct,
    f_vector_from_triangle, find_dips, h_vector, oracle_f_vector, Error, ExtendedFSequence,
    PolytopeParams, PositiveSequence, DEFAULT_ORACLE_CAP,
};

const EXIT_CHECK_FAILED: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "cyclic-faces", version)]
#[command(about = "Exact f-vectors, h-vectors and shape checks for cyclic polytopes C(v,d)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the extended f-sequence f_{-1} .. f_{d-1}, 1
    Fvector {
        #[command(flatten)]
        pair: Pair,
        /// Which computation to use
        #[arg(long, value_enum, default_value_t = Route::Direct)]
        route: Route,
        #[command(flatten)]
        out: Output,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: u32,
    },
    /// Print the h-vector h_0 .. h_d
    Hvector {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        out: Output,
    },
    /// Print the generalized Pascal triangle, one row per line, with dips
    Triangle {
        #[command(flatten)]
        pair: Pair,
        /// Also run the dip-propagation audit
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Report log-concavity and unimodality of the f-sequence
    Check {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        out: Output,
    },
    /// Count faces by Gale's evenness condition (small v only)
    Oracle {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: u32,
        /// List the facets as well
        #[arg(long)]
        facets: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check every valid (v, d) pair in a range
    Sweep {
        #[arg(long, default_value_t = 2)]
        d_min: u32,
        #[arg(long, default_value_t = 16)]
        d_max: u32,
        /// Lower vertex bound [default: d+1 for each d]
        #[arg(long)]
        v_min: Option<u32>,
        #[arg(long, default_value_t = 200)]
        v_max: u32,
        /// Comma-separated checks: log-concave, unimodal, euler, routes, audit, oracle
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "log-concave,euler,routes"
        )]
        checks: Vec<Check>,
        /// Run route equivalence on every N-th pair
        #[arg(long, default_value_t = 50)]
        route_sample: usize,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Pair {
    /// Number of vertices
    #[arg(long = "v")]
    v: u32,
    /// Dimension
    #[arg(long = "d")]
    d: u32,
}

impl Pair {
    fn params(&self) -> Result<PolytopeParams, Error> {
        PolytopeParams::new(self.v, self.d)
    }
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write to FILE instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Direct,
    Triangle,
    Oracle,
    All,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}

fn warn_cap(cap: u32) {
    if cap > DEFAULT_ORACLE_CAP {
        eprintln!("warning: oracle cap raised to {cap}; enumeration cost grows like C(v,d) * 2^d");
    }
}

fn record_of(f: &ExtendedFSequence) -> PairRecord {
    PairRecord::new(f, &analyze_shape(&PositiveSequence::from(f)))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Fvector {
            pair,
            route,
            out,
            oracle_cap,
        } => {
            let params = pair.params()?;
            warn_cap(oracle_cap);
            let mut w = out.writer()?;
            let routes: Vec<(&str, ExtendedFSequence)> = match route {
                Route::Direct => vec![("direct", f_vector_direct(params))],
                Route::Triangle => {
                    vec![("triangle", f_vector_from_triangle(&build_triangle(params)))]
                }
                Route::Oracle => vec![("oracle", oracle_f_vector(params, oracle_cap)?)],
                Route::All => {
                    let mut all = vec![
                        ("direct", f_vector_direct(params)),
                        ("triangle", f_vector_from_triangle(&build_triangle(params))),
                    ];
                    match oracle_f_vector(params, oracle_cap) {
                        Ok(f) => all.push(("oracle", f)),
                        Err(e) => eprintln!("note: oracle route skipped: {e}"),
                    }
                    all
                }
            };
            let agree = routes.windows(2).all(|p| p[0].1 == p[1].1);
            match out.format {
                Format::Text if routes.len() == 1 => writeln!(w, "{}", routes[0].1)?,
                Format::Text => {
                    for (name, f) in &routes {
                        writeln!(w, "{:<9} {}", format!("{name}:"), f)?;
                    }
                    writeln!(w, "routes agree: {agree}")?;
                }
                fmt => sweep::render_records(&[record_of(&routes[0].1)], fmt, &mut w)?,
            }
            w.flush()?;
            if !agree {
                return Err(Failure::Check);
            }
        }
        Command::Hvector { pair, out } => {
            let params = pair.params()?;
            let h = h_vector(params);
            let mut w = out.writer()?;
            match out.format {
                Format::Text => writeln!(w, "{h}")?,
                Format::Json => {
                    let entries: Vec<String> = h.entries().iter().map(|x| x.to_string()).collect();
                    writeln!(
                        w,
                        "{}",
                        json!({"v": params.v(), "d": params.d(), "h_vector": entries})
                    )?
                }
                Format::Csv => {
                    writeln!(w, "v,d,h_vector")?;
                    let joined: Vec<String> = h.entries().iter().map(|x| x.to_string()).collect();
                    writeln!(w, "{},{},{}", params.v(), params.d(), joined.join(";"))?
                }
            }
            w.flush()?;
        }
        Command::Triangle { pair, audit, out } => {
            let params = pair.params()?;
            let tri = build_triangle(params);
            let mut w = out.writer()?;
            let dips: Vec<Vec<i64>> = tri
                .rows()
                .map(|r| find_dips(&PositiveSequence::new(r.to_vec()).expect("positive")))
                .collect();
            let report = audit.then(|| audit_dip_propagation(params));
            match out.format {
                Format::Json => {
                    let rows: Vec<Vec<String>> = tri
                        .rows()
                        .map(|r| r.iter().map(|x| x.to_string()).collect())
                        .collect();
                    let mut obj =
                        json!({"v": params.v(), "d": params.d(), "rows": rows, "dips": dips});
                    if let Some(a) = &report {
                        obj["audit"] = serde_json::to_value(a).map_err(io::Error::other)?;
                    }
                    writeln!(w, "{obj}")?;
                }
                _ => {
                    for (k, row) in tri.rows().enumerate() {
                        let text: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        write!(w, "P({k}): {}", text.join(" "))?;
                        if !dips[k].is_empty() {
                            write!(w, "  dips at {:?}", dips[k])?;
                        }
                        writeln!(w)?;
                    }
                    if let Some(a) = &report {
                        writeln!(w, "audit: {}", if a.passed { "PASS" } else { "FAIL" })?;
                    }
                }
            }
            w.flush()?;
            if report.is_some_and(|a| !a.passed) {
                return Err(Failure::Check);
            }
        }
        Command::Check { pair, out } => {
            let params = pair.params()?;
            let f = f_vector_direct(params);
            let shape = analyze_shape(&PositiveSequence::from(&f));
            let mut w = out.writer()?;
            match out.format {
                Format::Text => {
                    writeln!(w, "{params}: {f}")?;
                    writeln!(w, "log-concave: {}", shape.log_concave)?;
                    writeln!(w, "unimodal: {}", shape.unimodal)?;
                    match (shape.peak_start, shape.peak_end) {
                        (Some(a), Some(b)) if a == b => writeln!(w, "peak: {a}")?,
                        (Some(a), Some(b)) => writeln!(w, "peak: {a}..{b}")?,
                        _ => writeln!(w, "peak: none")?,
                    }
                    writeln!(w, "dips: {:?}", shape.dips)?;
                }
                fmt => sweep::render_records(&[PairRecord::new(&f, &shape)], fmt, &mut w)?,
            }
            w.flush()?;
            if !shape.log_concave {
                return Err(Failure::Check);
            }
        }
        Command::Oracle {
            pair,
            oracle_cap,
            facets,
            out,
        } => {
            let params = pair.params()?;
            warn_cap(oracle_cap);
            let f = oracle_f_vector(params, oracle_cap)?;
            let mut w = out.writer()?;
            match out.format {
                Format::Text => {
                    writeln!(w, "{f}")?;
                    if facets {
                        for s in enumerate_facets(params, oracle_cap)?.facets {
                            writeln!(w, "{:?}", s.members())?;
                        }
                    }
                }
                fmt => sweep::render_records(&[record_of(&f)], fmt, &mut w)?,
            }
            w.flush()?;
        }
        Command::Sweep {
            d_min,
            d_max,
            v_min,
            v_max,
            checks,
            route_sample,
            jobs,
            oracle_cap,
            out,
        } => {
            if checks.contains(&Check::Oracle) {
                warn_cap(oracle_cap);
            }
            let cfg = SweepConfig {
                d_min,
                d_max,
                v_min,
                v_max,
                checks,
                route_sample,
                oracle_cap,
                jobs,
            };
            let report = sweep::run_sweep(&cfg)?;
            let mut w = out.writer()?;
            sweep::render(&report, out.format, &mut w)?;
            w.flush()?;
            if out.format != Format::Text {
                sweep::write_summary(&report, &mut io::stderr())?;
            }
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}
