//! `nary`: exact invariant and semi-invariant counts for n-ary forms.

mod check;
mod output;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use nary_core::{signed_orbit_terms, CountCache, Engine, Limits, Weight};

use output::{Format, Method, OutputRecord};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "nary",
    version,
    about = "Count invariants and semi-invariants of n-ary forms"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Memoize weight multiplicities in $NARY_CACHE_DIR.
    #[arg(long, global = true)]
    cache: bool,

    /// Maximum DP table size for a single multiplicity.
    #[arg(long, global = true, value_name = "N")]
    limit_states: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of independent invariants of degree k.
    Nu { n: usize, d: u32, k: u32 },
    /// Multiplicity of the irreducible module with highest weight lambda in S^k(A).
    Gamma {
        n: usize,
        d: u32,
        k: u32,
        #[arg(long, allow_hyphen_values = true, value_name = "L1,...")]
        lambda: String,
    },
    /// Multiplicity of the weight mu in S^k(A).
    Count {
        n: usize,
        d: u32,
        k: u32,
        #[arg(long, allow_hyphen_values = true, value_name = "M1,...")]
        mu: String,
    },
    /// Signed dominant terms (lambda + rho - s(rho))* over the Weyl group.
    Orbit {
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_name = "L1,...")]
        lambda: Option<String>,
    },
    /// Invariant dimensions for k = 0..=kmax.
    Table {
        n: usize,
        d: u32,
        #[arg(long)]
        kmax: u32,
    },
    /// Number of invariants through the generating-function expansion.
    Series {
        n: usize,
        d: u32,
        k: u32,
        /// Write the expanded series as JSON lines to this file.
        #[arg(long, value_name = "PATH")]
        dump: Option<PathBuf>,
    },
    /// Cross-check every method and oracle; without n and d runs n <= 3, d <= 3.
    Check {
        n: Option<usize>,
        d: Option<u32>,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(nary_core::Error),
    Io(io::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<nary_core::Error> for Failure {
    fn from(e: nary_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Core(nary_core::Error::InvalidInput(_)) => EXIT_USAGE,
            Failure::Core(e) if e.is_resource_limit() => EXIT_RESOURCE,
            _ => 1,
        }
    }
}

/// Parses `a,b,c` into exactly `n - 1` integers.
fn parse_weight(name: &str, n: usize, text: &str) -> Result<Weight, Failure> {
    if n < 2 {
        return Err(Failure::Usage(format!("n must be at least 2, got {n}")));
    }
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let mut comps = Vec::with_capacity(parts.len());
    for (pos, p) in parts.iter().enumerate() {
        let value = p.parse::<i64>().map_err(|_| {
            Failure::Usage(format!(
                "--{name}: entry {} ({p:?}) is not an integer",
                pos + 1
            ))
        })?;
        comps.push(value);
    }
    if comps.len() != n - 1 {
        return Err(Failure::Usage(format!(
            "--{name}: expected {} entries for n = {n}, got {}",
            n - 1,
            comps.len()
        )));
    }
    Ok(Weight::new(comps))
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn engine(cli: &Cli) -> Result<Engine, Failure> {
    let mut limits = Limits::default();
    if let Some(states) = cli.limit_states {
        limits.max_states = states;
    }
    let mut engine = Engine::new(limits);
    if cli.cache {
        match CountCache::from_env()? {
            Some(cache) => engine = engine.with_cache(cache),
            None => eprintln!("nary: --cache given but NARY_CACHE_DIR is unset; caching disabled"),
        }
    }
    Ok(engine)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let engine = engine(&cli)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let format = cli.format;

    let single = |out: &mut BufWriter<_>, record: OutputRecord| -> Result<u8, Failure> {
        output::write_records(out, format, &[record], false)?;
        Ok(0)
    };

    let code = match &cli.command {
        &Command::Nu { n, d, k } => {
            let start = Instant::now();
            let result = engine.nu(n, d, k)?;
            single(
                &mut out,
                OutputRecord {
                    n,
                    d,
                    k,
                    lambda: None,
                    mu: None,
                    result: result.to_string(),
                    elapsed_ms: elapsed_ms(start),
                    method: Method::Theorem1,
                },
            )?
        }
        Command::Gamma { n, d, k, lambda } => {
            let (n, d, k) = (*n, *d, *k);
            let lambda = parse_weight("lambda", n, lambda)?;
            if !lambda.is_dominant() {
                return Err(Failure::Usage(format!(
                    "--lambda: {lambda} is not dominant (entries must be >= 0)"
                )));
            }
            let start = Instant::now();
            let result = engine.gamma(n, d, k, &lambda)?;
            single(
                &mut out,
                OutputRecord {
                    n,
                    d,
                    k,
                    lambda: Some(lambda.components().to_vec()),
                    mu: None,
                    result: result.to_string(),
                    elapsed_ms: elapsed_ms(start),
                    method: Method::Theorem2,
                },
            )?
        }
        Command::Count { n, d, k, mu } => {
            let (n, d, k) = (*n, *d, *k);
            let mu = parse_weight("mu", n, mu)?;
            let start = Instant::now();
            let result = engine.c(n, d, k, &mu)?;
            single(
                &mut out,
                OutputRecord {
                    n,
                    d,
                    k,
                    lambda: None,
                    mu: Some(mu.components().to_vec()),
                    result: result.to_string(),
                    elapsed_ms: elapsed_ms(start),
                    method: Method::Count,
                },
            )?
        }
        Command::Orbit { n, lambda } => {
            let n = *n;
            let shift = match lambda {
                Some(text) => parse_weight("lambda", n, text)?,
                None if n >= 2 => Weight::zero(n),
                None => return Err(Failure::Usage(format!("n must be at least 2, got {n}"))),
            };
            let terms = signed_orbit_terms(n, &shift, engine.limits())?;
            let echoed = lambda.as_ref().map(|_| shift.components());
            output::write_orbit(&mut out, format, n, echoed, &terms)?;
            0
        }
        &Command::Table { n, d, kmax } => {
            let mut records = Vec::with_capacity(kmax as usize + 1);
            for k in 0..=kmax {
                let start = Instant::now();
                let result = engine.nu(n, d, k)?;
                records.push(OutputRecord {
                    n,
                    d,
                    k,
                    lambda: None,
                    mu: None,
                    result: result.to_string(),
                    elapsed_ms: elapsed_ms(start),
                    method: Method::Theorem1,
                });
            }
            output::write_records(&mut out, format, &records, true)?;
            0
        }
        Command::Series { n, d, k, dump } => {
            let (n, d, k) = (*n, *d, *k);
            let start = Instant::now();
            let series = nary_core::expand_r(n, d, k, engine.limits())?;
            let result = nary_core::nu_from_series(&series, k, engine.limits())?;
            let elapsed = elapsed_ms(start);
            if let Some(path) = dump {
                let mut file = BufWriter::new(File::create(path)?);
                series.write_jsonl(&mut file)?;
                file.flush()?;
            }
            single(
                &mut out,
                OutputRecord {
                    n,
                    d,
                    k,
                    lambda: None,
                    mu: None,
                    result: result.to_string(),
                    elapsed_ms: elapsed,
                    method: Method::Series,
                },
            )?
        }
        &Command::Check { n, d, kmax } => {
            let grid: Vec<(usize, u32)> = match (n, d) {
                (Some(n), Some(d)) => vec![(n, d)],
                (None, None) => (2..=3).flat_map(|n| (1..=3).map(move |d| (n, d))).collect(),
                _ => {
                    return Err(Failure::Usage(
                        "check takes both n and d, or neither".into(),
                    ))
                }
            };
            let mut all_agree = true;
            let mut records = Vec::new();
            for slice in grid {
                all_agree &= check::run(&engine, &mut out, format, &mut records, slice, kmax)?;
            }
            if format != Format::Plain {
                output::write_records(&mut out, format, &records, true)?;
            }
            if all_agree {
                0
            } else {
                eprintln!("nary: oracle disagreement");
                EXIT_DISAGREEMENT
            }
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nary: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
