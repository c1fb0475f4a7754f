//! `costas`: build, verify and survey algebraic Costas arrays.
//!
//! Exit codes: 0 ok, 1 usage, 2 inapplicable, 3 not Costas, 4 sweep failure.
//! Data goes to stdout (or `--out`), progress to stderr.

mod document;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use costas_core::density::{census, prime_sieve, CensusKind, CensusOptions, ExpExpr};
use costas_core::fpr::fpr_report;
use costas_core::{
    build, field_of_size, find_spec, sweep, ConstructionSpec, CostasCandidate, Execution, Method,
};
use thiserror::Error;

use document::ArrayDocument;
use report::FprLine;

const MAX_SWEEP_Q: u64 = 4096;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Inapplicable(String),
    #[error("not-costas k={k} x={x} y={y}")]
    NotCostas { k: usize, x: usize, y: usize },
    #[error("sweep failed")]
    SweepFailed,
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Inapplicable(_) => 2,
            CliError::NotCostas { .. } => 3,
            CliError::SweepFailed => 4,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser)]
#[command(
    name = "costas",
    version,
    about = "Algebraic Costas arrays and Fibonacci primitive root censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one array and print it as JSON.
    Build {
        /// w1, w2, l2, g2, g3, g4c2, t4 or g4
        method: Method,
        /// Field size (a prime power).
        q: u64,
        /// Generator, as a field element encoding; searched for when absent.
        #[arg(long)]
        alpha: Option<u64>,
        /// Second generator for g2, g3, g4c2 and g4.
        #[arg(long)]
        beta: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Costas property of a permutation.
    Verify {
        /// JSON array document, or a file holding "a,b,c,..."
        #[arg(conflicts_with = "perm", required_unless_present = "perm")]
        file: Option<PathBuf>,
        /// 1-based permutation, comma separated.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Fibonacci primitive roots and T4/G4 applicability per prime.
    Fpr {
        #[arg(conflicts_with = "range", required_unless_present = "range")]
        p: Option<u64>,
        /// Every odd prime in [A, B].
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        range: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Count primes where a construction or trinomial applies, as CSV.
    Census {
        kind: Kind,
        #[arg(long)]
        limit: u64,
        /// First exponent `c,h`, meaning c + h(p-1)/2.
        #[arg(long, allow_hyphen_values = true)]
        e1: Option<ExpExpr>,
        #[arg(long, allow_hyphen_values = true)]
        e2: Option<ExpExpr>,
        /// Comma separated; defaults to powers of ten and the limit.
        #[arg(long, value_delimiter = ',')]
        checkpoints: Option<Vec<u64>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify every applicable construction for all q <= qmax.
    Sweep {
        #[arg(long, default_value_t = 1024)]
        qmax: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    T4,
    G4,
    Trinomial,
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_build(
    method: Method,
    q: u64,
    alpha: Option<u64>,
    beta: Option<u64>,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let field = field_of_size(q).map_err(usage)?;
    let inapplicable =
        || CliError::Inapplicable(format!("{method}: {}", method.inapplicable_reason()));
    if beta.is_some() && !method.uses_beta() {
        return Err(usage(format!("{method} takes no --beta")));
    }
    let spec = match alpha {
        None if beta.is_some() => return Err(usage("--beta needs --alpha")),
        None => find_spec(method, &field).ok_or_else(inapplicable)?,
        Some(a) => {
            let alpha = field.element(a).map_err(usage)?;
            let beta = match (method.uses_beta(), beta) {
                (false, _) => None,
                (true, Some(b)) => Some(field.element(b).map_err(usage)?),
                // g2 defaults to the Lempel case, the others to beta = 1 - alpha
                (true, None) if method == Method::G2 => Some(alpha.clone()),
                (true, None) => Some(field.element(field.sub_rep(1, a)).map_err(usage)?),
            };
            ConstructionSpec {
                method,
                alpha,
                beta,
            }
        }
    };
    let array = build(&spec).map_err(|e| CliError::Inapplicable(e.to_string()))?;
    let mut json = ArrayDocument::from_build(&spec, &array).to_json();
    json.push('\n');
    emit(&json, out)
}

fn parse_perm(text: &str) -> Result<CostasCandidate, CliError> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    let perm = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|e| usage(format!("bad entry {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    CostasCandidate::new(perm).map_err(usage)
}

fn cmd_verify(file: Option<&PathBuf>, perm: Option<&str>) -> Result<(), CliError> {
    let candidate = match (file, perm) {
        (_, Some(p)) => parse_perm(p)?,
        (Some(path), None) => {
            let text = fs::read_to_string(path)?;
            if text.trim_start().starts_with('{') {
                let doc = ArrayDocument::parse(&text)?;
                CostasCandidate::new(doc.perm).map_err(usage)?
            } else {
                parse_perm(&text)?
            }
        }
        (None, None) => return Err(usage("give FILE or --perm")),
    };
    match candidate.first_collision() {
        None => {
            println!("costas");
            Ok(())
        }
        Some(c) => Err(CliError::NotCostas {
            k: c.k,
            x: c.x,
            y: c.y,
        }),
    }
}

fn cmd_fpr(p: Option<u64>, range: Option<&[u64]>, format: Format) -> Result<(), CliError> {
    let lines: Vec<FprLine> = match (p, range) {
        (Some(p), _) => vec![fpr_report(p).map_err(usage)?.into()],
        (None, Some(&[a, b])) => {
            if a > b {
                return Err(usage(format!("empty range {a}..{b}")));
            }
            let primes: Vec<u64> = prime_sieve(b)
                .map_err(usage)?
                .filter(|&p| p >= a.max(3))
                .collect();
            Execution::default()
                .map_collect(primes, |p| fpr_report(p).map(FprLine::from))
                .into_iter()
                .collect::<Result<_, _>>()
                .map_err(usage)?
        }
        _ => return Err(usage("give p or --range A B")),
    };
    let text = match format {
        Format::Csv => report::fpr_csv(&lines),
        Format::Json => report::fpr_json(&lines),
    };
    emit(&text, None)
}

fn cmd_census(
    kind: Kind,
    limit: u64,
    e1: Option<ExpExpr>,
    e2: Option<ExpExpr>,
    checkpoints: Option<&[u64]>,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let kind = match (kind, e1, e2) {
        (Kind::T4, None, None) => CensusKind::T4,
        (Kind::G4, None, None) => CensusKind::G4,
        (Kind::Trinomial, Some(a), Some(b)) => CensusKind::Trinomial(a, b),
        (Kind::Trinomial, ..) => return Err(usage("trinomial needs --e1 and --e2")),
        _ => return Err(usage("--e1/--e2 only apply to trinomial")),
    };
    eprintln!("census {kind} up to {limit}");
    let start = Instant::now();
    let c = census(kind, limit, checkpoints, CensusOptions::default()).map_err(usage)?;
    let last = c.last();
    eprintln!(
        "done in {:.2}s: {} of {} primes",
        start.elapsed().as_secs_f64(),
        last.count,
        last.pi_x
    );
    emit(&report::census_csv(&c), out)
}

fn cmd_sweep(qmax: u64) -> Result<(), CliError> {
    if qmax > MAX_SWEEP_Q {
        return Err(usage(format!("--qmax {qmax} exceeds {MAX_SWEEP_Q}")));
    }
    eprintln!("sweeping prime powers up to {qmax}");
    let start = Instant::now();
    let r = sweep(qmax, Execution::default());
    eprintln!(
        "built {} arrays in {:.2}s",
        r.built,
        start.elapsed().as_secs_f64()
    );
    let mut text = String::new();
    for m in Method::ALL {
        let qs = r.applicable.get(&m).map(Vec::as_slice).unwrap_or(&[]);
        let list: Vec<String> = qs.iter().map(u64::to_string).collect();
        text.push_str(&format!("{m}: {}\n", list.join(" ")));
    }
    for (m, q, reason) in &r.failures {
        text.push_str(&format!("failure {m} q={q}: {reason}\n"));
    }
    text.push_str(if r.passed() { "PASS\n" } else { "FAIL\n" });
    emit(&text, None)?;
    if r.passed() {
        Ok(())
    } else {
        Err(CliError::SweepFailed)
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("COSTAS_THREADS") else {
        return Ok(());
    };
    let n: usize = value.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        usage(format!(
            "COSTAS_THREADS={value:?} is not a positive integer"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(usage)
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Build {
            method,
            q,
            alpha,
            beta,
            out,
        } => cmd_build(method, q, alpha, beta, out.as_ref()),
        Command::Verify { file, perm } => cmd_verify(file.as_ref(), perm.as_deref()),
        Command::Fpr { p, range, format } => cmd_fpr(p, range.as_deref(), format),
        Command::Census {
            kind,
            limit,
            e1,
            e2,
            checkpoints,
            out,
        } => cmd_census(kind, limit, e1, e2, checkpoints.as_deref(), out.as_ref()),
        Command::Sweep { qmax } => cmd_sweep(qmax),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                // the verdict is data, the rest are diagnostics
                CliError::NotCostas { .. } => println!("{e}"),
                CliError::SweepFailed => {}
                CliError::Inapplicable(reason) => {
                    println!("inapplicable: {reason}");
                    eprintln!("error: {reason}");
                }
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.code())
        }
    }
}
