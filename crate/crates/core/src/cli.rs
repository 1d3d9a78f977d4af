//! Command-line front end.
//!
//! Data goes to the output sink, diagnostics to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | every requested solve is optimal |
//! | 1 | at least one solve is infeasible (results are still written) |
//! | 2 | usage or validation error |
//! | 3 | internal consistency failure |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{ratio_to_f64, EXACT_LIMIT};
use crate::decomposition::{self, AlphaVector};
use crate::error::Error;
use crate::models::{self, DisparitySolution, KPoint, Method, Status};
use crate::owa::{self, OrnessLevel, WeightVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const MAX_GRID: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "owa-minimax", version, about = "Minimax disparity OWA weights")]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,

    /// Run the internal consistency suite and exit.
    #[arg(long, hide = true, global = true)]
    seed_check: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Solve one instance.
    Solve(SolveArgs),
    /// Solve over a list or grid of orness levels.
    Sweep(SolveArgs),
    /// Alpha-space delta as a function of the k-additive level.
    Kcurve(KcurveArgs),
    /// Weights encoded by a coefficient vector.
    ToWeights(ToWeightsArgs),
    /// Decomposition coefficients of a weight vector.
    ToAlpha(ToAlphaArgs),
    /// Orness and disparity of a weight vector.
    Measures(MeasuresArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    output: OutputFormat,
    /// Decimal places in table output.
    #[arg(long, default_value_t = 4)]
    precision: usize,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    /// A decimal, or a grid `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    eta: String,
    #[arg(long, default_value = "alpha")]
    method: Method,
    /// k-additive level (alpha method only); defaults to n.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct KcurveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    eta: String,
    /// `a:b`, a comma list, or a single level; defaults to `1:n`.
    #[arg(long)]
    k: Option<String>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ToWeightsArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated `alpha_1..alpha_k`; missing trailing entries are zero.
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ToAlphaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct MeasuresArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    weights: String,
    #[command(flatten)]
    out: OutputArgs,
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub format: OutputFormat,
    pub precision: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Solve {
        n: usize,
        eta: f64,
        method: Method,
        k: Option<usize>,
    },
    Sweep {
        n: usize,
        etas: Vec<f64>,
        method: Method,
        k: Option<usize>,
    },
    Kcurve {
        n: usize,
        eta: f64,
        ks: Vec<usize>,
    },
    ToWeights {
        n: usize,
        alpha: Vec<Decimal>,
    },
    ToAlpha {
        n: usize,
        weights: Vec<Decimal>,
    },
    Measures {
        weights: Vec<f64>,
    },
    SeedCheck,
}

/// A decimal literal kept both exactly and as the nearest `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decimal {
    pub exact: BigRational,
    pub value: f64,
}

/// What went wrong before any output was produced.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        Self(e.to_string())
    }
}

impl RunConfig {
    pub fn from_args<I, T>(args: I) -> Result<Self, ParseOutcome>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                ParseOutcome::Info(e.to_string())
            }
            _ => ParseOutcome::Usage(UsageError(first_line(&e.to_string()))),
        })?;
        if cli.seed_check {
            return Ok(Self {
                task: Task::SeedCheck,
                format: OutputFormat::Table,
                precision: 4,
            });
        }
        let Some(cmd) = cli.command else {
            return Err(ParseOutcome::Usage(UsageError(
                "a subcommand is required (solve, sweep, kcurve, to-weights, to-alpha, measures)"
                    .into(),
            )));
        };
        Self::from_command(cmd).map_err(ParseOutcome::Usage)
    }

    fn from_command(cmd: Cmd) -> Result<Self, UsageError> {
        let (task, out) = match cmd {
            Cmd::Solve(a) => {
                check_n(a.n)?;
                let eta = parse_single_eta(&a.eta)?;
                let k = check_k(a.method, a.k, a.n)?;
                (
                    Task::Solve {
                        n: a.n,
                        eta,
                        method: a.method,
                        k,
                    },
                    a.out,
                )
            }
            Cmd::Sweep(a) => {
                check_n(a.n)?;
                let etas = parse_eta_spec(&a.eta)?;
                let k = check_k(a.method, a.k, a.n)?;
                (
                    Task::Sweep {
                        n: a.n,
                        etas,
                        method: a.method,
                        k,
                    },
                    a.out,
                )
            }
            Cmd::Kcurve(a) => {
                check_n(a.n)?;
                let eta = parse_single_eta(&a.eta)?;
                let ks = match &a.k {
                    Some(spec) => parse_k_spec(spec, a.n)?,
                    None => (1..=a.n).collect(),
                };
                (Task::Kcurve { n: a.n, eta, ks }, a.out)
            }
            Cmd::ToWeights(a) => {
                check_n(a.n)?;
                let alpha = parse_decimal_list(&a.alpha)?;
                if alpha.len() > a.n {
                    return Err(UsageError(format!(
                        "{} coefficients given for n = {}",
                        alpha.len(),
                        a.n
                    )));
                }
                (Task::ToWeights { n: a.n, alpha }, a.out)
            }
            Cmd::ToAlpha(a) => {
                check_n(a.n)?;
                let weights = parse_decimal_list(&a.weights)?;
                if weights.len() != a.n {
                    return Err(UsageError(format!(
                        "{} weights given for n = {}",
                        weights.len(),
                        a.n
                    )));
                }
                (Task::ToAlpha { n: a.n, weights }, a.out)
            }
            Cmd::Measures(a) => {
                let weights: Vec<f64> = parse_decimal_list(&a.weights)?
                    .into_iter()
                    .map(|d| d.value)
                    .collect();
                if let Some(n) = a.n {
                    check_n(n)?;
                    if weights.len() != n {
                        return Err(UsageError(format!(
                            "{} weights given for n = {n}",
                            weights.len()
                        )));
                    }
                }
                (Task::Measures { weights }, a.out)
            }
        };
        Ok(Self {
            task,
            format: out.output,
            precision: out.precision,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseOutcome {
    /// Help or version text; print it and exit 0.
    Info(String),
    Usage(UsageError),
}

fn first_line(s: &str) -> String {
    s.lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or(s)
        .trim()
        .to_string()
}

fn check_n(n: usize) -> Result<(), UsageError> {
    if n < 2 {
        return Err(UsageError(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn check_k(method: Method, k: Option<usize>, n: usize) -> Result<Option<usize>, UsageError> {
    match (method, k) {
        (Method::WeightSpace, Some(_)) => {
            Err(UsageError("--k only applies to --method alpha".into()))
        }
        (Method::AlphaSpace, Some(k)) if k == 0 || k > n => {
            Err(UsageError(format!("--k must lie in 1..={n}, got {k}")))
        }
        (_, k) => Ok(k),
    }
}

/// Parse `[-]digits[.digits][e[-]digits]` exactly.
pub fn parse_decimal(s: &str) -> Result<Decimal, UsageError> {
    let bad = || UsageError(format!("not a decimal number: '{s}'"));
    let t = s.trim();
    let (body, exp) = match t.find(['e', 'E']) {
        Some(p) => (&t[..p], t[p + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (negative, body) = match body.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, body.strip_prefix('+').unwrap_or(body)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty()
        || !int.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    if exp.unsigned_abs() > 400 {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut exact = BigRational::from_integer(digits);
    if scale >= 0 {
        exact *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        exact /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    if negative {
        exact = -exact;
    }
    let value: f64 = t.parse().map_err(|_| bad())?;
    Ok(Decimal { exact, value })
}

pub fn parse_decimal_list(s: &str) -> Result<Vec<Decimal>, UsageError> {
    s.split(',').map(parse_decimal).collect()
}

fn parse_single_eta(s: &str) -> Result<f64, UsageError> {
    if s.contains(':') {
        return Err(UsageError("this command takes a single --eta value".into()));
    }
    let eta = parse_decimal(s)?.value;
    OrnessLevel::new(eta)?;
    Ok(eta)
}

/// A single decimal, a comma list, or a grid `start:stop:step`.
///
/// Grid points are computed on the common decimal scale and converted once,
/// so `0:1:0.1` yields exactly the literals `0.3`, `0.7`, ...
pub fn parse_eta_spec(s: &str) -> Result<Vec<f64>, UsageError> {
    let etas = if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(UsageError(format!(
                "grid must be start:stop:step, got '{s}'"
            )));
        };
        let (start, stop, step) = (
            parse_decimal(start)?,
            parse_decimal(stop)?,
            parse_decimal(step)?,
        );
        if step.exact <= BigRational::zero() {
            return Err(UsageError("grid step must be positive".into()));
        }
        if stop.exact < start.exact {
            return Err(UsageError("grid stop is below start".into()));
        }
        let count = ((&stop.exact - &start.exact) / &step.exact).floor();
        let count: usize = count
            .to_integer()
            .try_into()
            .ok()
            .filter(|c: &usize| *c < MAX_GRID)
            .ok_or_else(|| UsageError("grid has too many points".into()))?;
        (0..=count)
            .map(|i| {
                let v = &start.exact + &step.exact * BigRational::from_integer(i.into());
                ratio_to_f64(&v)
            })
            .collect()
    } else {
        parse_decimal_list(s)?
            .into_iter()
            .map(|d| d.value)
            .collect::<Vec<_>>()
    };
    for &eta in &etas {
        OrnessLevel::new(eta)?;
    }
    Ok(etas)
}

/// `a:b` (inclusive), a comma list, or a single level.
pub fn parse_k_spec(s: &str, n: usize) -> Result<Vec<usize>, UsageError> {
    let bad = || UsageError(format!("bad --k specification '{s}'"));
    let ks: Vec<usize> = if let Some((a, b)) = s.split_once(':') {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        s.split(',')
            .map(|k| k.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    };
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k > n) {
        return Err(UsageError(format!("--k must lie in 1..={n}, got {k}")));
    }
    Ok(ks)
}

// ---------------------------------------------------------------------------
// JSON documents

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub version: String,
}

/// One result row of `solve`, `sweep` or `kcurve`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub eta: f64,
    pub k: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub weights: Vec<f64>,
    pub alpha: Vec<f64>,
    pub orness: f64,
    pub disparity: f64,
    /// Exact rationals (`p/q`) of the computed side, when available.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasuresRecord {
    pub orness: f64,
    pub disparity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub meta: Meta,
    pub results: Vec<T>,
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn clean_all(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(clean).collect()
}

impl From<&DisparitySolution> for SolutionRecord {
    fn from(s: &DisparitySolution) -> Self {
        Self {
            eta: s.eta.value(),
            k: s.k,
            status: s.status,
            delta: s.delta.map(clean),
            weights: s.weights.as_ref().map(|w| clean_all(w.as_slice())),
            alpha: s.alpha.as_ref().map(|a| clean_all(a.as_slice())),
        }
    }
}

/// Rebuild and validate solutions from a `solve`/`sweep` JSON document.
pub fn solutions_from_json(json: &str) -> Result<Vec<DisparitySolution>, Error> {
    let doc: Document<SolutionRecord> = serde_json::from_str(json)
        .map_err(|e| Error::Consistency(format!("unreadable document: {e}")))?;
    let method = doc
        .meta
        .method
        .ok_or_else(|| Error::Consistency("document has no method".into()))?;
    doc.results
        .into_iter()
        .map(|r| {
            let s = DisparitySolution {
                n: doc.meta.n,
                eta: OrnessLevel::new(r.eta)?,
                method,
                k: r.k,
                status: r.status,
                weights: r.weights.map(WeightVector::try_from).transpose()?,
                alpha: r.alpha.map(AlphaVector::new).transpose()?,
                delta: r.delta,
                iterations: 0,
            };
            s.validate()?;
            Ok(s)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// running

/// Execute a configuration, writing data to `out`. Returns the exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    let mut buf = String::new();
    let code = match execute(config, &mut buf) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return EXIT_INTERNAL;
        }
    };
    if out
        .write_all(buf.as_bytes())
        .and_then(|_| out.flush())
        .is_err()
    {
        eprintln!("error: cannot write output");
        return EXIT_INTERNAL;
    }
    code
}

/// Parse `args` (including the program name) and run.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::from_args(args) {
        Ok(config) => run(&config, out),
        Err(ParseOutcome::Info(text)) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(ParseOutcome::Usage(UsageError(msg))) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(msg) => Self::Internal(msg),
            other => Self::Usage(other.to_string()),
        }
    }
}

fn meta(command: &str, n: usize, method: Option<Method>, k: Option<usize>) -> Meta {
    Meta {
        command: command.into(),
        n,
        method,
        k,
        version: env!("CARGO_PKG_VERSION").into(),
    }
}

fn execute(config: &RunConfig, buf: &mut String) -> Result<i32, Failure> {
    let fmt = config.format;
    let prec = config.precision;
    match &config.task {
        Task::Solve { n, eta, method, k } => {
            let s = models::solve_minimax_disparity(*n, *eta, *method, *k)?;
            let k = (*method == Method::AlphaSpace).then_some(s.k);
            emit_solutions(buf, meta("solve", *n, Some(*method), k), &[s], fmt, prec)
        }
        Task::Sweep { n, etas, method, k } => {
            let sols = models::sweep(*n, etas, *method, *k)?;
            let k = (*method == Method::AlphaSpace).then_some(k.unwrap_or(*n));
            emit_solutions(buf, meta("sweep", *n, Some(*method), k), &sols, fmt, prec)
        }
        Task::Kcurve { n, eta, ks } => {
            let pts = models::kcurve(*n, *eta, ks)?;
            emit_kcurve(
                buf,
                meta("kcurve", *n, Some(Method::AlphaSpace), None),
                *eta,
                &pts,
                fmt,
                prec,
            )
        }
        Task::ToWeights { n, alpha } => to_weights(buf, *n, alpha, fmt, prec),
        Task::ToAlpha { n, weights } => to_alpha(buf, *n, weights, fmt, prec),
        Task::Measures { weights } => {
            let w = WeightVector::new(weights.clone())?;
            let rec = MeasuresRecord {
                orness: clean(owa::orness(&w).value()),
                disparity: clean(owa::disparity(&w)),
            };
            let doc = Document {
                meta: meta("measures", w.n(), None, None),
                results: vec![rec],
            };
            match fmt {
                OutputFormat::Json => json(buf, &doc),
                OutputFormat::Csv => {
                    let r = &doc.results[0];
                    let _ = writeln!(buf, "orness,disparity\n{},{}", r.orness, r.disparity);
                }
                OutputFormat::Table => {
                    let r = &doc.results[0];
                    let _ = writeln!(buf, "orness     {:.*}", prec, r.orness);
                    let _ = writeln!(buf, "disparity  {:.*}", prec, r.disparity);
                }
            }
            Ok(EXIT_OK)
        }
        Task::SeedCheck => match seed_check() {
            Ok(summary) => {
                let _ = writeln!(buf, "{summary}");
                Ok(EXIT_OK)
            }
            Err(msg) => {
                eprintln!("seed-check failed: {msg}");
                Ok(EXIT_INFEASIBLE)
            }
        },
    }
}

fn json<T: Serialize>(buf: &mut String, value: &T) {
    buf.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
    buf.push('\n');
}

fn exit_for(statuses: impl IntoIterator<Item = Status>) -> i32 {
    if statuses.into_iter().all(|s| s == Status::Optimal) {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn emit_solutions(
    buf: &mut String,
    meta: Meta,
    sols: &[DisparitySolution],
    fmt: OutputFormat,
    prec: usize,
) -> Result<i32, Failure> {
    let n = meta.n;
    let records: Vec<SolutionRecord> = sols.iter().map(SolutionRecord::from).collect();
    match fmt {
        OutputFormat::Json => json(
            buf,
            &Document {
                meta,
                results: records.clone(),
            },
        ),
        OutputFormat::Csv => {
            let mut header = vec!["eta".to_string(), "status".into(), "delta".into()];
            header.extend((1..=n).map(|i| format!("w_{i}")));
            header.extend((1..=n).map(|j| format!("alpha_{j}")));
            let _ = writeln!(buf, "{}", header.join(","));
            for r in &records {
                let mut row = vec![r.eta.to_string(), status_str(r.status).into()];
                row.push(r.delta.map(|d| d.to_string()).unwrap_or_default());
                for v in [&r.weights, &r.alpha] {
                    match v {
                        Some(v) => row.extend(v.iter().map(f64::to_string)),
                        None => row.extend(std::iter::repeat_n(String::new(), n)),
                    }
                }
                let _ = writeln!(buf, "{}", row.join(","));
            }
        }
        OutputFormat::Table => {
            let mut lines: Vec<(String, Vec<String>)> = Vec::new();
            let cell = |v: Option<f64>| v.map_or("-".to_string(), |x| fixed(x, prec));
            lines.push((
                "eta".into(),
                records.iter().map(|r| r.eta.to_string()).collect(),
            ));
            lines.push((
                "status".into(),
                records
                    .iter()
                    .map(|r| status_str(r.status).to_string())
                    .collect(),
            ));
            for j in 0..n {
                lines.push((
                    format!("alpha_{}", j + 1),
                    records
                        .iter()
                        .map(|r| cell(r.alpha.as_ref().map(|a| a[j])))
                        .collect(),
                ));
            }
            for i in 0..n {
                lines.push((
                    format!("w_{}", i + 1),
                    records
                        .iter()
                        .map(|r| cell(r.weights.as_ref().map(|w| w[i])))
                        .collect(),
                ));
            }
            lines.push((
                "delta".into(),
                records.iter().map(|r| cell(r.delta)).collect(),
            ));
            render_columns(buf, &lines);
        }
    }
    Ok(exit_for(records.iter().map(|r| r.status)))
}

fn render_columns(buf: &mut String, lines: &[(String, Vec<String>)]) {
    let label_w = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let cols = lines.first().map_or(0, |(_, c)| c.len());
    let widths: Vec<usize> = (0..cols)
        .map(|c| lines.iter().map(|(_, v)| v[c].len()).max().unwrap_or(0))
        .collect();
    for (label, cells) in lines {
        let mut line = format!("{label:<label_w$}");
        for (cell, w) in cells.iter().zip(&widths) {
            let _ = write!(line, "  {cell:>w$}");
        }
        let _ = writeln!(buf, "{}", line.trim_end());
    }
}

/// Fixed-point text without a sign on values that round to zero.
fn fixed(x: f64, prec: usize) -> String {
    let s = format!("{:.*}", prec, x);
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Optimal => "optimal",
        Status::Infeasible => "infeasible",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KcurveRecord {
    pub eta: f64,
    pub k: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<f64>,
}

fn emit_kcurve(
    buf: &mut String,
    meta: Meta,
    eta: f64,
    pts: &[KPoint],
    fmt: OutputFormat,
    prec: usize,
) -> Result<i32, Failure> {
    let records: Vec<KcurveRecord> = pts
        .iter()
        .map(|p| KcurveRecord {
            eta,
            k: p.k,
            status: p.status,
            delta: p.delta.map(clean),
        })
        .collect();
    match fmt {
        OutputFormat::Json => json(
            buf,
            &Document {
                meta,
                results: records.clone(),
            },
        ),
        OutputFormat::Csv => {
            let _ = writeln!(buf, "k,status,delta");
            for r in &records {
                let d = r.delta.map(|d| d.to_string()).unwrap_or_default();
                let _ = writeln!(buf, "{},{},{d}", r.k, status_str(r.status));
            }
        }
        OutputFormat::Table => {
            let _ = writeln!(buf, "{:>3}  {:<10}  delta", "k", "status");
            for r in &records {
                let d = r.delta.map_or("-".to_string(), |d| fixed(d, prec));
                let _ = writeln!(buf, "{:>3}  {:<10}  {d}", r.k, status_str(r.status));
            }
        }
    }
    Ok(exit_for(records.iter().map(|r| r.status)))
}

fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn to_weights(
    buf: &mut String,
    n: usize,
    alpha: &[Decimal],
    fmt: OutputFormat,
    prec: usize,
) -> Result<i32, Failure> {
    let leading: Vec<f64> = alpha.iter().map(|d| d.value).collect();
    let a = AlphaVector::truncated(n, &leading)?;
    let w = decomposition::alpha_to_weights(&a)?;
    let exact = (n <= EXACT_LIMIT).then(|| {
        let mut ex: Vec<BigRational> = alpha.iter().map(|d| d.exact.clone()).collect();
        ex.resize(n, BigRational::zero());
        decomposition::alpha_to_weights_exact(&ex)
            .iter()
            .map(ratio_string)
            .collect()
    });
    let rec = TransformRecord {
        orness: clean(owa::orness(&w).value()),
        disparity: clean(owa::disparity(&w)),
        weights: clean_all(w.as_slice()),
        alpha: clean_all(a.as_slice()),
        exact,
    };
    emit_transform(buf, meta("to-weights", n, None, None), rec, fmt, prec);
    Ok(EXIT_OK)
}

fn to_alpha(
    buf: &mut String,
    n: usize,
    weights: &[Decimal],
    fmt: OutputFormat,
    prec: usize,
) -> Result<i32, Failure> {
    let w = WeightVector::new(weights.iter().map(|d| d.value).collect())?;
    let (alpha, exact) = if n <= EXACT_LIMIT {
        let ex: Vec<BigRational> = weights.iter().map(|d| d.exact.clone()).collect();
        let alpha = decomposition::weights_to_alpha_exact(&ex);
        let floats = alpha.iter().map(ratio_to_f64).collect();
        (floats, Some(alpha.iter().map(ratio_string).collect()))
    } else {
        (decomposition::weights_to_alpha(&w).into_inner(), None)
    };
    let rec = TransformRecord {
        orness: clean(owa::orness(&w).value()),
        disparity: clean(owa::disparity(&w)),
        weights: clean_all(w.as_slice()),
        alpha: clean_all(&alpha),
        exact,
    };
    emit_transform(buf, meta("to-alpha", n, None, None), rec, fmt, prec);
    Ok(EXIT_OK)
}

fn emit_transform(
    buf: &mut String,
    meta: Meta,
    rec: TransformRecord,
    fmt: OutputFormat,
    prec: usize,
) {
    match fmt {
        OutputFormat::Json => json(
            buf,
            &Document {
                meta,
                results: vec![rec],
            },
        ),
        OutputFormat::Csv => {
            let _ = writeln!(buf, "i,weight,alpha");
            for (i, (w, a)) in rec.weights.iter().zip(&rec.alpha).enumerate() {
                let _ = writeln!(buf, "{},{w},{a}", i + 1);
            }
        }
        OutputFormat::Table => {
            let _ = writeln!(buf, "{:>4}  {:>12}  {:>12}", "i", "w_i", "alpha_i");
            for (i, (w, a)) in rec.weights.iter().zip(&rec.alpha).enumerate() {
                let _ = writeln!(
                    buf,
                    "{:>4}  {:>12}  {:>12}",
                    i + 1,
                    fixed(*w, prec),
                    fixed(*a, prec)
                );
            }
            let _ = writeln!(buf, "orness     {:.*}", prec, rec.orness);
            let _ = writeln!(buf, "disparity  {:.*}", prec, rec.disparity);
        }
    }
}

// ---------------------------------------------------------------------------
// self check

/// Deterministic round-trip, symmetry and equivalence checks.
pub fn seed_check() -> Result<String, String> {
    let mut checks = 0;
    // Round trip on fixed pseudo-random weightings.
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for n in 2..=16 {
        for _ in 0..10 {
            let raw: Vec<f64> = (0..n).map(|_| -(1.0 - next()).ln()).collect();
            let total: f64 = raw.iter().sum();
            let w: Vec<f64> = raw.iter().map(|x| x / total).collect();
            let Ok(w) = WeightVector::with_tolerance(w, owa::FEAS_TOL) else {
                continue;
            };
            let alpha = decomposition::weights_to_alpha_exact_f64(&w);
            let back: Vec<f64> = alpha.to_weights().iter().map(ratio_to_f64).collect();
            if back != w.as_slice() {
                return Err(format!("exact round trip failed at n = {n}"));
            }
            checks += 1;
        }
    }
    // Symmetry and full-k equivalence on a small grid.
    for n in [3, 5, 8] {
        for step in 0..=10 {
            let eta = step as f64 / 10.0;
            let solve = |eta: f64, m: Method| {
                models::solve_minimax_disparity(n, eta, m, None)
                    .map_err(|e| e.to_string())?
                    .delta
                    .ok_or_else(|| format!("n = {n}, eta = {eta} infeasible"))
            };
            let a = solve(eta, Method::AlphaSpace)?;
            let w = solve(eta, Method::WeightSpace)?;
            let mirrored = solve(1.0 - eta, Method::WeightSpace)?;
            if (a - w).abs() > 1e-8 {
                return Err(format!(
                    "methods disagree at n = {n}, eta = {eta}: {a} vs {w}"
                ));
            }
            if (w - mirrored).abs() > 1e-8 {
                return Err(format!("asymmetric delta at n = {n}, eta = {eta}"));
            }
            checks += 3;
        }
    }
    Ok(format!("seed-check: {checks} checks passed"))
}
