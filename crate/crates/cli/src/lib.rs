//! Command-line front end for `hyperstab`.
//!
//! Every command renders its result to a string first; `main` writes it to
//! standard output or `--out`. All numbers are exact: dyadic rationals are
//! rendered as `p/2^q`, integers as plain `p`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperstab::bell::{violation_report, ViolationRow};
use hyperstab::expansion::{c0_scan, sign_scan, ScanRow};
use hyperstab::statevector::DENSE_MAX_N;
use hyperstab::verify::{verify_profile, CheckStatus, VerificationReport};
use hyperstab::{
    build_state, classical_bound, coefficients, quantum_value, BellFunctional, DyadicRational, Hypergraph,
    UniformityProfile,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "hyperstab", version, about = "Exact stabilizer expansions of complete k-uniform hypergraph states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients C_0..C_{n-1} of the expanded stabilizer.
    Coeffs(PairArgs),
    /// Sign vector of a hypergraph state, from an edge file or a complete profile.
    State(StateArgs),
    /// Cross-check the expansion against the dense simulator.
    Verify(VerifyArgs),
    /// C0 = 0 scan over 2 <= k <= n <= n-max: exact test vs closed-form predicate.
    ScanC0(ScanArgs),
    /// Negative-coefficient scan over 3 <= k < n <= n-max.
    ScanSigns(ScanArgs),
    /// Classical bound and quantum value of the sum-of-stabilizers functional.
    Bell(BellArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format; each command has its own default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated uniformity profile, e.g. `3` or `2,3`.
    #[arg(long)]
    pub k: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Hypergraph JSON file `{"n": 3, "edges": [[1,2,3]]}` with 1-based vertices.
    #[arg(long, conflicts_with_all = ["n", "k"])]
    pub edges: Option<PathBuf>,
    #[arg(long, requires = "k")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub k: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Verify a single pair; conflicts with `--n-max`.
    #[arg(long, requires = "k", conflicts_with = "n_max")]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<String>,
    /// Verify every single-k profile with 2 <= k <= n <= n-max.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Largest n for which dense-simulator checks run.
    #[arg(long, default_value_t = DENSE_MAX_N)]
    pub max_dense: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n_max: usize,
    /// Defaults to `--n-max`.
    #[arg(long)]
    pub k_max: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BellArgs {
    /// Evaluate a single pair; conflicts with `--n-max`.
    #[arg(long, requires = "k", conflicts_with = "n_max")]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<String>,
    /// Report every single-k pair with 2 <= k <= n <= n-max.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Defaults to `--n-max`.
    #[arg(long, requires = "n_max")]
    pub k_max: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Coeffs(a) => &a.output,
            Command::State(a) => &a.output,
            Command::Verify(a) => &a.output,
            Command::ScanC0(a) | Command::ScanSigns(a) => &a.output,
            Command::Bell(a) => &a.output,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] hyperstab::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Library(e) => e.kind(),
            CliError::Io(_) => "io",
        }
    }

    /// The single stderr line: `error[<kind>]: <message>`.
    pub fn line(&self) -> String {
        let message = self.to_string().replace('\n', " ");
        format!("error[{}]: {}", self.kind(), message.trim())
    }
}

/// Rendered output plus whether every asserted invariant held.
#[derive(Debug)]
pub struct Rendered {
    pub text: String,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffsReport {
    pub n: usize,
    pub k: Vec<usize>,
    pub coeffs: Vec<DyadicRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateReport {
    pub n: usize,
    pub signs: Vec<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub name: String,
    /// `pass`, `fail` or `skip`.
    pub status: String,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyRecord {
    pub n: usize,
    pub k: Vec<usize>,
    pub all_passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanRecord {
    pub n: usize,
    pub k: usize,
    pub c0_is_zero_exact: bool,
    pub c0_predicate: bool,
    pub min_coeff: DyadicRational,
    pub first_negative_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BellReport {
    pub classical_bound: DyadicRational,
    pub quantum_value: DyadicRational,
    pub violated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ViolationRecord {
    pub n: usize,
    pub k: usize,
    pub classical_bound: DyadicRational,
    pub quantum_value: DyadicRational,
    pub violated: bool,
}

impl From<&ScanRow> for ScanRecord {
    fn from(r: &ScanRow) -> Self {
        ScanRecord {
            n: r.n,
            k: r.k,
            c0_is_zero_exact: r.c0_is_zero_exact,
            c0_predicate: r.c0_predicate,
            min_coeff: r.min_coeff.clone(),
            first_negative_index: r.first_negative_index,
        }
    }
}

impl From<ViolationRow> for ViolationRecord {
    fn from(r: ViolationRow) -> Self {
        ViolationRecord {
            n: r.n,
            k: r.k,
            classical_bound: r.classical_bound,
            quantum_value: r.quantum_value,
            violated: r.violated,
        }
    }
}

impl From<&VerificationReport> for VerifyRecord {
    fn from(r: &VerificationReport) -> Self {
        let checks = r
            .checks
            .iter()
            .map(|c| {
                let (status, detail) = match &c.status {
                    CheckStatus::Passed => ("pass", None),
                    CheckStatus::Failed(why) => ("fail", Some(why.clone())),
                    CheckStatus::Skipped(why) => ("skip", Some(why.clone())),
                };
                CheckRecord { name: c.name.to_string(), status: status.to_string(), detail }
            })
            .collect();
        VerifyRecord { n: r.n, k: r.profile.ks().to_vec(), all_passed: r.all_passed(), checks }
    }
}

/// Header and rows shared by the CSV and table renderers.
struct Grid {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Grid {
    fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            writer.write_record(row).expect("writing to memory");
        }
        String::from_utf8(writer.into_inner().expect("writing to memory")).expect("records are UTF-8")
    }

    fn table(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.header.clone());
        for row in &self.rows {
            out += &line(row.iter().map(String::as_str).collect());
        }
        out
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports always serialize") + "\n"
}

fn render<T: Serialize>(format: Format, value: &T, grid: impl FnOnce() -> Grid) -> String {
    match format {
        Format::Json => json(value),
        Format::Csv => grid().csv(),
        Format::Table => grid().table(),
    }
}

fn profile(text: &str) -> Result<UniformityProfile, CliError> {
    Ok(text.parse()?)
}

fn scan_grid(rows: &[ScanRecord]) -> Grid {
    Grid {
        header: ScanRow::CSV_HEADER.split(',').collect(),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.c0_is_zero_exact.to_string(),
                    r.c0_predicate.to_string(),
                    r.min_coeff.to_string(),
                    r.first_negative_index.map(|i| i.to_string()).unwrap_or_default(),
                ]
            })
            .collect(),
    }
}

fn coeffs(args: &PairArgs) -> Result<Rendered, CliError> {
    let expansion = coefficients(args.n, &profile(&args.k)?)?;
    let report = CoeffsReport {
        n: args.n,
        k: expansion.profile().ks().to_vec(),
        coeffs: expansion.coeffs().to_vec(),
    };
    let text = render(args.output.format.unwrap_or(Format::Json), &report, || Grid {
        header: vec!["m", "C_m"],
        rows: report.coeffs.iter().enumerate().map(|(m, c)| vec![m.to_string(), c.to_string()]).collect(),
    });
    Ok(Rendered { text, verified: true })
}

fn state(args: &StateArgs) -> Result<Rendered, CliError> {
    let h = match (&args.edges, args.n, &args.k) {
        (Some(path), _, _) => Hypergraph::from_json(&std::fs::read_to_string(path)?)?,
        (None, Some(n), Some(k)) => Hypergraph::complete_k_uniform(n, &profile(k)?)?,
        _ => return Err(CliError::Usage("state needs --edges <file> or both --n and --k".into())),
    };
    let state = build_state(&h)?;
    let report = StateReport { n: state.n(), signs: state.signs().to_vec() };
    let text = render(args.output.format.unwrap_or(Format::Json), &report, || Grid {
        header: vec!["index", "sign"],
        rows: report.signs.iter().enumerate().map(|(i, s)| vec![i.to_string(), s.to_string()]).collect(),
    });
    Ok(Rendered { text, verified: true })
}

fn verify(args: &VerifyArgs) -> Result<Rendered, CliError> {
    if args.max_dense > DENSE_MAX_N {
        let cap = DENSE_MAX_N;
        return Err(hyperstab::Error::SizeCap { what: "max-dense", n: args.max_dense, cap }.into());
    }
    let reports = match (args.n, &args.k, args.n_max) {
        (Some(n), Some(k), None) => vec![verify_profile(n, &profile(k)?, args.max_dense)?],
        (None, None, Some(n_max)) => {
            let mut out = Vec::new();
            for n in 2..=n_max {
                for k in 2..=n {
                    out.push(verify_profile(n, &UniformityProfile::single(k)?, args.max_dense)?);
                }
            }
            out
        }
        _ => return Err(CliError::Usage("verify needs --n with --k, or --n-max alone".into())),
    };
    let records: Vec<VerifyRecord> = reports.iter().map(VerifyRecord::from).collect();
    let verified = records.iter().all(|r| r.all_passed);
    let grid = || Grid {
        header: vec!["n", "k", "check", "status", "detail"],
        rows: records
            .iter()
            .flat_map(|r| {
                let k = r.k.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                r.checks.iter().map(move |c| {
                    vec![r.n.to_string(), k.clone(), c.name.clone(), c.status.clone(), c.detail.clone().unwrap_or_default()]
                })
            })
            .collect(),
    };
    let format = args.output.format.unwrap_or(Format::Table);
    let text = if args.n.is_some() {
        render(format, &records[0], grid)
    } else {
        render(format, &records, grid)
    };
    Ok(Rendered { text, verified })
}

fn scan_c0(args: &ScanArgs) -> Result<Rendered, CliError> {
    let scan = c0_scan(args.n_max, args.k_max.unwrap_or(args.n_max))?;
    let rows: Vec<ScanRecord> = scan.rows.iter().map(ScanRecord::from).collect();
    let text = render(args.output.format.unwrap_or(Format::Csv), &rows, || scan_grid(&rows));
    Ok(Rendered { text, verified: true })
}

fn scan_signs(args: &ScanArgs) -> Result<Rendered, CliError> {
    let scan = sign_scan(args.n_max, args.k_max.unwrap_or(args.n_max))?;
    let rows: Vec<ScanRecord> = scan.rows.iter().map(ScanRecord::from).collect();
    let text = render(args.output.format.unwrap_or(Format::Csv), &rows, || scan_grid(&rows));
    Ok(Rendered { text, verified: true })
}

fn bell(args: &BellArgs) -> Result<Rendered, CliError> {
    match (args.n, &args.k, args.n_max) {
        (Some(n), Some(k), None) => {
            let profile = profile(k)?;
            let f = BellFunctional::new(n, &profile)?;
            let h = Hypergraph::complete_k_uniform(n, &profile)?;
            let classical_bound = classical_bound(&f)?;
            let quantum_value = quantum_value(&f, &h)?;
            let violated = quantum_value > classical_bound;
            let report = BellReport { classical_bound, quantum_value, violated };
            let text = render(args.output.format.unwrap_or(Format::Json), &report, || Grid {
                header: vec!["classical_bound", "quantum_value", "violated"],
                rows: vec![vec![
                    report.classical_bound.to_string(),
                    report.quantum_value.to_string(),
                    report.violated.to_string(),
                ]],
            });
            Ok(Rendered { text, verified: true })
        }
        (None, None, Some(n_max)) => {
            let rows: Vec<ViolationRecord> = violation_report(n_max, args.k_max.unwrap_or(n_max))?
                .into_iter()
                .map(ViolationRecord::from)
                .collect();
            let text = render(args.output.format.unwrap_or(Format::Csv), &rows, || Grid {
                header: ViolationRow::CSV_HEADER.split(',').collect(),
                rows: rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.k.to_string(),
                            r.classical_bound.to_string(),
                            r.quantum_value.to_string(),
                            r.violated.to_string(),
                        ]
                    })
                    .collect(),
            });
            Ok(Rendered { text, verified: true })
        }
        _ => Err(CliError::Usage("bell needs --n with --k, or --n-max alone".into())),
    }
}

pub fn run(command: &Command) -> Result<Rendered, CliError> {
    match command {
        Command::Coeffs(a) => coeffs(a),
        Command::State(a) => state(a),
        Command::Verify(a) => verify(a),
        Command::ScanC0(a) => scan_c0(a),
        Command::ScanSigns(a) => scan_signs(a),
        Command::Bell(a) => bell(a),
    }
}
