//! `pinsker` — command-line front end for the `tsallis-pinsker` library.
//!
//! Subcommands:
//!
//! - `eval`     — entropies, divergences, and distances for one pair (p, q);
//! - `constant` — sharp Pinsker constants over a grid of (alpha, K) cells;
//! - `verify`   — randomized verification suites against the closed forms;
//! - `witness`  — extremal witness families evaluated along a list of t;
//! - `figure`   — the dense constant-vs-alpha table used for plots.
//!
//! Global flags: `--format {csv,json,table}` (default `csv`), `--output PATH`
//! to write the result to a file instead of stdout, and `--seed N` (default
//! `$PINSKER_SEED`, else 42) feeding every randomized suite.
//!
//! Exit codes: `0` success, `1` a verification suite found violations,
//! `2` usage or validation errors (bad flags, malformed vectors, parameters
//! outside their documented domain). Input vectors are never silently
//! renormalized: a vector whose coordinates do not sum to 1 within the
//! simplex tolerance is rejected with a diagnostic.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Cell, OutputFormat, Table};
use tsallis_pinsker::divergences::{
    bregman, bregman_from_definition, excess_risk, itakura_saito, kl, reverse_kl,
    tsallis_relative_entropy,
};
use tsallis_pinsker::extremal::{WitnessFamily, WitnessKind};
use tsallis_pinsker::pinsker::{clipped_constant, sharp_constant, ClipMode};
use tsallis_pinsker::simplex::{tv_distance, ProbVector};
use tsallis_pinsker::tolerances::RATIO_SLACK_ABS;
use tsallis_pinsker::tsallis::{entropy, loss, AlphaParam, Anchor};
use tsallis_pinsker::verify::{
    verify_constant_grid_with_reference_scale, verify_identities, verify_identities_detailed,
    verify_quadratic_form_grid, IdentityCheck, VerificationReport, DEFAULT_GRID_ALPHAS,
    DEFAULT_GRID_KS,
};

/// Largest number of figure rows per K before `--step` is considered a typo.
const FIGURE_MAX_ROWS: f64 = 10_000_000.0;

#[derive(Parser)]
#[command(
    name = "pinsker",
    version,
    about = "Tsallis entropies, Bregman divergences, and sharp generalized Pinsker constants",
    propagate_version = true
)]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Seed for all randomized verification.
    #[arg(long, global = true, env = "PINSKER_SEED", default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate entropies, divergences, and distances for a pair (p, q).
    Eval(EvalArgs),
    /// Print sharp Pinsker constants for a grid of (alpha, K) cells.
    Constant(ConstantArgs),
    /// Run randomized verification suites against the closed-form predictions.
    Verify(VerifyArgs),
    /// Evaluate an extremal witness family along a list of t values.
    Witness(WitnessArgs),
    /// Emit the dense constant-vs-alpha table used for plots.
    Figure(FigureArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("pvec").required(true).args(["p", "p_file"])))]
#[command(group(clap::ArgGroup::new("qvec").required(true).args(["q", "q_file"])))]
struct EvalArgs {
    /// Entropic index alpha.
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,

    /// First distribution, inline comma-separated (e.g. 0.5,0.5).
    #[arg(long, conflicts_with = "p_file")]
    p: Option<String>,

    /// File containing the first distribution: one line, whitespace-separated.
    #[arg(long, value_name = "PATH")]
    p_file: Option<PathBuf>,

    /// Second distribution, inline comma-separated.
    #[arg(long, conflicts_with = "q_file")]
    q: Option<String>,

    /// File containing the second distribution: one line, whitespace-separated.
    #[arg(long, value_name = "PATH")]
    q_file: Option<PathBuf>,

    /// Outcome index (1-based); adds loss rows for both distributions.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct ConstantArgs {
    /// Alpha values, comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    alpha: Vec<f64>,

    /// Alphabet sizes, comma-separated.
    #[arg(long = "K", value_delimiter = ',', required = true)]
    k: Vec<usize>,

    /// Clipping radius; adds clipped-constant columns for alpha > 2, K >= 3 cells.
    #[arg(long)]
    eps: Option<f64>,

    /// Which arguments the clipping keeps away from the boundary.
    #[arg(long, value_enum, default_value_t = CliClipMode::Both)]
    mode: CliClipMode,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = CliSuite::All)]
    suite: CliSuite,

    /// Alpha grid, comma-separated (default: the built-in verification grid).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<f64>>,

    /// K grid, comma-separated (default: the built-in verification grid).
    #[arg(long = "K", value_delimiter = ',')]
    k: Option<Vec<usize>>,

    /// Random samples per grid cell and per identity check.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,

    /// Additive slack below each closed-form constant.
    #[arg(long, default_value_t = RATIO_SLACK_ABS)]
    slack: f64,

    /// Self-test hook: corrupt the reference constants so the constant suite
    /// must report violations and the process must exit 1.
    #[arg(long, hide = true)]
    corrupt_constants_for_testing: bool,
}

#[derive(Args)]
struct WitnessArgs {
    /// Witness family.
    #[arg(long, value_enum)]
    kind: CliWitnessKind,

    /// Entropic index alpha.
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,

    /// Alphabet size.
    #[arg(long = "K")]
    k: usize,

    /// Values of t, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![1e-2, 1e-3, 1e-4, 1e-5])]
    t: Vec<f64>,

    /// Interior offset delta for families that take one.
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Args)]
struct FigureArgs {
    /// Smallest alpha in the grid.
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    alpha_min: f64,

    /// Largest alpha in the grid.
    #[arg(long, default_value_t = 4.5, allow_hyphen_values = true)]
    alpha_max: f64,

    /// Grid step; alpha_i = alpha_min + i * step.
    #[arg(long, default_value_t = 0.005)]
    step: f64,

    /// Alphabet sizes, comma-separated.
    #[arg(long = "K", value_delimiter = ',', default_values_t = vec![2usize, 3, 4, 5, 10])]
    k: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliClipMode {
    Both,
    POnly,
    QOnly,
}

impl CliClipMode {
    fn to_lib(self) -> ClipMode {
        match self {
            CliClipMode::Both => ClipMode::Both,
            CliClipMode::POnly => ClipMode::POnly,
            CliClipMode::QOnly => ClipMode::QOnly,
        }
    }

    fn token(self) -> &'static str {
        match self {
            CliClipMode::Both => "BOTH",
            CliClipMode::POnly => "P_ONLY",
            CliClipMode::QOnly => "Q_ONLY",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliSuite {
    Constant,
    QuadraticForm,
    Identities,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliWitnessKind {
    Sharpness,
    NoPinsker,
    OrthantAlpha2,
    OrthantGeneral,
}

impl CliWitnessKind {
    fn to_lib(self) -> WitnessKind {
        match self {
            CliWitnessKind::Sharpness => WitnessKind::Sharpness,
            CliWitnessKind::NoPinsker => WitnessKind::NoPinskerAppendixD,
            CliWitnessKind::OrthantAlpha2 => WitnessKind::OrthantAlpha2,
            CliWitnessKind::OrthantGeneral => WitnessKind::OrthantGeneral,
        }
    }
}

/// A finished command: the result table plus the process exit status.
type CmdResult = Result<(Table, u8), String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let Cli {
        format,
        output,
        seed,
        command,
    } = cli;
    let result = match command {
        Command::Eval(args) => cmd_eval(args),
        Command::Constant(args) => cmd_constant(args),
        Command::Verify(args) => cmd_verify(args, seed),
        Command::Witness(args) => cmd_witness(args),
        Command::Figure(args) => cmd_figure(args),
    };
    match result {
        Ok((table, exit)) => {
            let rendered = output::render(&table, format);
            match output {
                Some(path) => {
                    if let Err(err) = std::fs::write(&path, rendered) {
                        eprintln!("error: cannot write {}: {err}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{rendered}"),
            }
            ExitCode::from(exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Parse an inline comma-separated vector or read one from a file containing
/// exactly one whitespace-separated vector on one non-empty line.
fn load_vector(inline: Option<&str>, file: Option<&Path>, name: &str) -> Result<Vec<f64>, String> {
    let (text, sep_commas) = match (inline, file) {
        (Some(s), None) => (s.to_string(), true),
        (None, Some(path)) => {
            let content = std::fs::read_to_string(path)
                .map_err(|err| format!("cannot read --{name}-file {}: {err}", path.display()))?;
            let lines: Vec<&str> = content.lines().filter(|l| !l.trim().is_empty()).collect();
            if lines.len() != 1 {
                return Err(format!(
                    "--{name}-file {} must contain exactly one vector on one line, found {} non-empty lines",
                    path.display(),
                    lines.len()
                ));
            }
            (lines[0].to_string(), false)
        }
        // clap's argument groups enforce exactly one source.
        _ => unreachable!("argument group guarantees exactly one vector source"),
    };
    let fields: Vec<&str> = if sep_commas {
        text.split(',').map(str::trim).collect()
    } else {
        text.split_whitespace().collect()
    };
    fields
        .iter()
        .map(|f| {
            f.parse::<f64>()
                .map_err(|_| format!("--{name}: cannot parse coordinate {f:?} as a number"))
        })
        .collect()
}

fn eval_row(quantity: &str, alpha: f64, k: usize, value: f64) -> Vec<Cell> {
    vec![
        Cell::Str(quantity.to_string()),
        Cell::Float(alpha),
        Cell::Int(k as u64),
        Cell::Float(value),
    ]
}

fn cmd_eval(args: EvalArgs) -> CmdResult {
    let p_coords = load_vector(args.p.as_deref(), args.p_file.as_deref(), "p")?;
    let q_coords = load_vector(args.q.as_deref(), args.q_file.as_deref(), "q")?;
    let p = ProbVector::new(p_coords).map_err(|e| format!("--p: {e}"))?;
    let q = ProbVector::new(q_coords).map_err(|e| format!("--q: {e}"))?;
    if p.k() != q.k() {
        return Err(format!(
            "p and q must have the same dimension, got {} and {}",
            p.k(),
            q.k()
        ));
    }
    let alpha = AlphaParam::new(args.alpha).map_err(|e| e.to_string())?;
    // Divergences need relative-interior arguments; reject boundary vectors
    // up front with the library's diagnostic.
    let pp = p.to_positive().map_err(|e| format!("--p: {e}"))?;
    let qq = q.to_positive().map_err(|e| format!("--q: {e}"))?;
    let a = alpha.value();
    let kdim = p.k();

    let mut rows = Vec::new();
    rows.push(eval_row("entropy_p", a, kdim, entropy(&alpha, &pp)));
    rows.push(eval_row("entropy_q", a, kdim, entropy(&alpha, &qq)));
    if let Some(outcome) = args.k {
        let lp = loss(&alpha, &p, outcome).map_err(|e| e.to_string())?;
        let lq = loss(&alpha, &q, outcome).map_err(|e| e.to_string())?;
        rows.push(eval_row("loss_p", a, kdim, lp));
        rows.push(eval_row("loss_q", a, kdim, lq));
    }
    let d = bregman(&alpha, &pp, &qq).map_err(|e| e.to_string())?;
    let d_def = bregman_from_definition(&alpha, &pp, &qq).map_err(|e| e.to_string())?;
    rows.push(eval_row("bregman", a, kdim, d.value));
    rows.push(eval_row("bregman_definition", a, kdim, d_def.value));
    let excess = excess_risk(&alpha, &p, &q).map_err(|e| e.to_string())?;
    rows.push(eval_row("excess_risk", a, kdim, excess));
    rows.push(eval_row(
        "kl",
        a,
        kdim,
        kl(&pp, &qq).map_err(|e| e.to_string())?.value,
    ));
    rows.push(eval_row(
        "reverse_kl",
        a,
        kdim,
        reverse_kl(&pp, &qq).map_err(|e| e.to_string())?.value,
    ));
    rows.push(eval_row(
        "itakura_saito",
        a,
        kdim,
        itakura_saito(&pp, &qq).map_err(|e| e.to_string())?.value,
    ));
    // The Tsallis relative entropy is undefined at the anchors alpha = 0 and
    // alpha = 1; report NaN there rather than failing the whole evaluation.
    // For alpha < 0 the quantity is an extension beyond its usual range and
    // the row is renamed to say so.
    if alpha.is_anchor(Anchor::Zero) || alpha.is_anchor(Anchor::One) {
        rows.push(eval_row("tre", a, kdim, f64::NAN));
    } else {
        let tre = tsallis_relative_entropy(&alpha, &p, &q).map_err(|e| e.to_string())?;
        let name = if tre.non_paper_extension {
            "tre_non_paper_extension"
        } else {
            "tre"
        };
        rows.push(eval_row(name, a, kdim, tre.value));
    }
    rows.push(eval_row(
        "tv",
        a,
        kdim,
        tv_distance(&p, &q).map_err(|e| e.to_string())?,
    ));

    Ok((
        Table {
            header: vec!["quantity", "alpha", "K", "value"],
            rows,
        },
        0,
    ))
}

fn cmd_constant(args: ConstantArgs) -> CmdResult {
    let mut rows = Vec::new();
    for &a in &args.alpha {
        let alpha = AlphaParam::new(a).map_err(|e| e.to_string())?;
        for &kk in &args.k {
            let constant = sharp_constant(&alpha, kk).map_err(|e| e.to_string())?;
            let mut row = vec![
                Cell::Float(a),
                Cell::Int(kk as u64),
                Cell::Float(constant.value),
                Cell::Str(constant.regime.to_string()),
                constant.sigma.map_or(Cell::Empty, Cell::Float),
            ];
            match args.eps {
                None => row.extend([Cell::Empty, Cell::Empty, Cell::Empty]),
                Some(eps) => {
                    row.push(Cell::Float(eps));
                    row.push(Cell::Str(args.mode.token().to_string()));
                    // Clipped constants exist only where the unclipped
                    // constant vanishes (alpha > 2, K >= 3); other cells get
                    // an empty field.
                    if a > 2.0 && kk >= 3 {
                        let clipped = clipped_constant(a, kk, args.mode.to_lib(), eps)
                            .map_err(|e| e.to_string())?;
                        row.push(Cell::Float(clipped));
                    } else {
                        row.push(Cell::Empty);
                    }
                }
            }
            rows.push(row);
        }
    }
    Ok((
        Table {
            header: vec![
                "alpha", "K", "C", "regime", "sigma", "eps", "mode", "clipped",
            ],
            rows,
        },
        0,
    ))
}

const REPORT_HEADER: [&str; 9] = [
    "suite",
    "alpha",
    "K",
    "closed_form",
    "empirical_min_ratio",
    "n_samples",
    "witness_ratio_at_tmin",
    "violations",
    "elapsed_seconds",
];

fn report_row(report: &VerificationReport) -> Vec<Cell> {
    vec![
        Cell::Str(report.suite.to_string()),
        Cell::Float(report.alpha),
        Cell::Int(report.k as u64),
        Cell::Float(report.closed_form),
        Cell::Float(report.empirical_min_ratio),
        Cell::Int(report.n_samples),
        Cell::Float(report.witness_ratio_at_tmin),
        Cell::Int(report.violations),
        Cell::Float(report.elapsed_seconds),
    ]
}

fn report_violations_to_stderr(reports: &[VerificationReport]) -> u64 {
    let mut total = 0;
    for r in reports {
        if r.violations > 0 {
            total += r.violations;
            eprintln!(
                "violation: suite={} alpha={} K={} violations={} empirical_min_ratio={} closed_form={}",
                r.suite,
                r.alpha,
                r.k,
                r.violations,
                output::fmt_float(r.empirical_min_ratio),
                output::fmt_float(r.closed_form),
            );
        }
    }
    total
}

fn check_violations_to_stderr(checks: &[IdentityCheck]) -> u64 {
    let mut total = 0;
    for c in checks {
        if c.violations > 0 {
            total += c.violations;
            eprintln!(
                "violation: check={} max_gap={} tolerance={} violations={}",
                c.name,
                output::fmt_float(c.max_gap),
                output::fmt_float(c.tolerance),
                c.violations,
            );
        }
    }
    total
}

fn cmd_verify(args: VerifyArgs, seed: u64) -> CmdResult {
    let alphas = args.alpha.unwrap_or_else(|| DEFAULT_GRID_ALPHAS.to_vec());
    let ks = args.k.unwrap_or_else(|| DEFAULT_GRID_KS.to_vec());
    let scale = if args.corrupt_constants_for_testing {
        1.5
    } else {
        1.0
    };

    // The identities-only suite reports one row per named identity check.
    if args.suite == CliSuite::Identities {
        let checks = verify_identities_detailed(args.samples, seed).map_err(|e| e.to_string())?;
        let total = check_violations_to_stderr(&checks);
        let rows = checks
            .iter()
            .map(|c| {
                vec![
                    Cell::Str("identities".to_string()),
                    Cell::Str(c.name.clone()),
                    Cell::Int(c.n_samples),
                    Cell::Float(c.max_gap),
                    Cell::Float(c.tolerance),
                    Cell::Int(c.violations),
                ]
            })
            .collect();
        let table = Table {
            header: vec![
                "suite",
                "check",
                "n_samples",
                "max_gap",
                "tolerance",
                "violations",
            ],
            rows,
        };
        return Ok((table, u8::from(total > 0)));
    }

    let mut reports: Vec<VerificationReport> = Vec::new();
    if matches!(args.suite, CliSuite::Constant | CliSuite::All) {
        reports.extend(
            verify_constant_grid_with_reference_scale(
                &alphas,
                &ks,
                args.samples,
                seed,
                args.slack,
                scale,
            )
            .map_err(|e| e.to_string())?,
        );
    }
    if matches!(args.suite, CliSuite::QuadraticForm | CliSuite::All) {
        reports.extend(
            verify_quadratic_form_grid(&alphas, &ks, args.samples, seed)
                .map_err(|e| e.to_string())?,
        );
    }
    if args.suite == CliSuite::All {
        reports.push(verify_identities(args.samples, seed).map_err(|e| e.to_string())?);
    }
    let total = report_violations_to_stderr(&reports);
    let table = Table {
        header: REPORT_HEADER.to_vec(),
        rows: reports.iter().map(report_row).collect(),
    };
    Ok((table, u8::from(total > 0)))
}

fn join_coords(coords: &[f64]) -> String {
    coords
        .iter()
        .map(|&c| output::fmt_float(c))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_witness(args: WitnessArgs) -> CmdResult {
    let kind = args.kind.to_lib();
    let family = match args.delta {
        None => WitnessFamily::new(kind, args.alpha, args.k),
        Some(delta) => WitnessFamily::with_delta(kind, args.alpha, args.k, delta),
    }
    .map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for &t in &args.t {
        let w = family.evaluate(t).map_err(|e| e.to_string())?;
        rows.push(vec![
            Cell::Str(family.kind.to_string()),
            Cell::Float(family.alpha),
            Cell::Int(family.k as u64),
            Cell::Float(w.t),
            Cell::Str(join_coords(&w.p)),
            Cell::Str(join_coords(&w.q)),
            Cell::Float(w.ratio),
            Cell::Float(w.predicted),
        ]);
    }
    Ok((
        Table {
            header: vec!["kind", "alpha", "K", "t", "p", "q", "ratio", "predicted"],
            rows,
        },
        0,
    ))
}

fn cmd_figure(args: FigureArgs) -> CmdResult {
    if !args.step.is_finite() || args.step <= 0.0 {
        return Err(format!(
            "--step must be a positive number, got {}",
            args.step
        ));
    }
    if !args.alpha_min.is_finite() || !args.alpha_max.is_finite() {
        return Err("--alpha-min and --alpha-max must be finite".to_string());
    }
    if args.alpha_max < args.alpha_min {
        return Err(format!(
            "--alpha-max ({}) must not be smaller than --alpha-min ({})",
            args.alpha_max, args.alpha_min
        ));
    }
    if args.k.is_empty() {
        return Err("--K needs at least one alphabet size".to_string());
    }
    let span = args.alpha_max - args.alpha_min;
    if span / args.step > FIGURE_MAX_ROWS {
        return Err(format!(
            "--step {} yields more than {FIGURE_MAX_ROWS} rows per K; refusing",
            args.step
        ));
    }
    // alpha_i = alpha_min + i * step (multiplication, not accumulation, so
    // rounding error does not drift across the grid). The half-step guard
    // keeps the intended endpoint when alpha_max is not an exact multiple.
    let steps = ((span + 0.5 * args.step) / args.step).floor() as usize;
    let mut rows = Vec::new();
    for &kk in &args.k {
        for i in 0..=steps {
            let a = args.alpha_min + (i as f64) * args.step;
            let alpha = AlphaParam::new(a).map_err(|e| e.to_string())?;
            let constant = sharp_constant(&alpha, kk).map_err(|e| e.to_string())?;
            rows.push(vec![
                Cell::Float(a),
                Cell::Int(kk as u64),
                Cell::Float(constant.value),
            ]);
        }
    }
    Ok((
        Table {
            header: vec!["alpha", "K", "C"],
            rows,
        },
        0,
    ))
}
