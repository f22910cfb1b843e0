//! `pnorm-vote tally | sweep | compare`.
//!
//! Exit codes: 0 on success (ties included), 2 on usage or input errors,
//! 3 when the instance has too many committees to enumerate.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pnorm_committee::solvers::{
    elect_exact, elect_greedy_cover, elect_max_cover, elect_minisum, elect_p_zero, sweep,
};
use pnorm_committee::{
    BallotProfile, ElectionResult, Error as CoreError, Mode, Objective, ReportMode, SolverConfig,
    DEFAULT_ENUMERATION_LIMIT,
};

use crate::formats::{read_ballots, BallotFormat, IoError};
use crate::report::{warning_text, write_comparison, write_result, write_sweep, OutputFormat};

/// Overrides the default enumeration limit.
pub const ENUMERATION_LIMIT_VAR: &str = "PNORM_VOTE_ENUMERATION_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

const CANONICAL_ORDER_NOTE: &str = "note: committees are listed in canonical order, \
lexicographic in the roster positions of their members; tied winners are all reported \
and the first one is the canonical choice";

#[derive(Debug, Parser)]
#[command(
    name = "pnorm-vote",
    version,
    about = "Committee elections by p-norm minimization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Elect a committee with one method.
    Tally(TallyArgs),
    /// Score every committee for several values of p.
    Sweep(SweepArgs),
    /// Run several methods on the same ballots.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Pnorm,
    Minisum,
    Minimax,
    Maxcover,
    Greedy,
    P0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Binary,
    Ternary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormatArg {
    Text,
    Csv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    None,
    Exactly(usize),
}

fn parse_budget(s: &str) -> Result<Budget, String> {
    if s.eq_ignore_ascii_case("none") {
        return Ok(Budget::None);
    }
    s.parse::<usize>()
        .map(Budget::Exactly)
        .map_err(|_| format!("expected a positive integer or `none`, got {s:?}"))
}

#[derive(Debug, Args)]
pub struct Common {
    /// Ballot file (.txt compact text, .csv matrix, .jsonl JSON lines).
    #[arg(long)]
    pub ballots: PathBuf,
    /// Committee size.
    #[arg(long)]
    pub k: usize,
    /// Ballot mode; inferred from the file when omitted (any -1 means ternary).
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Required number of opinions per ballot, or `none`.
    #[arg(long, value_parser = parse_budget, default_value = "none")]
    pub budget: Budget,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: FormatArg,
    /// Ballot file format; chosen from the extension when omitted.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormatArg>,
    /// Print a note on the canonical committee order used for ties.
    #[arg(long)]
    pub seed_order: bool,
}

#[derive(Debug, Args)]
pub struct TallyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// The p of the p-norm; required with `--method pnorm`.
    #[arg(long)]
    pub p: Option<f64>,
    /// Also print the score of every committee.
    #[arg(long)]
    pub scores: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated values of p.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ps: Vec<f64>,
    /// Report the p-norm raised to the power p (bounded as p -> 0).
    #[arg(long)]
    pub power_sum: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated methods, e.g. `minisum,pnorm@2,maxcover,greedy`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub methods: Vec<String>,
}

/// A method with its parameter, as accepted by `compare --methods`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MethodSpec {
    PNorm(f64),
    Minisum,
    MiniMax,
    MaxCover,
    Greedy,
    PZero,
}

impl std::str::FromStr for MethodSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(p) = s.strip_prefix("pnorm@") {
            return p
                .parse::<f64>()
                .map(MethodSpec::PNorm)
                .map_err(|_| format!("invalid p in {s:?}"));
        }
        match s {
            "minisum" => Ok(MethodSpec::Minisum),
            "minimax" => Ok(MethodSpec::MiniMax),
            "maxcover" => Ok(MethodSpec::MaxCover),
            "greedy" => Ok(MethodSpec::Greedy),
            "p0" => Ok(MethodSpec::PZero),
            "pnorm" => Err("pnorm needs a parameter, e.g. pnorm@2".into()),
            _ => Err(format!("unknown method {s:?}")),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(IoError),
    Core(CoreError),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Profile(e) => Failure::Core(e),
            other => Failure::Input(other),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Core(e)
    }
}

/// Enumeration limit from the environment, or the default.
pub fn enumeration_limit() -> Result<u64, String> {
    match std::env::var(ENUMERATION_LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            format!("{ENUMERATION_LIMIT_VAR} must be a non-negative integer, got {v:?}")
        }),
        Err(_) => Ok(DEFAULT_ENUMERATION_LIMIT),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (EXIT_INPUT, m),
                Failure::Input(e) => (EXIT_INPUT, e.to_string()),
                Failure::Core(e @ CoreError::TooLarge { .. }) => (EXIT_TOO_LARGE, e.to_string()),
                Failure::Core(e) => (EXIT_INPUT, e.to_string()),
            };
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn load(common: &Common) -> Result<BallotProfile, Failure> {
    let format = common.input_format.map(|f| match f {
        InputFormatArg::Text => BallotFormat::CompactText,
        InputFormatArg::Csv => BallotFormat::MatrixCsv,
        InputFormatArg::Jsonl => BallotFormat::JsonLines,
    });
    let mode = common.mode.map(|m| match m {
        ModeArg::Binary => Mode::Binary,
        ModeArg::Ternary => Mode::Ternary,
    });
    let budget = match common.budget {
        Budget::None => None,
        Budget::Exactly(b) => Some(b),
    };
    Ok(read_ballots(&common.ballots, format, mode, budget)?)
}

fn output_format(f: FormatArg) -> OutputFormat {
    match f {
        FormatArg::Table => OutputFormat::Table,
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    }
}

fn config(keep_scores: bool) -> Result<SolverConfig, Failure> {
    Ok(SolverConfig {
        enumeration_limit: enumeration_limit().map_err(Failure::Usage)?,
        keep_scores,
    })
}

fn elect(
    profile: &BallotProfile,
    k: usize,
    method: MethodSpec,
    config: &SolverConfig,
) -> Result<ElectionResult, CoreError> {
    match method {
        MethodSpec::PNorm(p) => elect_exact(profile, k, Objective::PNorm(p), config),
        MethodSpec::Minisum => elect_minisum(profile, k, config),
        MethodSpec::MiniMax => elect_exact(profile, k, Objective::MiniMax, config),
        MethodSpec::MaxCover => elect_max_cover(profile, k, config),
        MethodSpec::Greedy => elect_greedy_cover(profile, k),
        MethodSpec::PZero => elect_p_zero(profile, k, config),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Input(IoError::Io(e)))
}

fn warn_all(err: &mut dyn Write, profile: &BallotProfile, warnings: &[pnorm_committee::Warning]) {
    for w in warnings {
        let _ = writeln!(err, "warning: {}", warning_text(profile, w));
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let common = match &cli.command {
        Command::Tally(a) => &a.common,
        Command::Sweep(a) => &a.common,
        Command::Compare(a) => &a.common,
    };
    if common.seed_order {
        let _ = writeln!(err, "{CANONICAL_ORDER_NOTE}");
    }
    match &cli.command {
        Command::Tally(args) => {
            let method = match (args.method, args.p) {
                (MethodArg::Pnorm, Some(p)) => MethodSpec::PNorm(p),
                (MethodArg::Pnorm, None) => {
                    return Err(Failure::Usage("--method pnorm requires --p".into()))
                }
                (_, Some(_)) => {
                    return Err(Failure::Usage(
                        "--p is only valid with --method pnorm".into(),
                    ))
                }
                (MethodArg::Minisum, None) => MethodSpec::Minisum,
                (MethodArg::Minimax, None) => MethodSpec::MiniMax,
                (MethodArg::Maxcover, None) => MethodSpec::MaxCover,
                (MethodArg::Greedy, None) => MethodSpec::Greedy,
                (MethodArg::P0, None) => MethodSpec::PZero,
            };
            let config = config(args.scores)?;
            let profile = load(common)?;
            if args.scores && matches!(method, MethodSpec::Minisum | MethodSpec::Greedy) {
                let _ = writeln!(
                    err,
                    "note: --scores has no effect for {} (no enumeration)",
                    if method == MethodSpec::Greedy {
                        "greedy"
                    } else {
                        "minisum"
                    }
                );
            }
            let result = elect(&profile, common.k, method, &config)?;
            warn_all(err, &profile, &result.warnings);
            emit(
                out,
                &write_result(&result, &profile, output_format(common.format)),
            )
        }
        Command::Sweep(args) => {
            let config = config(false)?;
            let profile = load(common)?;
            let report = if args.power_sum {
                ReportMode::PowerSum
            } else {
                ReportMode::Norm
            };
            let matrix = sweep(&profile, common.k, &args.ps, report, &config)?;
            warn_all(err, &profile, &matrix.warnings);
            emit(
                out,
                &write_sweep(&matrix, &profile, output_format(common.format)),
            )
        }
        Command::Compare(args) => {
            let methods = args
                .methods
                .iter()
                .map(|m| m.parse::<MethodSpec>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::Usage)?;
            let config = config(false)?;
            let profile = load(common)?;
            let results = methods
                .iter()
                .map(|&m| elect(&profile, common.k, m, &config))
                .collect::<Result<Vec<_>, _>>()?;
            for r in &results {
                warn_all(err, &profile, &r.warnings);
            }
            emit(
                out,
                &write_comparison(&results, &profile, output_format(common.format)),
            )
        }
    }
}
