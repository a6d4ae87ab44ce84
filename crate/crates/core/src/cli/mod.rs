//! Command-line front end: `evaluate`, `sweep` and `compare-weights`.

pub mod compare;
pub mod problem_file;
mod render;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::magdm::{evaluate, PipelineConfig, PipelineError, RungChoice};
use crate::operators::OperatorFamily;
use crate::weights::{MabacVariant, ProjectionReading, SwingConfig, WeightMethod};
use crate::Rung;
use compare::{compare_weights, CompareSpec};
use problem_file::load_problem;
use sweep::{run_sweep, FamilyChoice, SweepSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
}

impl CliError {
    /// 1 for bad input of any kind, 2 when a valid problem cannot be evaluated.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Io { .. } | Self::Parse(_) => 1,
            Self::Pipeline(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ivqrof",
    version,
    about = "Group decision making with interval-valued q-rung orthopair fuzzy numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the alternatives of a problem file.
    Evaluate(EvaluateArgs),
    /// Rank across a grid of rungs, families and weighting methods.
    Sweep(SweepArgs),
    /// Rank with each derived weighting method side by side.
    CompareWeights(CompareArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file (JSON).
    file: PathBuf,
    /// Write the machine-readable CSV document here (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    emit_csv: Option<PathBuf>,
    /// Write the machine-readable JSON document here (`-` for stdout).
    #[arg(long, value_name = "PATH")]
    emit_json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// Operator family: weber[:lambda], algebraic, frank:alpha, hamacher:gamma.
    #[arg(long, default_value = "weber")]
    family: String,
    /// Weber lambda when the family is given without a parameter.
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    lambda: f64,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<OperatorFamily, CliError> {
        let family = match parse::<FamilyChoice>(&self.family, "--family")? {
            FamilyChoice::WeberSweep => OperatorFamily::Weber { lambda: self.lambda },
            FamilyChoice::Fixed(f) => f,
        };
        family
            .validate()
            .map_err(|e| CliError::Usage(format!("--family: {e}")))?;
        Ok(family)
    }
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// Swing distance threshold.
    #[arg(long)]
    d_bound: Option<f64>,
    /// Swing smoothing constant.
    #[arg(long)]
    alpha: Option<f64>,
    /// Link swing cells below the threshold instead of above.
    #[arg(long)]
    invert_selection: bool,
    /// Use the unshifted MABAC border-distance reading.
    #[arg(long)]
    mabac_literal: bool,
    /// Projection reading.
    #[arg(long, value_enum, default_value_t = ReadingArg::ColumnBest)]
    projection_reading: ReadingArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    IdealPoint,
    BenefitIdeal,
    ColumnBest,
}

impl From<ReadingArg> for ProjectionReading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::IdealPoint => Self::IdealPoint,
            ReadingArg::BenefitIdeal => Self::BenefitIdeal,
            ReadingArg::ColumnBest => Self::ColumnBest,
        }
    }
}

impl WeightArgs {
    fn swing(&self) -> Result<SwingConfig, CliError> {
        let d = SwingConfig::default();
        let cfg = SwingConfig {
            d_bound: self.d_bound.unwrap_or(d.d_bound),
            alpha: self.alpha.unwrap_or(d.alpha),
            invert_selection: self.invert_selection,
        };
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }

    fn mabac(&self) -> MabacVariant {
        if self.mabac_literal {
            MabacVariant::Literal
        } else {
            MabacVariant::Shifted
        }
    }

    /// Applies the method-specific settings to a parsed method name.
    fn configure(&self, method: WeightMethod) -> Result<WeightMethod, CliError> {
        Ok(match method {
            WeightMethod::Swing(_) => WeightMethod::Swing(self.swing()?),
            WeightMethod::Mabac { .. } => WeightMethod::Mabac { variant: self.mabac() },
            WeightMethod::Projection { .. } => WeightMethod::Projection {
                reading: self.projection_reading.into(),
            },
            manual => manual,
        })
    }
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[command(flatten)]
    common: Common,
    /// Rung: a number, or `auto` for the smallest admissible integer.
    #[arg(long, default_value = "auto")]
    q: String,
    /// Largest rung tried by `--q auto`.
    #[arg(long, default_value_t = 20)]
    q_max: u32,
    #[command(flatten)]
    family: FamilyArgs,
    /// Weighting method: swing, mabac, projection or manual:w1,w2,...
    #[arg(long, default_value = "swing")]
    weights: String,
    /// Rung at which derived weights are computed (default: the pipeline rung).
    #[arg(long)]
    weight_q: Option<f64>,
    #[command(flatten)]
    weight_args: WeightArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Rungs: a range `2..9` (inclusive) or a list `2,3,5`.
    #[arg(long, default_value = "2..9")]
    q: String,
    /// Weber lambda values for a plain `weber` family (repeatable or comma separated).
    #[arg(long, value_delimiter = ',', default_value = "2", allow_negative_numbers = true)]
    lambda: Vec<f64>,
    /// Families (repeatable or comma separated).
    #[arg(long, value_delimiter = ',', default_value = "weber")]
    family: Vec<String>,
    /// Weighting methods (repeatable).
    #[arg(long, default_value = "swing")]
    weights: Vec<String>,
    /// Integer rung at which weights are derived (default: the first swept rung).
    #[arg(long)]
    weight_q: Option<u32>,
    /// Family used when deriving weights (default: the first swept family).
    #[arg(long)]
    weight_family: Option<String>,
    #[command(flatten)]
    weight_args: WeightArgs,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "auto")]
    q: String,
    #[arg(long, default_value_t = 20)]
    q_max: u32,
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    weight_args: WeightArgs,
}

fn parse<T>(s: &str, flag: &str) -> Result<T, CliError>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| CliError::Usage(format!("{flag}: {e}")))
}

fn rung_choice(q: &str, q_max: u32) -> Result<RungChoice, CliError> {
    if q.trim().eq_ignore_ascii_case("auto") {
        return Ok(RungChoice::Auto { q_max });
    }
    let value: f64 = parse(q, "--q")?;
    Rung::new(value)
        .map(RungChoice::Fixed)
        .map_err(|e| CliError::Usage(format!("--q: {e}")))
}

/// `a..b` (inclusive) or `a,b,c`.
fn rung_list(spec: &str) -> Result<Vec<u32>, CliError> {
    let spec = spec.trim();
    if let Some((a, b)) = spec.split_once("..") {
        let a: u32 = parse(a.trim(), "--q")?;
        let b: u32 = parse(b.trim_start_matches('=').trim(), "--q")?;
        if a > b {
            return Err(CliError::Usage(format!("--q: empty range {spec}")));
        }
        return Ok((a..=b).collect());
    }
    spec.split(',').map(|x| parse(x.trim(), "--q")).collect()
}

fn is_stdout(path: &std::path::Path) -> bool {
    path.as_os_str() == "-"
}

fn write_to(path: &std::path::Path, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if is_stdout(path) {
        out.write_all(text.as_bytes()).map_err(io)
    } else {
        std::fs::write(path, text).map_err(io)
    }
}

/// Prints the human table unless a document goes to stdout, then writes the
/// requested documents.
fn emit(
    common: &Common,
    out: &mut dyn Write,
    table: impl FnOnce() -> String,
    csv: impl FnOnce() -> Result<String, csv::Error>,
    json: impl FnOnce() -> String,
) -> Result<(), CliError> {
    let paths = [&common.emit_csv, &common.emit_json];
    if paths.iter().filter(|p| p.as_deref().is_some_and(is_stdout)).count() > 1 {
        return Err(CliError::Usage("only one document can go to stdout".into()));
    }
    if !paths.iter().any(|p| p.as_deref().is_some_and(is_stdout)) {
        write_to(std::path::Path::new("-"), &table(), out)?;
    }
    if let Some(path) = &common.emit_csv {
        write_to(path, &csv_text(csv())?, out)?;
    }
    if let Some(path) = &common.emit_json {
        write_to(path, &json(), out)?;
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_text(r: Result<String, csv::Error>) -> Result<String, CliError> {
    r.map_err(|e| CliError::Io {
        path: "<csv>".into(),
        message: e.to_string(),
    })
}

fn run_evaluate(a: &EvaluateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let method = a.weight_args.configure(parse(&a.weights, "--weights")?)?;
    let weight_q = a
        .weight_q
        .map(|q| Rung::new(q).map_err(|e| CliError::Usage(format!("--weight-q: {e}"))))
        .transpose()?;
    let config = PipelineConfig {
        q: rung_choice(&a.q, a.q_max)?,
        family: a.family.resolve()?,
        weights: method,
        weight_q,
    };
    let problem = load_problem(&a.common.file)?;
    let report = evaluate(&problem, &config)?;
    emit(
        &a.common,
        out,
        || render::report_table(&report),
        || render::report_csv(&report),
        || json(&report),
    )
}

fn run_sweep_cmd(a: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = SweepSpec {
        qs: rung_list(&a.q)?,
        lambdas: a.lambda.clone(),
        families: a
            .family
            .iter()
            .map(|f| parse(f, "--family"))
            .collect::<Result<_, _>>()?,
        methods: a
            .weights
            .iter()
            .map(|m| a.weight_args.configure(parse(m, "--weights")?))
            .collect::<Result<_, _>>()?,
        weight_q: a.weight_q,
        weight_family: a
            .weight_family
            .as_deref()
            .map(|f| parse(f, "--weight-family"))
            .transpose()?,
    };
    let problem = load_problem(&a.common.file)?;
    let table = run_sweep(&problem, &spec)?;
    emit(&a.common, out, || table.render(), || table.to_csv(), || json(&table))
}

fn run_compare(a: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = CompareSpec {
        q: rung_choice(&a.q, a.q_max)?,
        family: a.family.resolve()?,
        swing: a.weight_args.swing()?,
        mabac: a.weight_args.mabac(),
        projection: a.weight_args.projection_reading.into(),
    };
    let problem = load_problem(&a.common.file)?;
    let cmp = compare_weights(&problem, &spec)?;
    emit(&a.common, out, || cmp.render(), || cmp.to_csv(), || json(&cmp))
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Evaluate(a) => run_evaluate(a, out),
        Command::Sweep(a) => run_sweep_cmd(a, out),
        Command::CompareWeights(a) => run_compare(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
