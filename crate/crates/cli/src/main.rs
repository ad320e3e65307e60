//! `coxeterlab` command-line front end.
//!
//! Exit codes: 0 success, 1 table mismatch or batch failure, 2 invalid
//! request or input document, 3 computation failure.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeterlab::input::{FamilySpec, InputDocument};
use coxeterlab::report::{analyze, parse_operations, AnalysisOptions, AnalysisReport, Operation};
use coxeterlab::spectral::DEFAULT_ROOT_TOLERANCE;
use coxeterlab::tables::{regenerate, TableName};
use coxeterlab::{CartanAlgebra, GroupAction, Period};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "coxeterlab",
    version,
    about = "Coxeter polynomials and spectral measures of triangular algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one algebra and analyze it.
    Analyze(Box<AnalyzeArgs>),
    /// Regenerate a reference table and diff it against its golden file.
    Table(TableArgs),
    /// Analyze every JSON document in a directory.
    Batch(BatchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Args)]
struct Common {
    /// Comma-separated subset of factorize, periodicity, hform, measures,
    /// symmetry.
    #[arg(long, default_value = "factorize,periodicity,hform,measures")]
    ops: String,
    /// Root residual tolerance.
    #[arg(long, env = "COXETERLAB_TOL", default_value_t = DEFAULT_ROOT_TOLERANCE)]
    tol: f64,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Named family: dynkin, extended-dynkin, star, canonical,
    /// extended-canonical, truncated, poset-d, semichain, tensor,
    /// repetitive, quotient, extension.
    #[arg(long, group = "source")]
    family: Option<String>,
    /// Type symbol for dynkin (E6, D5, ...) and extended-dynkin (A~2,3, D~5, E~7).
    #[arg(long = "type")]
    kind: Option<String>,
    /// Comma-separated weights.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
    /// Size parameter for truncated, poset-d and semichain.
    #[arg(long)]
    n: Option<usize>,
    /// Truncation depth for truncated.
    #[arg(long)]
    r: Option<usize>,
    /// Chain length for semichain.
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated extension vector for extension.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    vector: Option<Vec<i64>>,
    /// Operand document for composite families; repeat for tensor.
    #[arg(long)]
    of: Vec<PathBuf>,
    /// Group action document for quotient and symmetry.
    #[arg(long)]
    action: Option<PathBuf>,
    /// Quiver document.
    #[arg(long, group = "source")]
    quiver: Option<PathBuf>,
    /// Poset document.
    #[arg(long, group = "source")]
    poset: Option<PathBuf>,
    /// Any input document (algebra, quiver, poset, weights or family).
    #[arg(long, group = "source")]
    spec: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// dynkin, extended-dynkin or weights.
    name: String,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BatchArgs {
    dir: PathBuf,
    /// Directory for per-file reports and the summary; defaults to
    /// `<dir>/reports`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Mismatch(String),
    Invalid(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Compute(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Invalid(m) | Failure::Compute(m) => m,
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn read_document(path: &Path) -> CliResult<InputDocument> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    InputDocument::parse(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_value(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        invalid(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn read_action(path: &Path) -> CliResult<GroupAction> {
    read_document(path)?
        .into_action()
        .map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Compute(format!("{}: {e}", p.display()))),
        None => print_stdout(text),
    }
}

/// A closed downstream pipe is not an error.
fn print_stdout(text: &str) -> CliResult<()> {
    let mut stdout = io::stdout().lock();
    match writeln!(stdout, "{text}").and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Compute(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

/// Assembles a family document from flags; its parameters are validated by
/// the same deserializer that reads family files.
fn family_document(args: &AnalyzeArgs, family: &str) -> CliResult<FamilySpec> {
    let mut doc = serde_json::Map::new();
    doc.insert("family".into(), json!(family));
    if let Some(t) = &args.kind {
        doc.insert("type".into(), json!(t));
    }
    if let Some(w) = &args.weights {
        doc.insert("weights".into(), json!(w));
    }
    for (key, v) in [("n", args.n), ("r", args.r), ("m", args.m)] {
        if let Some(v) = v {
            doc.insert(key.into(), json!(v));
        }
    }
    if let Some(v) = &args.vector {
        doc.insert("vector".into(), json!(v));
    }
    if !args.of.is_empty() {
        let of: Vec<Value> = args.of.iter().map(|p| read_value(p)).collect::<CliResult<_>>()?;
        doc.insert("of".into(), Value::Array(of));
    }
    if family == "quotient" {
        let path = args
            .action
            .as_ref()
            .ok_or_else(|| invalid("family quotient needs --action"))?;
        doc.insert("action".into(), read_value(path)?);
    }
    serde_json::from_value(Value::Object(doc)).map_err(|e| invalid(format!("family {family}: {e}")))
}

fn options(common: &Common, action: Option<GroupAction>) -> CliResult<AnalysisOptions> {
    if common.tol.is_nan() || common.tol <= 0.0 {
        return Err(invalid("--tol must be positive"));
    }
    let operations: BTreeSet<Operation> = parse_operations(&common.ops).map_err(invalid)?;
    if operations.contains(&Operation::Symmetry) && action.is_none() {
        return Err(invalid("--ops symmetry needs --action"));
    }
    Ok(AnalysisOptions {
        operations,
        tolerance: common.tol,
        action,
    })
}

fn build_algebra(args: &AnalyzeArgs) -> CliResult<CartanAlgebra> {
    let doc = if let Some(f) = &args.family {
        InputDocument::Family(family_document(args, f)?)
    } else if let Some(p) = args.quiver.as_ref().or(args.poset.as_ref()).or(args.spec.as_ref()) {
        let doc = read_document(p)?;
        let expected = if args.quiver.is_some() {
            Some("quiver")
        } else if args.poset.is_some() {
            Some("poset")
        } else {
            None
        };
        if let Some(kind) = expected {
            if doc.kind() != kind {
                return Err(invalid(format!(
                    "{}: expected a {kind} document, found a {}",
                    p.display(),
                    doc.kind()
                )));
            }
        }
        doc
    } else {
        return Err(invalid("no source given: use --family, --quiver, --poset or --spec"));
    };
    doc.build().map_err(invalid)
}

fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> CliResult<()> {
    let algebra = build_algebra(args)?;
    let action = args.action.as_deref().map(read_action).transpose()?;
    let opts = options(&args.common, action)?;
    let report = analyze(&algebra, &opts).map_err(|e| Failure::Compute(e.to_string()))?;
    write_output(args.out.as_deref(), &render(&report, args.format))
}

fn cmd_table(args: &TableArgs) -> CliResult<()> {
    let table: TableName = args.name.parse().map_err(invalid)?;
    let report = regenerate(table).map_err(|e| Failure::Compute(e.to_string()))?;
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };
    write_output(args.out.as_deref(), &text)?;
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Mismatch(report.diff_lines().join("\n")))
    }
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    n: usize,
    factorization: String,
    cyclotomic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    period: Option<Period>,
}

#[derive(Serialize)]
struct BatchFailure {
    file: String,
    code: u8,
    error: String,
}

#[derive(Serialize)]
struct BatchSummary {
    files: usize,
    succeeded: usize,
    failed: usize,
    cyclotomic: usize,
    non_cyclotomic: usize,
    periodic: usize,
    results: Vec<BatchEntry>,
    failures: Vec<BatchFailure>,
}

fn analyze_file(path: &Path, opts: &AnalysisOptions, out_dir: &Path) -> CliResult<AnalysisReport> {
    let algebra = read_document(path)?.build().map_err(invalid)?;
    let report = analyze(&algebra, opts).map_err(|e| Failure::Compute(e.to_string()))?;
    let name = path
        .file_stem()
        .map_or_else(|| "report".into(), |s| s.to_string_lossy().into_owned());
    let target = out_dir.join(format!("{name}.report.json"));
    fs::write(&target, report.to_json()).map_err(|e| Failure::Compute(format!("{}: {e}", target.display())))?;
    Ok(report)
}

fn cmd_batch(args: &BatchArgs) -> CliResult<()> {
    let opts = options(&args.common, None)?;
    let entries = fs::read_dir(&args.dir).map_err(|e| invalid(format!("{}: {e}", args.dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let out_dir = args.out.clone().unwrap_or_else(|| args.dir.join("reports"));
    fs::create_dir_all(&out_dir).map_err(|e| Failure::Compute(format!("{}: {e}", out_dir.display())))?;
    let outcomes: Vec<(String, CliResult<AnalysisReport>)> = files
        .par_iter()
        .map(|p| {
            let name = p
                .file_name()
                .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            (name, analyze_file(p, &opts, &out_dir))
        })
        .collect();
    let mut summary = BatchSummary {
        files: files.len(),
        succeeded: 0,
        failed: 0,
        cyclotomic: 0,
        non_cyclotomic: 0,
        periodic: 0,
        results: Vec::new(),
        failures: Vec::new(),
    };
    for (file, outcome) in outcomes {
        match outcome {
            Ok(r) => {
                summary.succeeded += 1;
                if r.cyclotomic {
                    summary.cyclotomic += 1;
                } else {
                    summary.non_cyclotomic += 1;
                }
                if r.period.is_some_and(|p| p.is_finite()) {
                    summary.periodic += 1;
                }
                summary.results.push(BatchEntry {
                    file,
                    n: r.n,
                    factorization: r.factorization,
                    cyclotomic: r.cyclotomic,
                    period: r.period,
                });
            }
            Err(f) => {
                summary.failed += 1;
                summary.failures.push(BatchFailure {
                    file,
                    code: f.code(),
                    error: f.message().to_string(),
                });
            }
        }
    }
    let text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    let target = out_dir.join("summary.json");
    fs::write(&target, &text).map_err(|e| Failure::Compute(format!("{}: {e}", target.display())))?;
    print_stdout(&text)?;
    if summary.failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} of {} files failed",
            summary.failed, summary.files
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Table(t) => cmd_table(t),
        Command::Batch(b) => cmd_batch(b),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
