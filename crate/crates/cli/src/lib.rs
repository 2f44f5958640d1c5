//! Subcommand CLI over the corrsphere kernels.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error (unreadable input,
//! ragged rows, constant rows), 3 numerical failure (eigensolver did not
//! converge). Results go to standard output, diagnostics to standard error,
//! and identical invocations produce byte-identical output.

pub mod dataset;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use corrsphere::{
    center_of_mass, distance_matrix, fit, standardize_with, ClusteringConfig, Error as CoreError,
    InitMethod, StandardizedPoint, DEFAULT_EPS_DIAG,
};

use dataset::{parse_csv, Dataset, ParseError, ParseOptions};

#[derive(Parser, Debug)]
#[command(
    name = "corrsphere",
    version,
    about = "Correlation distances, sphere barycenters, and clustering over CSV data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Center and reduce each sample onto the radius-sqrt(D) hypersphere
    Standardize(CommonArgs),
    /// Pairwise correlation-distance matrix of the standardized samples
    Distmat(CommonArgs),
    /// Center of mass of the standardized samples
    Center(CommonArgs),
    /// K-means under the correlation distance
    Cluster(ClusterArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Input CSV path, or '-' for standard input
    #[arg(long)]
    input: String,

    /// Field delimiter (single ASCII character)
    #[arg(long, default_value = ",", value_parser = parse_delimiter)]
    delimiter: char,

    /// Treat the first row as a header
    #[arg(long)]
    header: bool,

    /// Name of the header column holding row identifiers
    #[arg(long, requires = "header", conflicts_with = "transpose")]
    id_column: Option<String>,

    /// Treat columns as samples (rows become vector components)
    #[arg(long)]
    transpose: bool,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Relative tolerance for rejecting constant (diagonal) samples
    #[arg(long, default_value_t = DEFAULT_EPS_DIAG, value_parser = parse_nonnegative)]
    eps_diag: f64,
}

#[derive(Args, Debug)]
struct ClusterArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Number of clusters
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,

    /// Seed for the random-distinct initialization
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Iteration budget
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: u64,

    /// Stop when the inertia improvement drops below this threshold
    #[arg(long, default_value_t = 1e-8, value_parser = parse_nonnegative)]
    tol: f64,

    /// Center initialization strategy
    #[arg(long, value_enum, default_value_t = Init::Farthest)]
    init: Init,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Init {
    Farthest,
    Random,
}

fn parse_delimiter(s: &str) -> Result<char, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii() => Ok(c),
        _ => Err("delimiter must be a single ASCII character".to_owned()),
    }
}

fn parse_nonnegative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v >= 0.0 {
        Ok(v)
    } else {
        Err("value must be finite and non-negative".to_owned())
    }
}

/// Failure after argument parsing, carrying its process exit code.
#[derive(Debug)]
enum CliError {
    Data(String),
    Numerical(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Data(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Data(msg) | CliError::Numerical(msg) => msg,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(err: ParseError) -> Self {
        CliError::Data(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Data(format!("i/o failure: {err}"))
    }
}

fn core_error(err: CoreError, context: &str) -> CliError {
    match err {
        CoreError::ConvergenceFailure { .. } => CliError::Numerical(format!("{context}: {err}")),
        other => CliError::Data(format!("{context}: {other}")),
    }
}

/// Runs the CLI against explicit streams and returns the process exit code.
/// `argv` must include the program name, as in [`std::env::args`].
pub fn run_cli<I, S>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    1
                }
            };
        }
    };
    match execute(cli, stdin, stdout, stderr) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {}", err.message());
            err.exit_code()
        }
    }
}

fn execute(
    cli: Cli,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match cli.command {
        Command::Standardize(args) => {
            let loaded = load_standardized(&args, stdin, stderr)?;
            match args.format {
                Format::Csv => output::write_standardized_csv(
                    stdout,
                    &loaded.points,
                    loaded.ids.as_deref(),
                    loaded.column_names.as_deref(),
                    args.delimiter,
                )?,
                Format::Json => {
                    output::write_standardized_json(stdout, &loaded.points, loaded.ids.as_deref())?
                }
            }
        }
        Command::Distmat(args) => {
            let loaded = load_standardized(&args, stdin, stderr)?;
            let matrix = distance_matrix(&loaded.points)
                .map_err(|e| core_error(e, "distance matrix"))?;
            match args.format {
                Format::Csv => output::write_distance_matrix_csv(
                    stdout,
                    &matrix,
                    loaded.ids.as_deref(),
                    args.delimiter,
                )?,
                Format::Json => {
                    output::write_distance_matrix_json(stdout, &matrix, loaded.ids.as_deref())?
                }
            }
        }
        Command::Center(args) => {
            let loaded = load_standardized(&args, stdin, stderr)?;
            let barycenter =
                center_of_mass(&loaded.points).map_err(|e| core_error(e, "center of mass"))?;
            match args.format {
                Format::Csv => output::write_barycenter_csv(stdout, &barycenter, args.delimiter)?,
                Format::Json => output::write_barycenter_json(stdout, &barycenter)?,
            }
        }
        Command::Cluster(args) => {
            let loaded = load_standardized(&args.common, stdin, stderr)?;
            let config = ClusteringConfig::new(args.k as usize)
                .with_max_iters(args.max_iters as usize)
                .with_tol(args.tol)
                .with_seed(args.seed)
                .with_init(match args.init {
                    Init::Farthest => InitMethod::FarthestPoint,
                    Init::Random => InitMethod::RandomDistinct,
                });
            let model = fit(&loaded.points, &config).map_err(|e| core_error(e, "clustering"))?;
            match args.common.format {
                Format::Csv => output::write_cluster_csv(
                    stdout,
                    &model,
                    loaded.ids.as_deref(),
                    args.common.delimiter,
                )?,
                Format::Json => output::write_cluster_json(stdout, &model)?,
            }
        }
    }
    Ok(())
}

struct Standardized {
    points: Vec<StandardizedPoint>,
    ids: Option<Vec<String>>,
    column_names: Option<Vec<String>>,
}

/// Reads, parses, optionally transposes, and standardizes the input,
/// reporting failures with the offending sample named.
fn load_standardized(
    args: &CommonArgs,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Result<Standardized, CliError> {
    let options = ParseOptions {
        delimiter: args.delimiter as u8,
        has_header: args.header,
        id_column: args.id_column.clone(),
    };
    let dataset = read_dataset(&args.input, &options, stdin)?;
    let dataset = if args.transpose {
        dataset.transposed()?
    } else {
        dataset
    };

    if dataset.dim() == 2 {
        // Every standardized 2-vector is (1,-1) up to sign, so all pairwise
        // distances are 0. Well-defined, but rarely what anyone wants.
        let _ = writeln!(
            stderr,
            "warning: dimension 2 input: every standardized sample is (1,-1) up to sign and all distances are 0"
        );
    }

    let sample_label = |j: usize| -> String {
        match &dataset.ids {
            Some(ids) => format!("row {:?}", ids[j]),
            None if args.transpose => format!("column {}", j + 1),
            None => format!("row {}", j + 1),
        }
    };

    let mut points = Vec::with_capacity(dataset.len());
    for (j, p) in dataset.points.iter().enumerate() {
        let q = standardize_with(p, args.eps_diag)
            .map_err(|e| CliError::Data(format!("{}: {e}", sample_label(j))))?;
        points.push(q);
    }
    Ok(Standardized {
        points,
        ids: dataset.ids,
        column_names: dataset.column_names,
    })
}

fn read_dataset(
    input: &str,
    options: &ParseOptions,
    stdin: &mut dyn Read,
) -> Result<Dataset, CliError> {
    if input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(parse_csv(text.as_bytes(), options, "-")?)
    } else {
        let file = File::open(input)
            .map_err(|e| CliError::Data(format!("cannot open {input:?}: {e}")))?;
        Ok(parse_csv(file, options, input)?)
    }
}
