//! The `selfext` command line: Nakayama computations, theorem sweeps, the
//! bound quiver engine and the catalog verification suites.

pub mod commands;
pub mod modexpr;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use report::{Format, Report};

/// Relative `--output` and `--summary` paths resolve against this directory.
pub const OUTPUT_DIR_ENV: &str = "SELFEXT_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "selfext",
    version,
    about = "Self-extensions of Nakayama and bound quiver algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for the randomized isomorphism tests; recorded in every report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-formula computations on one Nakayama algebra.
    Kupisch {
        #[command(subcommand)]
        op: KupischOp,
    },
    /// Run the theorem checks over all Kupisch series in a range.
    Sweep(SweepArgs),
    /// Computations with a bound quiver presentation.
    Quiver {
        #[command(subcommand)]
        op: QuiverOp,
    },
    /// The named algebras and their verification suites.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// Kupisch series, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "file")]
    pub series: Option<Vec<usize>>,
    /// `cyclic` or `linear`.
    #[arg(long, default_value = "cyclic")]
    pub shape: String,
    /// TOML file with `schema_version`, `shape` and `kupisch`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum KupischOp {
    /// Check a Kupisch series and print basic invariants.
    Validate(#[command(flatten)] AlgebraArgs),
    /// dim Hom(M, N).
    Hom {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Serial module `vertex,length`.
        #[arg(long)]
        module: String,
        #[arg(long)]
        target: String,
    },
    /// dim Ext^i(M, N).
    Ext {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    /// Whether Ext^1(M, M) vanishes.
    Rigid {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: String,
    },
    /// Projective dimension.
    Pd {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: String,
    },
    /// Dimensions, rigidity and self-extensions up to a depth.
    Report {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = selfext_core::lab::DEFAULT_EXT_DEPTH)]
        depth: usize,
    },
    /// Stable dim Ext^i(M, M) for any integer i (self-injective algebras).
    Tate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: String,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    #[arg(long, default_value_t = 9)]
    pub c_max: usize,
    /// Shapes to enumerate.
    #[arg(long, value_delimiter = ',', default_value = "cyclic,linear")]
    pub shapes: Vec<String>,
    /// Checks by name or numeric alias; all by default.
    #[arg(long, value_delimiter = ',')]
    pub checks: Option<Vec<String>>,
    /// Field characteristics for the oracle cross-check.
    #[arg(long = "p", value_delimiter = ',', default_value = "2,3")]
    pub primes: Vec<u32>,
    #[arg(long, default_value_t = selfext_core::lab::DEFAULT_EXT_DEPTH)]
    pub depth: usize,
    /// Also write a CSV summary (instance, check, status).
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PresentationArgs {
    /// Presentation TOML file.
    #[arg(long, conflicts_with = "catalog")]
    pub file: Option<PathBuf>,
    /// Use a catalog entry instead of a file.
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    /// Module expression: `S<v>`, `P<v>`, `arrow:<label>`, `path:<a>.<b>`,
    /// `omega<k>:<expr>`, a defined module name, or a sum joined by `+`.
    #[arg(long, conflicts_with = "simple")]
    pub module: Option<String>,
    /// Shorthand for `--module S<v>`.
    #[arg(long)]
    pub simple: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum QuiverOp {
    /// Dimension, Cartan matrix and weak symmetry.
    Build(#[command(flatten)] PresentationArgs),
    /// dim Ext^i(M, N); a bare vertex name as target means the simple.
    Ext {
        #[command(flatten)]
        presentation: PresentationArgs,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    /// Least m <= bound with Ω^m M ≅ M.
    Period {
        #[command(flatten)]
        presentation: PresentationArgs,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Minimal projective resolution: syzygy dimensions and cover terms.
    Resolve {
        #[command(flatten)]
        presentation: PresentationArgs,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogOp {
    /// List the named algebras.
    List,
    /// Run the verification suite of an entry, or of every entry with `all`.
    Verify {
        name: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Also write a CSV summary (instance, check, status).
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Print the presentation of an entry as TOML.
    Export { name: String },
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed or invalid input; exit code 2.
    Input(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    /// `Variant: message` for typed errors, so scripts can match the kind.
    pub fn typed<E: std::fmt::Debug + std::fmt::Display>(e: E) -> Self {
        let debug = format!("{e:?}");
        let kind = debug.split([' ', '(', '{']).next().unwrap_or_default();
        CliError::Input(format!("{kind}: {e}"))
    }
}

/// Resolves a user path against the output directory variable.
pub fn output_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Runs a parsed command line, writing the report and returning the exit code.
pub fn execute(cli: &Cli, stdout: &mut dyn std::io::Write) -> Result<i32, CliError> {
    let (report, summary) = commands::run(cli)?;
    match &cli.output {
        Some(path) => {
            let path = output_path(path);
            let mut file = std::fs::File::create(&path)?;
            report.write(cli.format, &mut file)?;
        }
        None => report.write(cli.format, stdout)?,
    }
    if let Some(path) = summary {
        let mut file = std::fs::File::create(output_path(&path))?;
        report.write_summary(&mut file)?;
    }
    Ok(if report.has_failures() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    })
}
