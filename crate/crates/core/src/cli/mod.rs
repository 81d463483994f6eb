//! Command-line surface. [`run`] is the whole program; the binary only wires
//! it to the process streams and exit code.
//!
//! Exit codes: 0 success, 2 input or domain error, 3 numerical failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::operator::{DEFAULT_COMPOSE_GRID, DEFAULT_SUM_N};
use crate::quadrature::{Tolerance, DEFAULT_BUDGET};

mod commands;
pub mod config;
pub mod format;
pub mod svg;

pub use commands::ReportRow;
pub use config::{parse_config, parse_number_list, ConfigOverrides};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Default order grid.
pub const DEFAULT_ALPHAS: &str = "0,0.2,0.4,0.6,0.8,1";
/// Orders that admit a region (α > 0).
pub const DEFAULT_REGION_ALPHAS: &str = "0.2,0.4,0.6,0.8,1";
pub const DEFAULT_HORIZONS: &str = "2,4,6,8,10";
pub const DEFAULT_SAMPLES: usize = crate::geometry::DEFAULT_CURVE_SAMPLES;
pub const DEFAULT_COMPARE_TOL: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "fracint",
    version,
    about = "Riemann-Liouville fractional integrals and their strip geometry"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// key=value file overriding tolerances and budgets; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Evaluation budget of the adaptive routes
    #[arg(long)]
    pub budget: Option<usize>,
    /// Heights sampled per curve
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Γ(x)
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Sample g and h for one (α, t) as CSV
    Transform {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate I^α f(t) over α and t grids
    Compute {
        /// Integrand, pow:<coefficient>:<exponent>
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long, default_value = DEFAULT_ALPHAS)]
        alpha: String,
        #[arg(long, default_value = DEFAULT_HORIZONS)]
        t: String,
        /// Comma-separated routes: direct, stieltjes, cavalieri, transformed, oracle
        #[arg(long, default_value = "transformed")]
        method: String,
        /// Partition size of the sum routes
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Fill the seconds column with wall time (output is then not reproducible)
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run all four routes and the closed form, report pairwise agreement as JSON
    Compare {
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long, default_value = DEFAULT_ALPHAS)]
        alpha: String,
        #[arg(long, default_value = DEFAULT_HORIZONS)]
        t: String,
        #[arg(long)]
        n: Option<usize>,
        /// Relative tolerance for the `consistent` flag
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Strip boundaries and areas for one (α, t)
    Strips {
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long, default_value_t = 0.8)]
        alpha: f64,
        #[arg(long, default_value_t = 10.0)]
        t: f64,
        /// Number of strips
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also write an SVG rendering here
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Right edges and areas of the regions over α and t grids
    Regions {
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long, default_value = DEFAULT_REGION_ALPHAS)]
        alpha: String,
        #[arg(long, default_value = DEFAULT_HORIZONS)]
        t: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// (t, I^α f(t)) series for each α, plus region-area markers
    Curves {
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long, default_value = DEFAULT_ALPHAS)]
        alpha: String,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long, default_value_t = 0.1)]
        t_step: f64,
        /// Horizons at which region areas are reported
        #[arg(long, default_value = DEFAULT_HORIZONS)]
        markers: String,
        #[arg(long, default_value = "transformed")]
        method: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Compare I^α I^β f(t) with I^(α+β) f(t)
    Semigroup {
        #[arg(long, default_value = "pow:1:1")]
        f: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long)]
        grid: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

/// Resolved settings: defaults, then the config file, then flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub tolerance: Tolerance,
    pub budget: usize,
    pub n: usize,
    pub grid: usize,
    pub samples: usize,
    pub compare_tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            tolerance: Tolerance::default(),
            budget: DEFAULT_BUDGET,
            n: DEFAULT_SUM_N,
            grid: DEFAULT_COMPOSE_GRID,
            samples: DEFAULT_SAMPLES,
            compare_tol: DEFAULT_COMPARE_TOL,
        }
    }
}

impl Settings {
    pub fn resolve(common: &Common) -> Result<Self, CliError> {
        let mut s = Settings::default();
        if let Some(path) = &common.config {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::input(format!("cannot read config {}: {e}", path.display()))
            })?;
            s.apply(&parse_config(&text)?);
        }
        s.apply(&ConfigOverrides {
            abs_tol: common.abs_tol,
            rel_tol: common.rel_tol,
            budget: common.budget,
            samples: common.samples,
            ..Default::default()
        });
        if !(s.tolerance.abs > 0.0 && s.tolerance.rel > 0.0) || s.budget == 0 || s.samples < 2 {
            return Err(CliError::input(
                "tolerances and budget must be positive and samples >= 2",
            ));
        }
        Ok(s)
    }

    fn apply(&mut self, o: &ConfigOverrides) {
        if let Some(v) = o.abs_tol {
            self.tolerance.abs = v;
        }
        if let Some(v) = o.rel_tol {
            self.tolerance.rel = v;
        }
        if let Some(v) = o.budget {
            self.budget = v;
        }
        if let Some(v) = o.n {
            self.n = v;
        }
        if let Some(v) = o.grid {
            self.grid = v;
        }
        if let Some(v) = o.samples {
            self.samples = v;
        }
        if let Some(v) = o.compare_tol {
            self.compare_tol = v;
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_NUMERICAL,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Self::numerical(e.to_string())
        } else {
            Self::input(e.to_string())
        }
    }
}

pub(crate) fn write_output(
    path: Option<&Path>,
    content: &str,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(content.as_bytes())
            .map_err(|e| CliError::input(format!("cannot write to stdout: {e}"))),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match commands::dispatch(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}
