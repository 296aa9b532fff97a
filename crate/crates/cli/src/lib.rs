//! Command-line front end for `riesz-core`.
//!
//! Exit codes: 0 on success, 2 on usage errors, 1 on domain or I/O errors.
//! Data goes to `--out` (or stdout); diagnostics go to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use riesz_core::coeffs::{
    gl_weights, kappa_weights, lubich_weights, wsgd_weights, Method as CoreMethod, WsgdVariant,
};
use riesz_core::harness::{
    convergence_study_with, error_surface, example41_exact, example41_function, example42_problem,
    ErrorNorm, StudyKind, StudyOptions,
};
use riesz_core::io::{
    fmt_real, write_json, write_report_csv, write_solution_csv, write_surface_csv,
};
use riesz_core::operators::{
    generating_symbol, point_riesz_derivative, spectral_bounds, GridFunction, GridSpec1D,
};
use riesz_core::pde::{solve, AdvectionDiffusionProblem, Keep as CoreKeep};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] riesz_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Parsed command line. Serializes to JSON and back without loss.
#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[command(
    name = "riesz",
    version,
    about = "Riesz derivative weights, operators and solver"
)]
pub struct RunConfig {
    /// Seed for randomized checks; every current subcommand is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Weight table as CSV `ell,value`.
    Coeffs(CoeffsArgs),
    /// Point Riesz derivative of x^2 (1 - x)^2 on [0, 1].
    Deriv(DerivArgs),
    /// Crank-Nicolson solve of the advection-diffusion problem.
    Solve(SolveArgs),
    /// Symbol samples and eigenvalue extremes of G + G^T.
    Spectrum(SpectrumArgs),
    /// Reproduce a reference convergence table.
    Convergence(ConvergenceArgs),
    /// Pointwise space-time error of the manufactured solve.
    Surface(SurfaceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Kappa,
    Gl,
    Lubich,
    Wsgd1,
    Wsgd2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recursion,
    Convolution,
    Fft,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Example42,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Keep {
    Final,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    /// Maximum over interior nodes and all time levels.
    Spacetime,
    /// Maximum over interior nodes at the final time.
    Final,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CoeffsArgs {
    #[arg(long, value_enum, default_value_t = Family::Kappa)]
    pub family: Family,
    /// Order: 2..=4 for kappa, 1..=6 for lubich; ignored otherwise.
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long)]
    pub alpha: f64,
    /// Highest index; the table has `count + 1` entries.
    #[arg(long, default_value_t = 256)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Method::Recursion)]
    pub method: Method,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DerivArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Interior node index; defaults to the midpoint `M / 2`.
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SolveArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Problem::Example42)]
    pub problem: Problem,
    #[arg(long, value_enum, default_value_t = Keep::Final)]
    pub keep: Keep,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Symbol samples on [0, pi], endpoints included.
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
    /// Destination of the `x,f_alpha_x` CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Destination of the `{alpha, M, min_eig, max_eig}` record.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ConvergenceArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub table: u8,
    /// Comma-separated; defaults to the table's alphas.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Vec<f64>,
    /// Comma-separated `1/h` or `1/tau` values; defaults to the table's.
    #[arg(long, value_delimiter = ',')]
    pub divisions: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Norm::Spacetime)]
    pub norm: Norm,
    /// Overrides the fixed `1/h` (table 2) or `1/tau` (table 3).
    #[arg(long)]
    pub fixed: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub out: Format,
    /// Destination file; stdout when absent.
    #[arg(long)]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long = "M")]
    pub m: usize,
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `argv` (program name first), runs it and returns the exit code.
pub fn run<I, S>(argv: I) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.to_string().replace('\n', " "));
            1
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<()> {
    match &config.command {
        Command::Coeffs(a) => coeffs(a),
        Command::Deriv(a) => deriv(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Convergence(a) => convergence(a),
        Command::Surface(a) => surface(a),
    }
}

fn open(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| io_err(Some(p), e))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn io_err(path: Option<&Path>, source: io::Error) -> CliError {
    CliError::Io {
        path: path.map_or("<stdout>".into(), |p| p.display().to_string()),
        source,
    }
}

fn emit(path: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    let mut out = open(path)?;
    body(&mut out)
        .and_then(|()| out.flush())
        .map_err(|e| io_err(path, e))
}

fn coeffs(a: &CoeffsArgs) -> Result<()> {
    // `count` is the highest index, so the tables below hold `count + 1` values.
    let table = match a.family {
        Family::Kappa => {
            let method = match a.method {
                Method::Recursion => CoreMethod::Recursion,
                Method::Convolution => CoreMethod::Convolution,
                Method::Fft => CoreMethod::Fft,
            };
            kappa_weights(a.p, a.alpha, a.count, method)?
        }
        Family::Gl => gl_weights(a.alpha, a.count)?,
        Family::Lubich => lubich_weights(a.p, a.alpha, a.count)?,
        Family::Wsgd1 => wsgd_weights(WsgdVariant::First, a.alpha, a.count)?,
        Family::Wsgd2 => wsgd_weights(WsgdVariant::Second, a.alpha, a.count)?,
    };
    emit(a.out.as_deref(), |w| table.write_csv(w))
}

fn deriv(a: &DerivArgs) -> Result<()> {
    let grid = GridSpec1D::unit(a.m)?;
    let j = a.j.unwrap_or(a.m / 2);
    let u = GridFunction::sample(grid, example41_function);
    let value = point_riesz_derivative(&u, a.alpha, a.p, j)?;
    let x = grid.x(j);
    // The closed form is only known at the midpoint.
    let exact = if 2 * j == a.m {
        example41_exact(a.alpha).ok()
    } else {
        None
    };
    emit(a.out.as_deref(), |w| {
        writeln!(w, "x,derivative,exact,abs_error")?;
        match exact {
            Some(e) => writeln!(
                w,
                "{},{},{},{}",
                fmt_real(x),
                fmt_real(value),
                fmt_real(e),
                fmt_real((value - e).abs())
            ),
            None => writeln!(w, "{},{},,", fmt_real(x), fmt_real(value)),
        }
    })
}

fn solve_cmd(a: &SolveArgs) -> Result<()> {
    let problem = match a.problem {
        Problem::Example42 => example42_problem(a.alpha)?,
        Problem::Zero => AdvectionDiffusionProblem::zero(a.alpha, 2.0, a.alpha * a.alpha)?,
    };
    let keep = match a.keep {
        Keep::Final => CoreKeep::Final,
        Keep::All => CoreKeep::All,
    };
    let solution = solve(&problem, a.m, a.n, keep)?;
    emit(a.out.as_deref(), |w| {
        write_solution_csv(&solution, problem.exact.as_ref(), w)
    })
}

#[derive(Serialize)]
struct SpectrumRecord {
    alpha: f64,
    #[serde(rename = "M")]
    m: usize,
    min_eig: f64,
    max_eig: f64,
}

fn spectrum(a: &SpectrumArgs) -> Result<()> {
    if a.samples < 2 {
        return Err(CliError::Invalid(format!(
            "--samples must be at least 2, got {}",
            a.samples
        )));
    }
    let (min_eig, max_eig) = spectral_bounds(a.alpha, a.p, a.m)?;
    let symbol = (0..a.samples)
        .map(|k| {
            let x = std::f64::consts::PI * k as f64 / (a.samples - 1) as f64;
            generating_symbol(a.alpha, x).map(|f| (x, f))
        })
        .collect::<riesz_core::Result<Vec<_>>>()?;
    let record = SpectrumRecord {
        alpha: a.alpha,
        m: a.m,
        min_eig,
        max_eig,
    };
    emit(a.out.as_deref(), |w| {
        writeln!(w, "x,f_alpha_x")?;
        for (x, f) in &symbol {
            writeln!(w, "{},{}", fmt_real(*x), fmt_real(*f))?;
        }
        Ok(())
    })?;
    emit(a.json.as_deref(), |w| write_json(&record, w))
}

fn convergence(a: &ConvergenceArgs) -> Result<()> {
    let kind = StudyKind::from_table(a.table)
        .ok_or_else(|| CliError::Invalid(format!("unknown table {}", a.table)))?;
    let alphas = if a.alphas.is_empty() {
        kind.default_alphas()
    } else {
        a.alphas.clone()
    };
    let divisions = if a.divisions.is_empty() {
        kind.default_divisions()
    } else {
        a.divisions.clone()
    };
    let options = StudyOptions {
        norm: match a.norm {
            Norm::Spacetime => ErrorNorm::SpaceTimeMax,
            Norm::Final => ErrorNorm::FinalTime,
        },
        fixed_divisions: a.fixed,
    };
    let report = convergence_study_with(kind, &alphas, &divisions, options)?;
    emit(a.path.as_deref(), |w| match a.out {
        Format::Csv => write_report_csv(&report, w),
        Format::Json => write_json(&report, w),
    })
}

fn surface(a: &SurfaceArgs) -> Result<()> {
    let s = error_surface(a.alpha, a.m, a.n)?;
    emit(a.out.as_deref(), |w| write_surface_csv(&s, w))
}
