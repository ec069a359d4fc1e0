//! Command-line front end: evaluate, solve and reproduce accuracy tables.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported on stderr as
//! `error[Code]: message`), 2 on a usage error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use neville::harness::{
    render_rms_grid, render_spot_checks, render_stats, run_polynomial_experiment,
    run_sin_experiment, ExperimentConfig,
};
use neville::{
    find_extremum, load_table, newton_root, Domain, Error, SolverSettings, TabulatedFunction,
    WindowSpec,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "neville",
    version,
    about = "Polynomial interpolation with derivatives over tabulated functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interpolated value and derivatives at one abscissa.
    Eval(EvalArgs),
    /// Newton-Raphson for the abscissa where the interpolant reaches a target.
    Solve(SolveArgs),
    /// Newton-Raphson on the first derivative for a local extremum.
    Extremum(ExtremumArgs),
    /// Re-run one of the accuracy experiments.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Two-column table file, or `-` for stdin.
    #[arg(long, value_name = "PATH")]
    table: PathBuf,
    /// Degree of the local interpolating polynomial.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    degree: u32,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    x: f64,
    /// Highest derivative order to report.
    #[arg(long, default_value_t = 0)]
    order: u32,
    /// Refuse abscissas outside the table range.
    #[arg(long)]
    strict_domain: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    target: f64,
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    x0: f64,
    /// Residual tolerance.
    #[arg(long, value_name = "REAL", value_parser = positive_real)]
    tol: Option<f64>,
    #[arg(long, value_name = "INT", value_parser = clap::value_parser!(u32).range(1..))]
    max_iter: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ExtremumArgs {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    x0: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Experiment {
    Table1,
    Table2,
    Table3,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    experiment: Experiment,
    /// Number of uniform random abscissas.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("must be a positive finite number".into())
    }
}

/// Output of a successful command: text for stdout and optional notes for stderr.
struct Output {
    stdout: String,
    stderr: String,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn read_table<R: BufRead>(path: &PathBuf, stdin: R) -> Result<TabulatedFunction, Error> {
    if path.as_os_str() == "-" {
        return load_table(stdin);
    }
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(load_table(BufReader::new(file))?.with_name(path.display().to_string()))
}

#[derive(Serialize)]
struct EvalReport {
    x: f64,
    degree: usize,
    window: WindowSpec,
    values: Vec<f64>,
}

fn eval<R: BufRead>(args: &EvalArgs, stdin: R) -> Result<Output, Error> {
    let table = read_table(&args.table.table, stdin)?;
    let degree = args.table.degree as usize;
    let domain = if args.strict_domain {
        Domain::Strict
    } else {
        Domain::Extrapolate
    };
    let stack = table.interpolate_at(args.x, degree, args.order as usize, domain)?;
    let window = table.locate_window(args.x, degree)?;
    if args.json {
        return Ok(to_json(&EvalReport {
            x: args.x,
            degree,
            window,
            values: stack.values,
        })
        .into());
    }
    let mut out = String::new();
    let range = window.range();
    let _ = writeln!(
        out,
        "x = {}  degree = {}  window = [{}, {}]",
        args.x,
        degree,
        range.start,
        range.end - 1
    );
    for (n, v) in stack.values.iter().enumerate() {
        let label = if n == 0 {
            "P(x)".to_string()
        } else {
            format!("P^{n}(x)")
        };
        let _ = writeln!(out, "{label:<8} = {v}");
    }
    Ok(out.into())
}

fn solve<R: BufRead>(args: &SolveArgs, stdin: R) -> Result<Output, Error> {
    let table = read_table(&args.table.table, stdin)?;
    let mut settings = SolverSettings::for_table(&table);
    if let Some(tol) = args.tol {
        settings.tol_residual = tol;
    }
    if let Some(max_iter) = args.max_iter {
        settings.max_iter = max_iter as usize;
    }
    let r = newton_root(
        &table,
        args.table.degree as usize,
        args.target,
        args.x0,
        &settings,
    )?;
    if args.json {
        return Ok(to_json(&r).into());
    }
    Ok(format!(
        "root x = {}\nresidual = {:e}\niterations = {}\nconverged = {}\n",
        r.x, r.residual, r.iterations, r.converged
    )
    .into())
}

fn extremum<R: BufRead>(args: &ExtremumArgs, stdin: R) -> Result<Output, Error> {
    let table = read_table(&args.table.table, stdin)?;
    let settings = SolverSettings::for_table(&table);
    let e = find_extremum(&table, args.table.degree as usize, args.x0, &settings)?;
    if args.json {
        return Ok(to_json(&e).into());
    }
    Ok(format!(
        "{} at x = {}\nvalue = {}\niterations = {}\nconverged = {}\n",
        e.kind, e.x, e.value, e.iterations, e.converged
    )
    .into())
}

fn reproduce(args: &ReproduceArgs) -> Result<Output, Error> {
    let samples = args.samples as usize;
    let report = match args.experiment {
        Experiment::Table1 | Experiment::Table2 => run_polynomial_experiment(
            &ExperimentConfig::polynomial()
                .with_seed(args.seed)
                .with_samples(samples),
        )?,
        Experiment::Table3 => run_sin_experiment(
            &ExperimentConfig::sin()
                .with_seed(args.seed)
                .with_samples(samples),
        )?,
    };
    let stdout = if args.json {
        to_json(&report)
    } else {
        match args.experiment {
            Experiment::Table1 => render_spot_checks(&report),
            Experiment::Table2 => render_stats(&report),
            Experiment::Table3 => render_rms_grid(&report),
        }
    };
    Ok(Output {
        stdout,
        stderr: format!("wall time: {:.3} s\n", report.wall_time.as_secs_f64()),
    })
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T, R, W, E>(argv: I, stdin: R, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let mut text = e.render().to_string();
            return if e.use_stderr() {
                if !text.contains("Usage:") {
                    text.push_str(&format!("\n{}\n", Cli::command().render_usage()));
                }
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Eval(args) => eval(args, stdin),
        Command::Solve(args) => solve(args, stdin),
        Command::Extremum(args) => extremum(args, stdin),
        Command::Reproduce(args) => reproduce(args),
    };
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stderr.write_all(out.stderr.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error[{}]: {e}", e.code());
            EXIT_DOMAIN
        }
    }
}
