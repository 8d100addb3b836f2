//! `vdw` — dispersion-energy sweeps for a pair of harmonically bound
//! dipoles: London and all-orders instantaneous energies, the retarded
//! London/Casimir-Polder crossover with three independent routes, a
//! perturbation-series engine, figure output, and a self-check suite.
//!
//! Data goes to stdout (or `--out`); diagnostics go to stderr. Exit codes:
//! 0 success, 1 selfcheck failure, 2 configuration error, 3 numerical
//! failure.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vdw_core::specfun::QuadratureSpec;
use vdw_core::ModelParams;

use vdw_cli::error::CliError;
use vdw_cli::sweeps::{self, Grid};
use vdw_cli::{selfcheck, svg};

#[derive(Parser)]
#[command(
    name = "vdw",
    about = "Dispersion energies of two harmonically bound dipoles, from the London regime to the Casimir-Polder regime",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Oscillator charge q
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    /// Oscillator mass m
    #[arg(long, default_value_t = 1.0)]
    m: f64,
    /// Oscillator frequency Omega
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Reduced Planck constant
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Speed of light
    #[arg(long, default_value_t = 1.0)]
    c: f64,
}

impl ParamArgs {
    fn build(&self) -> Result<ModelParams, CliError> {
        Ok(ModelParams::new(self.hbar, self.c, self.m, self.q, self.omega)?)
    }
}

#[derive(Args, Debug)]
struct TolArgs {
    /// Relative quadrature tolerance
    #[arg(long = "rel-tol", default_value_t = 1e-12)]
    rel_tol: f64,
    /// Absolute quadrature tolerance
    #[arg(long = "abs-tol", default_value_t = 0.0)]
    abs_tol: f64,
    /// Adaptive subdivision budget
    #[arg(long = "max-subdivisions", default_value_t = 20_000)]
    max_subdivisions: usize,
}

impl TolArgs {
    fn build(&self) -> Result<QuadratureSpec, CliError> {
        Ok(QuadratureSpec::new(self.abs_tol, self.rel_tol, self.max_subdivisions)?)
    }
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// London energy vs the all-orders instantaneous energy over a coupling grid
    London {
        #[arg(long, default_value_t = 0.01)]
        gmin: f64,
        #[arg(long, default_value_t = 0.9)]
        gmax: f64,
        #[arg(long, default_value_t = 25)]
        points: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// All-orders spectral energy next to the normal-mode oracle
    Instantaneous {
        #[arg(long, default_value_t = 0.01)]
        gmin: f64,
        #[arg(long, default_value_t = 0.45)]
        gmax: f64,
        #[arg(long, default_value_t = 23)]
        points: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Retarded energy through all three routes over a separation grid
    Retarded {
        #[arg(long, default_value_t = 1e-2)]
        rmin: f64,
        #[arg(long, default_value_t = 1e2)]
        rmax: f64,
        #[arg(long, default_value_t = 25)]
        points: usize,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Crossover curve and logarithmic slope, as CSV or a two-panel SVG figure
    Crossover {
        #[arg(long, default_value_t = 1e-2)]
        rmin: f64,
        #[arg(long, default_value_t = 1e2)]
        rmax: f64,
        #[arg(long, default_value_t = 97)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Perturbation-series coefficients for the three-channel pair
    Kato {
        /// Dimensionless coupling g
        #[arg(long, default_value_t = 0.1)]
        g: f64,
        /// Occupation truncation per oscillator
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Highest perturbation order (at most 6)
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the verification suite; exits 0 only if every criterion passes
    Selfcheck,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap exits 2 on usage errors and 0 for --help/--version
            err.exit();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            if let Some(msg) = err.message() {
                eprintln!("error: {msg}");
            }
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::London { gmin, gmax, points, tol, out } => {
            let table = sweeps::london_sweep(&Grid::new(gmin, gmax, points)?, &tol.build()?)?;
            emit(&out, table.to_csv())
        }
        Command::Instantaneous { gmin, gmax, points, tol, out } => {
            let table =
                sweeps::instantaneous_sweep(&Grid::new(gmin, gmax, points)?, &tol.build()?)?;
            emit(&out, table.to_csv())
        }
        Command::Retarded { rmin, rmax, points, tol, params, out } => {
            let table = sweeps::retarded_sweep(
                &Grid::new(rmin, rmax, points)?,
                &tol.build()?,
                &params.build()?,
            )?;
            emit(&out, table.to_csv())
        }
        Command::Crossover { rmin, rmax, points, format, out } => {
            let grid = Grid::new(rmin, rmax, points)?;
            match format {
                Format::Csv => emit(&out, sweeps::crossover_sweep(&grid)?.to_csv()),
                Format::Svg => {
                    if points < 8 {
                        return Err(CliError::config(
                            "the SVG figure needs a grid of at least 8 points",
                        ));
                    }
                    let data = sweeps::crossover_data(&grid)?;
                    emit(&out, svg::render_crossover(&data))
                }
            }
        }
        Command::Kato { g, nmax, order, out } => {
            let table = sweeps::kato_sweep(g, nmax, order)?;
            emit(&out, table.to_csv())
        }
        Command::Selfcheck => {
            let results = selfcheck::run_all(&selfcheck::Anchors::default());
            let (text, all_passed) = selfcheck::report(&results);
            print!("{text}");
            if all_passed {
                Ok(())
            } else {
                Err(CliError::SelfcheckFailed)
            }
        }
    }
}

fn emit(out: &OutArgs, payload: String) -> Result<(), CliError> {
    match &out.out {
        None => std::io::stdout()
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::config(format!("cannot write to stdout: {e}"))),
        Some(path) => fs::write(path, payload)
            .map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display()))),
    }
}
