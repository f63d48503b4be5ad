//! Command-line front end: every subcommand delegates to one library
//! operation and emits a numeric table as CSV or JSON.

pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frozen_discord::capacity::{self, DEFAULT_HORIZON};
use frozen_discord::noise_kernel::OuKernel;
use frozen_discord::{
    beta_closed, beta_quadrature, beta_unscaled, contour_grid, dynamics_trace, mc_beta_estimate,
    non_markovianity, Error, OuNoiseParams, RescaledParams,
};

pub use table::{format_number, OutputTable};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "frozen-discord",
    version,
    about = "Dephasing under Ornstein-Uhlenbeck noise: channel variance, frozen discord, non-Markovianity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Channel variance β(t̃) from the closed form (columns: t, beta).
    Beta(BetaArgs),
    /// Correlation dynamics (columns: t, I, C, Q).
    Dynamics(DynamicsArgs),
    /// Transition time against detuning (columns: delta, t_transition).
    Transition(TransitionArgs),
    /// Quantum capacity curves, one column per detuning.
    Capacity(CapacityArgs),
    /// Non-Markovianity against detuning (columns: delta, N_Q).
    Nmark(NmarkArgs),
    /// Monte Carlo check of β against the closed form.
    #[command(name = "mc-validate")]
    McValidate(McArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TimeArgs {
    /// Last rescaled time sampled.
    #[arg(long = "t-max", default_value_t = 10.0)]
    t_max: f64,
    /// Rescaled time step.
    #[arg(long = "t-step", default_value_t = 0.01)]
    t_step: f64,
}

#[derive(Debug, Args)]
struct DeltaRange {
    #[arg(long = "delta-min")]
    delta_min: Option<f64>,
    #[arg(long = "delta-max")]
    delta_max: Option<f64>,
    #[arg(long = "delta-step")]
    delta_step: Option<f64>,
}

#[derive(Debug, Args)]
struct BetaArgs {
    /// Rescaled detuning δ̃.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    /// Rescaled coupling λ̃.
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[command(flatten)]
    time: TimeArgs,
    /// Also evaluate β by adaptive quadrature at this relative tolerance
    /// (adds a `beta_quadrature` column).
    #[arg(long)]
    tol: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct DynamicsArgs {
    /// Bell-diagonal mixing parameter.
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    c: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[command(flatten)]
    time: TimeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct TransitionArgs {
    #[arg(long, default_value_t = 0.1)]
    c: f64,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[command(flatten)]
    deltas: DeltaRange,
    /// Largest rescaled time searched for a crossing.
    #[arg(long, default_value_t = 1000.0)]
    horizon: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct CapacityArgs {
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// Detunings, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 5.0, 10.0, 15.0])]
    delta: Vec<f64>,
    #[command(flatten)]
    time: TimeArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct NmarkArgs {
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[command(flatten)]
    deltas: DeltaRange,
    #[arg(long, default_value_t = DEFAULT_HORIZON)]
    horizon: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct McArgs {
    /// Detuning δ (1/time).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    /// Coupling λ (1/time).
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// Environment correlation time t_E.
    #[arg(long = "t-env", default_value_t = 1.0)]
    t_env: f64,
    #[arg(long = "t-max", default_value_t = 2.0)]
    t_max: f64,
    #[arg(long = "t-step", default_value_t = 0.5)]
    t_step: f64,
    /// Path discretisation step; capped at t/50 per row.
    #[arg(long, default_value_t = 0.005)]
    dt: f64,
    #[arg(long, default_value_t = 20_000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numerical(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::QuadratureNonConvergence { .. } | Error::HorizonTooSmall { .. } => {
                CliError::Numerical(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// `0, step, 2·step, …` up to `max` (inclusive within rounding).
fn grid(name: &str, start: f64, max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !start.is_finite() || !max.is_finite() || max < start {
        return Err(usage(format!("{name}: need finite bounds with max ≥ min")));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(usage(format!("{name}: step must be positive")));
    }
    let n = ((max - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| start + step * i as f64).collect())
}

fn delta_grid(r: &DeltaRange, default: (f64, f64, f64)) -> Result<Vec<f64>, CliError> {
    grid(
        "delta",
        r.delta_min.unwrap_or(default.0),
        r.delta_max.unwrap_or(default.1),
        r.delta_step.unwrap_or(default.2),
    )
}

fn cmd_beta(a: &BetaArgs) -> Result<OutputTable, CliError> {
    let p = RescaledParams::new(a.lambda, a.delta)?;
    let times = grid("t", 0.0, a.time.t_max, a.time.t_step)?;
    let mut table = match a.tol {
        Some(_) => OutputTable::new(["t", "beta", "beta_quadrature"]),
        None => OutputTable::new(["t", "beta"]),
    };
    // In units of t_E the physical kernel has t_E = 1.
    let kernel = OuKernel(OuNoiseParams::new(a.lambda, a.delta, 1.0)?);
    for t in times {
        let mut row = vec![t, beta_closed(t, &p)];
        if let Some(tol) = a.tol {
            row.push(beta_quadrature(t, &kernel, p.delta_r(), tol)?);
        }
        table.push(row);
    }
    Ok(table)
}

fn cmd_dynamics(a: &DynamicsArgs) -> Result<OutputTable, CliError> {
    let p = RescaledParams::new(a.lambda, a.delta)?;
    let times = grid("t", 0.0, a.time.t_max, a.time.t_step)?;
    let mut table = OutputTable::new(["t", "I", "C", "Q"]);
    for s in dynamics_trace(a.c, &p, &times)? {
        table.push(vec![s.t_r, s.mutual_information, s.classical, s.discord]);
    }
    Ok(table)
}

fn cmd_transition(a: &TransitionArgs, stderr: &mut dyn Write) -> Result<OutputTable, CliError> {
    let deltas = delta_grid(&a.deltas, (0.0, 10.0, 1.0))?;
    let g = contour_grid(a.c, a.lambda, &deltas, a.horizon)?;
    let mut table = OutputTable::new(["delta", "t_transition"]);
    for (d, b) in g.delta_axis.iter().zip(&g.boundary) {
        match b {
            Some(t) => table.push(vec![*d, *t]),
            None => {
                let _ = writeln!(
                    stderr,
                    "warning: no transition for delta = {} within horizon {}",
                    format_number(*d),
                    format_number(a.horizon)
                );
            }
        }
    }
    if table.rows.is_empty() {
        return Err(CliError::Numerical(format!(
            "no transition within horizon {} for any requested delta",
            a.horizon
        )));
    }
    Ok(table)
}

fn cmd_capacity(a: &CapacityArgs) -> Result<OutputTable, CliError> {
    if a.delta.is_empty() {
        return Err(usage("capacity: at least one --delta value required"));
    }
    let times = grid("t", 0.0, a.time.t_max, a.time.t_step)?;
    let mut columns = vec!["t".to_string()];
    let mut curves = Vec::with_capacity(a.delta.len());
    for &d in &a.delta {
        let name = format!("Q_D_delta_{}", format_number(d));
        if columns.contains(&name) {
            return Err(usage(format!("capacity: duplicate delta {d}")));
        }
        columns.push(name);
        curves.push(capacity::capacity_curve(
            &RescaledParams::new(a.lambda, d)?,
            &times,
        )?);
    }
    let mut table = OutputTable::new(columns);
    for (i, &t) in times.iter().enumerate() {
        let mut row = vec![t];
        row.extend(curves.iter().map(|c| c.values[i]));
        table.push(row);
    }
    Ok(table)
}

fn cmd_nmark(a: &NmarkArgs) -> Result<OutputTable, CliError> {
    let deltas = delta_grid(&a.deltas, (1.0, 11.0, 0.1))?;
    let mut table = OutputTable::new(["delta", "N_Q"]);
    for d in deltas {
        let p = RescaledParams::new(a.lambda, d)?;
        table.push(vec![d, non_markovianity(&p, a.horizon)?]);
    }
    Ok(table)
}

fn cmd_mc(a: &McArgs) -> Result<OutputTable, CliError> {
    let p = OuNoiseParams::new(a.lambda, a.delta, a.t_env)?;
    let times = grid("t", a.t_step, a.t_max, a.t_step)?;
    let mut table = OutputTable::new(["t", "beta_closed", "mc_mean", "mc_stderr", "z_score"]);
    for t in times {
        let est = mc_beta_estimate(t, &p, a.dt.min(t / 50.0), a.samples, a.seed)?;
        let exact = beta_unscaled(t, &p);
        table.push(vec![
            t,
            exact,
            est.mean,
            est.std_error,
            (est.mean - exact) / est.std_error,
        ]);
    }
    Ok(table)
}

fn execute(cli: &Cli, stderr: &mut dyn Write) -> Result<(String, Option<PathBuf>), CliError> {
    let (table, out) = match &cli.command {
        Command::Beta(a) => (cmd_beta(a)?, &a.out),
        Command::Dynamics(a) => (cmd_dynamics(a)?, &a.out),
        Command::Transition(a) => (cmd_transition(a, stderr)?, &a.out),
        Command::Capacity(a) => (cmd_capacity(a)?, &a.out),
        Command::Nmark(a) => (cmd_nmark(a)?, &a.out),
        Command::McValidate(a) => (cmd_mc(a)?, &a.out),
    };
    if !table.is_finite() {
        return Err(CliError::Numerical("non-finite value in output".into()));
    }
    let text = match out.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    Ok((text, out.output.clone()))
}

/// Parses `argv`, runs the subcommand and writes its table. Returns the
/// process exit code: 0 success, 2 usage error, 3 numerical failure.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                return EXIT_USAGE;
            }
            let _ = stdout.write_all(rendered.as_bytes());
            return EXIT_OK;
        }
    };
    let written = execute(&cli, stderr).and_then(|(text, path)| match path {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    });
    match written {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) | Err(CliError::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Numerical(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_NUMERICAL
        }
    }
}
