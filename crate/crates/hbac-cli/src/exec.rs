//! Command execution: run the requested computation and emit files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use hbac_core::audit::{audit_grid, audit_low_damping_probes, DEFAULT_CYCLES};
use hbac_core::closedform::optimal_compression_angle;
use hbac_core::engine::{reduced_path_polarizations, run_cycles, CycleRecord};
use hbac_core::expdata::{analyze, parse_series};
use hbac_core::CompressionVariant;

use crate::args::{
    flag_error, AnalyzeArgs, AuditArgs, Cli, Command, OptimizeArgs, OutputArgs, OutputFormat,
    SimulateArgs, SweepArgs,
};
use crate::output;

/// Execution failure with a process exit code: 2 for argument/validation
/// problems, 1 for runtime and I/O errors.
#[derive(Debug)]
pub struct ExecError {
    pub message: String,
    pub code: i32,
}

impl ExecError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 1,
        }
    }
}

impl std::fmt::Display for ExecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

pub fn execute(cli: Cli) -> Result<(), ExecError> {
    match cli.command {
        Command::Simulate(args) => simulate(args),
        Command::Sweep(args) => sweep(args),
        Command::OptimizeTheta(args) => optimize_theta(args),
        Command::Audit(args) => audit(args),
        Command::Analyze(args) => analyze_cmd(args),
    }
}

fn simulate(args: SimulateArgs) -> Result<(), ExecError> {
    let config = args.physics.to_config().map_err(ExecError::usage)?;
    let records = run_cycles(&config).map_err(|e| ExecError::runtime(e.to_string()))?;
    let body = match args.output.format {
        OutputFormat::Csv => output::records_csv(&records),
        OutputFormat::Json => pretty_json(&serde_json::json!({
            "gamma": config.gamma,
            "theta": config.theta,
            "eps1_0": config.eps1_0,
            "eps2_0": config.eps2_0,
            "eps3_0": config.eps3_0,
            "cycles": config.cycles,
            "variant": config.variant.name(),
            "records": records.iter().map(output::record_json).collect::<Vec<_>>(),
        })),
    };
    emit(&args.output, &body, |csv_name| {
        output::simulate_plot_script(csv_name)
    })
}

fn sweep(args: SweepArgs) -> Result<(), ExecError> {
    if args.grid_gamma.is_empty() || args.grid_theta.is_empty() {
        return Err(ExecError::usage(
            "--grid-gamma and --grid-theta must be non-empty",
        ));
    }
    // Validate every grid point up front so errors name the flag.
    let gammas = sorted_dedup(&args.grid_gamma);
    let thetas = sorted_dedup(&args.grid_theta);
    let mut points = Vec::new();
    for &gamma in &gammas {
        for &theta in &thetas {
            points.push((gamma, theta));
        }
    }
    let base = &args.physics;
    let configs = points
        .iter()
        .map(|&(gamma, theta)| {
            hbac_core::engine::RefrigeratorConfig::new(
                gamma,
                theta,
                base.eps1,
                base.eps2,
                base.eps3,
                base.cycles,
                base.variant.into(),
            )
            .map_err(|e| ExecError::usage(format!("grid point (gamma={gamma}, theta={theta}): {}", flag_error(e))))
        })
        .collect::<Result<Vec<_>, _>>()?;

    // Grid points run in parallel (capped by HBAC_THREADS); the results are
    // collected in grid order, so output bytes do not depend on scheduling.
    let pool = thread_pool()?;
    let blocks: Vec<((f64, f64), Vec<CycleRecord>)> = pool.install(|| {
        configs
            .par_iter()
            .map(|config| {
                run_cycles(config)
                    .map(|records| ((config.gamma, config.theta), records))
                    .map_err(|e| ExecError::runtime(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;

    let body = match args.output.format {
        OutputFormat::Csv => output::sweep_csv(&blocks),
        OutputFormat::Json => pretty_json(&output::sweep_json(&blocks)),
    };
    emit(&args.output, &body, |csv_name| {
        output::sweep_plot_script(csv_name, &points, base.cycles)
    })
}

/// Step of the confirmation sweep over theta.
const THETA_SWEEP_STEP: f64 = 1e-4;

fn optimize_theta(args: OptimizeArgs) -> Result<(), ExecError> {
    let max_n = args.max_n;
    let (e1, e2, e3) = (args.eps1, args.eps2, args.eps3);
    // Validate via the angle routine so ordering violations name the flags.
    optimal_compression_angle(0, e1, e2, e3).map_err(|e| ExecError::usage(flag_error(e)))?;

    // Numeric cooling power per cycle at zero damping through the
    // target-only propagation path.
    let cooling_series = |theta: f64| -> Result<Vec<f64>, ExecError> {
        let eps = reduced_path_polarizations(
            0.0,
            theta,
            e1,
            e2,
            e3,
            CompressionVariant::RandomUnitary,
            max_n + 2,
        )
        .map_err(|e| ExecError::runtime(e.to_string()))?;
        Ok((0..=max_n)
            .map(|n| -eps[n + 2] + 2.0 * eps[n + 1] - eps[n])
            .collect())
    };

    let steps = (std::f64::consts::PI / THETA_SWEEP_STEP).floor() as usize;
    let pool = thread_pool()?;
    let sweep: Vec<(f64, Vec<f64>)> = pool.install(|| {
        (0..=steps)
            .into_par_iter()
            .map(|k| {
                let theta = k as f64 * THETA_SWEEP_STEP;
                cooling_series(theta).map(|j| (theta, j))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let theta_opt =
            optimal_compression_angle(n, e1, e2, e3).map_err(|e| ExecError::usage(flag_error(e)))?;
        let j_opt = cooling_series(theta_opt)?[n];
        // First strict maximum in theta order keeps the argmax deterministic.
        let (mut theta_sweep, mut j_sweep) = (0.0, f64::NEG_INFINITY);
        for (theta, j) in &sweep {
            if j[n] > j_sweep {
                j_sweep = j[n];
                theta_sweep = *theta;
            }
        }
        rows.push(output::OptimizeRow {
            n,
            theta_opt,
            j_opt,
            theta_sweep,
            j_sweep,
        });
    }

    let body = match args.output.format {
        OutputFormat::Csv => output::optimize_csv(&rows),
        OutputFormat::Json => pretty_json(&output::optimize_json(&rows)),
    };
    emit(&args.output, &body, |_| String::new())
}

fn audit(args: AuditArgs) -> Result<(), ExecError> {
    let cycles: Vec<usize> = match args.max_n {
        Some(max) => (0..=max).collect(),
        None => DEFAULT_CYCLES.to_vec(),
    };
    let gammas = sorted_dedup(&args.grid_gamma);
    let thetas = sorted_dedup(&args.grid_theta);
    if gammas.is_empty() || thetas.is_empty() {
        return Err(ExecError::usage(
            "--grid-gamma and --grid-theta must be non-empty",
        ));
    }
    let mut rows = audit_grid(&gammas, &thetas, args.eps1, args.eps2, args.eps3, &cycles)
        .map_err(|e| ExecError::usage(flag_error(e)))?;
    // Low-damping probes need the ordering eps2, eps3 >= eps1 >= 0.
    if args.eps1 >= 0.0 && args.eps1 <= args.eps2.min(args.eps3) {
        rows.extend(
            audit_low_damping_probes(args.eps1, args.eps2, args.eps3)
                .map_err(|e| ExecError::runtime(e.to_string()))?,
        );
    }
    let body = match args.output.format {
        OutputFormat::Csv => output::audit_csv(&rows),
        OutputFormat::Json => pretty_json(&output::audit_json(&rows)),
    };
    // Discrepancies are findings, not failures: exit status stays 0.
    emit(&args.output, &body, |_| String::new())
}

fn analyze_cmd(args: AnalyzeArgs) -> Result<(), ExecError> {
    let text = fs::read_to_string(&args.data).map_err(|e| {
        ExecError::runtime(format!("cannot read --data file {}: {e}", args.data.display()))
    })?;
    let series = parse_series(&text)
        .map_err(|e| ExecError::usage(format!("{}: {e}", args.data.display())))?;
    let records = analyze(&series).map_err(|e| ExecError::runtime(e.to_string()))?;
    let body = match args.output.format {
        OutputFormat::Csv => output::analyze_csv(&records),
        OutputFormat::Json => pretty_json(&output::analyze_json(&records)),
    };
    emit(&args.output, &body, |csv_name| {
        output::analyze_plot_script(csv_name)
    })
}

fn pretty_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn sorted_dedup(values: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite grid values"));
    v.dedup();
    v
}

/// Rayon pool capped by HBAC_THREADS (machine parallelism by default).
fn thread_pool() -> Result<rayon::ThreadPool, ExecError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var("HBAC_THREADS") {
        let n: usize = raw.parse().map_err(|_| {
            ExecError::usage(format!("HBAC_THREADS must be a positive integer (got `{raw}`)"))
        })?;
        if n == 0 {
            return Err(ExecError::usage(
                "HBAC_THREADS must be a positive integer (got `0`)",
            ));
        }
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| ExecError::runtime(format!("cannot build thread pool: {e}")))
}

/// Write the body to --out (or stdout) and, if requested, the plot script to
/// `<out>.gp`.
fn emit(
    out_args: &OutputArgs,
    body: &str,
    plot_script: impl Fn(&str) -> String,
) -> Result<(), ExecError> {
    match (&out_args.out, out_args.plot) {
        (None, true) => Err(ExecError::usage("--plot requires --out")),
        (None, false) => {
            std::io::stdout()
                .write_all(body.as_bytes())
                .map_err(|e| ExecError::runtime(format!("cannot write to stdout: {e}")))?;
            Ok(())
        }
        (Some(path), plot) => {
            let script = if plot {
                if out_args.format != OutputFormat::Csv {
                    return Err(ExecError::usage("--plot requires --format csv"));
                }
                let csv_name = path
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                let script = plot_script(&csv_name);
                if script.is_empty() {
                    return Err(ExecError::usage(
                        "--plot is not available for this subcommand",
                    ));
                }
                Some(script)
            } else {
                None
            };
            write_file(path, body)?;
            if let Some(script) = script {
                let mut plot_path: PathBuf = path.clone().into_os_string().into();
                plot_path.as_mut_os_string().push(".gp");
                write_file(&plot_path, &script)?;
            }
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), ExecError> {
    fs::write(path, body)
        .map_err(|e| ExecError::runtime(format!("cannot write {}: {e}", path.display())))
}
