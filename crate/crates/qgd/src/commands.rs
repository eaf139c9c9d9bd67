//! The `qgd` command line.

use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgd_core::experiments::{classify_run, riemann_initial, SweepPlan};
use qgd_core::schemes::{run_simulation, RunStatus};
use qgd_core::spectral::{
    assess, conditions::SUFFICIENT_KAPPA, optimal_alpha, LinearizedParams, DEFAULT_SAMPLES,
};
use qgd_core::Regularization;

use crate::config::{ConfigError, Format, RunConfig};
use crate::output::{
    curves_csv, diagnostics_csv, region_csv, snapshot_csv, transition_report, verdict_csv,
    write_atomic,
};
use crate::svg::{profile_svg, region_svg};
use crate::sweep::{resolve_workers, sweep_parallel};
use crate::verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_OVERFLOW: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] qgd_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "qgd",
    version,
    about = "Regularized barotropic gas dynamics: solve, analyze stability, sweep"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one Riemann problem and write profiles and diagnostics.
    Solve(ConfigArgs),
    /// Closed-form stability verdicts with oracle cross-check.
    Stability(StabilityArgs),
    /// Classify runs over an (α, β) grid.
    Sweep(SweepArgs),
    /// Run the self-check suites.
    Verify(ConfigArgs),
}

#[derive(Args, Debug, Clone, Default)]
pub struct ConfigArgs {
    /// JSON config; the built-in paper configuration when omitted.
    #[arg(short, long)]
    pub config: Option<PathBuf>,
    /// Override a config key, e.g. `--set scheme.alpha=0.4`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
    /// Output directory (same as `--set output.directory=DIR`).
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    /// Worker threads; overrides QGD_WORKERS and the config.
    #[arg(short, long)]
    pub workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    FullQgd,
    SimplifiedQhd,
}

impl From<VariantArg> for Regularization {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::FullQgd => Regularization::FullQgd,
            VariantArg::SimplifiedQhd => Regularization::SimplifiedQhd,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("viscosity").required(true).args(["kappa", "alpha_s"])))]
pub struct StabilityArgs {
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub alpha: Vec<f64>,
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub beta: Vec<f64>,
    /// Effective viscosity κ.
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Viscosity factor α_s; κ follows from the variant.
    #[arg(long)]
    pub alpha_s: Option<f64>,
    #[arg(long, value_enum, default_value = "full-qgd")]
    pub variant: VariantArg,
    /// ξ samples for the oracle.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Also write the verdict table as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Stability(a) => cmd_stability(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Verify(a) => cmd_verify(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

pub fn load_config(args: &ConfigArgs) -> Result<RunConfig, CliError> {
    let mut overrides = args.overrides.clone();
    if let Some(out) = &args.out {
        overrides.push(format!(
            "output.directory={}",
            serde_json::Value::String(out.display().to_string())
        ));
    }
    Ok(match &args.config {
        Some(path) => RunConfig::load(path, &overrides)?,
        None => RunConfig::default_paper(&overrides)?,
    })
}

fn write(path: &Path, bytes: io::Result<Vec<u8>>) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    write_atomic(path, &bytes.map_err(io_err)?).map_err(io_err)
}

pub fn cmd_solve(args: &ConfigArgs) -> Result<u8, CliError> {
    let cfg = load_config(args)?;
    let gas = cfg.gas_model()?;
    let setup = cfg.setup()?;
    let mesh = cfg.mesh()?;
    let scheme = cfg.scheme_config(&gas)?;
    let initial = riemann_initial(&setup, &mesh)?;
    let traj = run_simulation(
        &initial,
        &mesh,
        &gas,
        &scheme,
        setup.t_end,
        cfg.experiment.record_every,
    )?;
    let verdict = classify_run(&traj, &setup.thresholds(&cfg.rule()))?;

    let dir = &cfg.output.directory;
    if cfg.output.formats.contains(&Format::Csv) {
        for (i, s) in traj.snapshots.iter().enumerate() {
            write(
                &dir.join(format!("snapshot_{i:04}.csv")),
                snapshot_csv(&mesh, s),
            )?;
        }
        write(&dir.join("diagnostics.csv"), diagnostics_csv(&traj))?;
    }
    let last = traj
        .final_state()
        .expect("trajectory has the initial state");
    if cfg.output.formats.contains(&Format::Svg) {
        let title = format!(
            "{} scheme, α = {}, β = {}, t = {:.4}",
            scheme.scheme.name(),
            scheme.alpha,
            scheme.beta,
            last.t
        );
        let svg = profile_svg(
            &mesh.nodes(),
            &[("t = 0", &initial), ("final", last)],
            &title,
        );
        write(&dir.join("profile.svg"), Ok(svg.into_bytes()))?;
    }
    let summary = serde_json::json!({
        "classification": verdict.classification.name(),
        "oscillation_score": verdict.oscillation_score,
        "completed": verdict.completed,
        "steps": traj.steps,
        "t": last.t,
        "c_ref": scheme.c_ref,
        "dt": scheme.time_step(mesh.h),
    });
    write(
        &dir.join("summary.json"),
        Ok(serde_json::to_vec_pretty(&summary).expect("json value")),
    )?;

    println!(
        "{}: {} steps to t = {:.6}, score {:.4}, output in {}",
        verdict.classification.name(),
        traj.steps,
        last.t,
        verdict.oscillation_score,
        dir.display()
    );
    if let RunStatus::Overflow { step, t, cause } = &traj.status {
        println!("overflow at step {step} (t = {t:.6}): {cause}");
        return Ok(EXIT_OVERFLOW);
    }
    Ok(EXIT_OK)
}

pub fn cmd_stability(args: &StabilityArgs) -> Result<u8, CliError> {
    let variant: Regularization = args.variant.into();
    let kappa = match (args.kappa, args.alpha_s) {
        (Some(k), _) => k,
        (None, Some(a)) => variant.kappa(a),
        (None, None) => {
            return Err(CliError::Invalid(
                "one of --kappa, --alpha-s is required".into(),
            ))
        }
    };
    let sufficient = variant == Regularization::FullQgd && (kappa - SUFFICIENT_KAPPA).abs() < 1e-12;
    let mut rows = Vec::new();
    for &alpha in &args.alpha {
        for &beta in &args.beta {
            let p = LinearizedParams::new(alpha, beta, kappa, variant)?;
            rows.push((
                alpha,
                beta,
                kappa,
                variant,
                assess(&p, args.samples, sufficient)?,
            ));
        }
    }
    println!(
        "{:>7} {:>7} {:>7} {:>15} {:>9} {:>15} {:>9} {:>15} {:>12} {:>12}",
        "alpha",
        "beta",
        "kappa",
        "necessary",
        "beta_nec",
        "criterion",
        "beta_crit",
        "sufficient",
        "oracle_rho",
        "oracle_gram"
    );
    let mark = |ok: bool| if ok { "stable" } else { "unstable" };
    for (alpha, beta, kappa, _, v) in &rows {
        println!(
            "{alpha:>7} {beta:>7} {kappa:>7.4} {:>15} {:>9.5} {:>15} {:>9.5} {:>15} {:>12.9} {:>12.9}",
            mark(v.necessary_ok),
            v.necessary_threshold,
            mark(v.criterion_ok),
            v.criterion_threshold,
            v.sufficient_ok.map_or("n/a", mark),
            v.oracle_spectral_radius,
            v.oracle_gram_max
        );
    }
    match optimal_alpha(kappa, variant)? {
        Some((a, b)) => println!("optimal alpha* = {a:.6}, beta_max(alpha*) = {b:.6}"),
        None => {
            println!("no stable beta: the criterion fails for every beta > 0 at kappa = {kappa}")
        }
    }
    if let Some(path) = &args.csv {
        write(path, verdict_csv(&rows))?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<u8, CliError> {
    let cfg = load_config(&args.config)?;
    let gas = cfg.gas_model()?;
    let setup = cfg.setup()?;
    let settings = cfg.sweep_settings();
    let plan = SweepPlan::new(&cfg.sweep.alphas, &cfg.beta_grid(), &settings)?;
    let workers = args
        .workers
        .filter(|&w| w > 0)
        .unwrap_or_else(|| resolve_workers(cfg.sweep.workers));
    let map = sweep_parallel(&plan, &setup, &gas, &settings, workers)?;

    let dir = &cfg.output.directory;
    if cfg.output.formats.contains(&Format::Csv) {
        write(&dir.join("region.csv"), region_csv(&map))?;
        write(&dir.join("curves.csv"), curves_csv(&map))?;
    }
    if cfg.output.formats.contains(&Format::Svg) {
        let title = format!("{} scheme, κ = {:.4}", map.scheme.name(), map.kappa);
        write(
            &dir.join("region.svg"),
            Ok(region_svg(&map, &title).into_bytes()),
        )?;
    }
    print!("{}", transition_report(&map));
    println!(
        "{} cells on {workers} workers, output in {}",
        plan.len(),
        dir.display()
    );
    Ok(EXIT_OK)
}

/// Seed of the random Lemma 1 points.
pub const VERIFY_SEED: u64 = 20_140_527;

pub fn cmd_verify(args: &ConfigArgs) -> Result<u8, CliError> {
    let cfg = load_config(args)?;
    let gas = cfg.gas_model()?;
    let suites = [
        verify::oracle_equivalence(DEFAULT_SAMPLES),
        verify::lemma1(VERIFY_SEED, 128, 200),
        verify::conservation(&gas),
    ];
    let mut all = true;
    for s in &suites {
        let ok = s.passed();
        all &= ok;
        println!(
            "{} {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            s.name,
            s.checked
        );
        for f in s.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_INVALID })
}
