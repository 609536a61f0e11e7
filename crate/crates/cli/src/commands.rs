//! The learn / sweep-dt / validate commands, exposed as library functions so
//! tests can drive them directly.

use crate::args::{LearnArgs, Overrides, SweepDtArgs, ValidateArgs};
use crate::output::{
    io_err, read_json, write_dt_sweep, write_json, write_loss_curves, DtSweepRow, LearnArtifacts,
    ResultFile, ThetaFile,
};
use crate::CliError;
use serde::Serialize;
use std::path::{Path, PathBuf};
use vqpt_core::ansatz::Ansatz;
use vqpt_core::config::{ExperimentConfig, TargetSpec};
use vqpt_core::dataset::{make_dataset, DatasetRole};
use vqpt_core::seeding::{derive, rng_from_seed, Purpose};
use vqpt_core::training::{
    accuracy, build_target, phase_aligned_similarity, run_experiment, similarity,
};
use vqpt_core::unitary::circuit_to_unitary;

/// Load a config file and fold in command-line overrides.
pub fn load_config(path: &Path, overrides: &Overrides) -> Result<ExperimentConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let mut config: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    overrides.apply(&mut config)?;
    config.validate().map_err(|e| CliError::Config {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(config)
}

fn output_dir(config: &ExperimentConfig) -> PathBuf {
    PathBuf::from(config.output_dir.as_deref().unwrap_or("out"))
}

/// Run a closure on a rayon pool capped by `VQPT_THREADS` when set.
pub fn with_thread_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match std::env::var("VQPT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(k) if k >= 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::Runtime(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

/// Run the configured experiment and write `result.json`,
/// `loss_curves.csv`, and `theta_best.json`.
pub fn run_learn(config: &ExperimentConfig) -> Result<(ResultFile, LearnArtifacts), CliError> {
    config.validate()?;
    let result = with_thread_pool(|| run_experiment(config))??;

    let dir = output_dir(config);
    std::fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;

    let result_file = ResultFile::new(config, &result);
    let artifacts = LearnArtifacts {
        result_path: dir.join("result.json"),
        loss_curves_path: dir.join("loss_curves.csv"),
        theta_path: dir.join("theta_best.json"),
        output_dir: dir,
    };
    write_json(&artifacts.result_path, &result_file)?;
    write_loss_curves(&artifacts.loss_curves_path, &result_file.trials)?;

    let ansatz = Ansatz::build_with_pattern(config.qubits, config.depth, config.pattern)?;
    let theta_file = ThetaFile {
        ansatz: ansatz.description(),
        theta: result.best().theta_final.clone(),
    };
    write_json(&artifacts.theta_path, &theta_file)?;

    eprintln!(
        "learn: {} trials, best similarity {:.4} (max {:.4}); wrote {}",
        result.trials.len(),
        result.best().similarity.unwrap_or(f64::NAN),
        result.similarity_max,
        artifacts.output_dir.display()
    );
    Ok((result_file, artifacts))
}

pub fn cmd_learn(args: &LearnArgs) -> Result<(ResultFile, LearnArtifacts), CliError> {
    let config = load_config(&args.config_path, &args.overrides)?;
    run_learn(&config)
}

/// One experiment per dt value; emits `dt_sweep.csv`.
pub fn run_sweep_dt(
    config: &ExperimentConfig,
    dts: &[f64],
) -> Result<(Vec<DtSweepRow>, PathBuf), CliError> {
    let TargetSpec::Xxz(base) = config.target else {
        return Err(CliError::Config {
            path: "<config>".into(),
            message: "sweep-dt needs an xxz target".into(),
        });
    };
    let mut rows = Vec::with_capacity(dts.len());
    for &dt in dts {
        let mut cfg = config.clone();
        cfg.target = TargetSpec::Xxz(vqpt_core::targets::XxzParams { dt, ..base });
        cfg.validate()?;
        let result = with_thread_pool(|| run_experiment(&cfg))??;
        eprintln!(
            "sweep-dt: dt={dt} max={:.4} mean={:.4}",
            result.similarity_max, result.similarity_mean
        );
        rows.push(DtSweepRow {
            dt,
            max_similarity: result.similarity_max,
            mean_similarity: result.similarity_mean,
        });
    }
    let dir = output_dir(config);
    std::fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
    let path = dir.join("dt_sweep.csv");
    write_dt_sweep(&path, &rows)?;
    Ok((rows, path))
}

pub fn cmd_sweep_dt(args: &SweepDtArgs) -> Result<(Vec<DtSweepRow>, PathBuf), CliError> {
    let config = load_config(&args.config_path, &args.overrides)?;
    run_sweep_dt(&config, &args.dts)
}

/// What `validate` prints on stdout.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidateReport {
    pub fresh_seed: u64,
    pub accuracy: f64,
    pub similarity: f64,
    pub phase_aligned_similarity: f64,
}

/// Re-score saved parameters against a freshly seeded validation set.
pub fn run_validate(
    config: &ExperimentConfig,
    theta_path: &Path,
    fresh_seed: Option<u64>,
) -> Result<ValidateReport, CliError> {
    config.validate()?;
    let theta_file: ThetaFile = read_json(theta_path)?;
    let ansatz = Ansatz::build_with_pattern(config.qubits, config.depth, config.pattern)?;
    if theta_file.ansatz != ansatz.description() {
        return Err(CliError::Runtime(format!(
            "saved parameters describe ansatz {:?} but the config builds {:?}",
            theta_file.ansatz,
            ansatz.description()
        )));
    }
    if theta_file.theta.len() != ansatz.num_params() {
        return Err(CliError::Runtime(format!(
            "saved theta has {} entries, ansatz expects {}",
            theta_file.theta.len(),
            ansatz.num_params()
        )));
    }

    let fresh_seed = fresh_seed.unwrap_or_else(|| derive(config.master_seed, Purpose::FreshValidation));
    let target = build_target(&config.target)?;
    let mut set_rng = rng_from_seed(fresh_seed);
    let validation = make_dataset(
        config.qubits,
        config.validation_size(),
        &target,
        &mut set_rng,
        DatasetRole::Validation,
    )?;
    let mut shot_rng = rng_from_seed(derive(fresh_seed, Purpose::TrialShots));
    let acc = accuracy(&ansatz, &theta_file.theta, &validation, config.shots, &mut shot_rng)?;
    let circuit = circuit_to_unitary(&ansatz.bind(&theta_file.theta)?, config.qubits)?;
    let report = ValidateReport {
        fresh_seed,
        accuracy: acc,
        similarity: similarity(&circuit, &target)?,
        phase_aligned_similarity: phase_aligned_similarity(&circuit, &target)?,
    };
    Ok(report)
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<ValidateReport, CliError> {
    let config = load_config(&args.config_path, &args.overrides)?;
    let report = run_validate(&config, &args.theta_path, args.fresh_seed)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Runtime(format!("serializing report: {e}")))?;
    println!("{json}");
    Ok(report)
}
