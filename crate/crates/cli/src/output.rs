//! On-disk artifact schemas and writers. One writer, after aggregation.

use crate::CliError;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use vqpt_core::ansatz::AnsatzDescription;
use vqpt_core::config::ExperimentConfig;
use vqpt_core::training::{ExperimentResult, TrialRecord};

/// Schema of `result.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub schema_version: u32,
    pub code_version: String,
    /// Wall-clock seconds since the Unix epoch; the only field that differs
    /// between reruns of an identical configuration.
    pub timestamp_unix: u64,
    pub config: ExperimentConfig,
    pub best_trial_index: usize,
    pub similarity_max: f64,
    pub similarity_mean: f64,
    pub similarity_std: f64,
    pub trials: Vec<TrialRecord>,
}

impl ResultFile {
    pub fn new(config: &ExperimentConfig, result: &ExperimentResult) -> Self {
        ResultFile {
            schema_version: 1,
            code_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            config: config.clone(),
            best_trial_index: result.best_trial_index,
            similarity_max: result.similarity_max,
            similarity_mean: result.similarity_mean,
            similarity_std: result.similarity_std,
            trials: result.trials.clone(),
        }
    }
}

/// Schema of `theta_best.json`: the ansatz shape plus the trained angles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaFile {
    pub ansatz: AnsatzDescription,
    pub theta: Vec<f64>,
}

/// One row of `dt_sweep.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct DtSweepRow {
    pub dt: f64,
    pub max_similarity: f64,
    pub mean_similarity: f64,
}

pub fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Runtime(format!("serializing {}: {e}", path.display())))?;
    std::fs::write(path, text + "\n").map_err(|e| io_err(path, e))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// `loss_curves.csv` with header `epoch,trial,loss`, trial-major.
pub fn write_loss_curves(path: &Path, trials: &[TrialRecord]) -> Result<(), CliError> {
    let mut out = String::from("epoch,trial,loss\n");
    for t in trials {
        for (epoch, loss) in t.loss_history.iter().enumerate() {
            out.push_str(&format!("{},{},{:e}\n", epoch, t.trial_index, loss));
        }
    }
    std::fs::write(path, out).map_err(|e| io_err(path, e))
}

/// `dt_sweep.csv` with header `dt,max_similarity,mean_similarity`.
pub fn write_dt_sweep(path: &Path, rows: &[DtSweepRow]) -> Result<(), CliError> {
    let mut out = String::from("dt,max_similarity,mean_similarity\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.dt, r.max_similarity, r.mean_similarity));
    }
    std::fs::write(path, out).map_err(|e| io_err(path, e))
}

/// Paths of everything `learn` leaves on disk.
#[derive(Debug, Clone)]
pub struct LearnArtifacts {
    pub output_dir: PathBuf,
    pub result_path: PathBuf,
    pub loss_curves_path: PathBuf,
    pub theta_path: PathBuf,
}
