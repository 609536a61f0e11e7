//! Experiment configuration: the (n, d, N) triple, target description,
//! optimizer settings, and seeding. Serializable as JSON so that a config
//! plus a master seed fixes every random draw of a run.

use crate::ansatz::EntanglerPattern;
use crate::error::CoreError;
use crate::swaptest::Shots;
use crate::targets::{RqcParams, XxzParams};
use serde::{Deserialize, Serialize};

/// Which ground-truth process to reconstruct.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetSpec {
    Xxz(XxzParams),
    Rqc(RqcParams),
}

impl TargetSpec {
    pub fn num_qubits(&self) -> usize {
        match self {
            TargetSpec::Xxz(p) => p.n,
            TargetSpec::Rqc(p) => p.n,
        }
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        match self {
            TargetSpec::Xxz(p) => p.validate(),
            TargetSpec::Rqc(p) => p.validate(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum OptimizerMethod {
    #[default]
    Adam,
    Sgd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum GradientMode {
    #[default]
    Exact,
    ParameterShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum OverlapMode {
    #[default]
    Direct,
    SwapTest,
}

/// Optimizer loop settings. The stopping rule is: loss below
/// `loss_threshold`, or no improvement larger than 1e-9 for
/// `plateau_patience` consecutive epochs, or `max_epochs` steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    #[serde(default)]
    pub method: OptimizerMethod,
    #[serde(default = "default_learning_rate")]
    pub learning_rate: f64,
    #[serde(default = "default_max_epochs")]
    pub max_epochs: usize,
    #[serde(default = "default_loss_threshold")]
    pub loss_threshold: f64,
    #[serde(default = "default_plateau_patience")]
    pub plateau_patience: usize,
    #[serde(default)]
    pub gradient_mode: GradientMode,
}

fn default_learning_rate() -> f64 {
    0.01
}
fn default_max_epochs() -> usize {
    2000
}
fn default_loss_threshold() -> f64 {
    1e-6
}
fn default_plateau_patience() -> usize {
    200
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            method: OptimizerMethod::Adam,
            learning_rate: default_learning_rate(),
            max_epochs: default_max_epochs(),
            loss_threshold: default_loss_threshold(),
            plateau_patience: default_plateau_patience(),
            gradient_mode: GradientMode::Exact,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.learning_rate.is_nan() || self.learning_rate <= 0.0 {
            return Err(CoreError::InvalidConfig("learning_rate must be > 0".into()));
        }
        if self.max_epochs < 1 {
            return Err(CoreError::InvalidConfig("max_epochs must be ≥ 1".into()));
        }
        if self.loss_threshold < 0.0 {
            return Err(CoreError::InvalidConfig("loss_threshold must be ≥ 0".into()));
        }
        Ok(())
    }
}

/// Full description of one experiment: target, ansatz shape (n, d), dataset
/// size N, trial count, and every knob that affects reproducibility.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub target: TargetSpec,
    pub qubits: usize,
    pub depth: usize,
    pub num_states: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default)]
    pub optimizer: OptimizerConfig,
    #[serde(default = "default_shots")]
    pub shots: Shots,
    #[serde(default)]
    pub overlap_mode: OverlapMode,
    /// Defaults to `num_states` when absent.
    #[serde(default)]
    pub validation_size: Option<usize>,
    #[serde(default)]
    pub pattern: EntanglerPattern,
    /// Epoch interval for progress lines on stderr; 0 disables them.
    #[serde(default)]
    pub progress_every: usize,
    #[serde(default)]
    pub output_dir: Option<String>,
}

fn default_schema_version() -> u32 {
    1
}
fn default_trials() -> usize {
    100
}
fn default_shots() -> Shots {
    Shots::Exact
}

impl ExperimentConfig {
    pub fn validation_size(&self) -> usize {
        self.validation_size.unwrap_or(self.num_states)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        self.target.validate()?;
        self.optimizer.validate()?;
        if self.target.num_qubits() != self.qubits {
            return Err(CoreError::InvalidConfig(format!(
                "target has {} qubits but the ansatz is configured for {}",
                self.target.num_qubits(),
                self.qubits
            )));
        }
        if self.num_states < 1 || self.trials < 1 || self.validation_size() < 1 {
            return Err(CoreError::InvalidConfig(
                "num_states, trials, and validation_size must all be ≥ 1".into(),
            ));
        }
        Ok(())
    }
}
