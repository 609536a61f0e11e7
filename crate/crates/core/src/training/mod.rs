//! Loss evaluation, training trials, multi-trial experiments, and the
//! similarity/accuracy metrics with best-trial selection.

mod gradient;
mod optimizer;

pub use gradient::{gradient_exact, gradient_parameter_shift};

use crate::ansatz::Ansatz;
use crate::config::{ExperimentConfig, GradientMode, OptimizerConfig, OverlapMode, TargetSpec};
use crate::dataset::{make_dataset, Dataset, DatasetRole};
use crate::error::CoreError;
use crate::seeding::{derive, derive_indexed, rng_from_seed, Purpose};
use crate::swaptest::{fidelity, generalized_overlap, Shots};
use crate::targets::{build_rqc_unitary, build_xxz_unitary};
use crate::unitary::{circuit_to_unitary, DenseUnitary};
use optimizer::Stepper;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Loss value and its per-state breakdown: each entry is the squared
/// Euclidean distance 2 − 2·Re⟨ψ_ideal|C(θ)ψ⟩ ∈ [0, 4], and the loss is
/// their mean.
#[derive(Debug, Clone, PartialEq)]
pub struct LossReport {
    pub f: f64,
    pub per_state_distances: Vec<f64>,
}

/// Mean squared output distance over the dataset. The overlap is taken
/// either directly from the statevectors or through the generalized
/// SWAP test; the two agree exactly in exact mode.
pub fn loss(
    ansatz: &Ansatz,
    theta: &[f64],
    dataset: &Dataset,
    overlap_mode: OverlapMode,
    shots: Shots,
    rng: &mut ChaCha8Rng,
) -> Result<LossReport, CoreError> {
    let mut per_state_distances = Vec::with_capacity(dataset.len());
    for (input, ideal) in dataset.inputs.iter().zip(&dataset.ideal_outputs) {
        let output = ansatz.evolve(theta, input)?;
        let overlap_re = match overlap_mode {
            OverlapMode::Direct => ideal.inner_product(&output)?.re,
            OverlapMode::SwapTest => generalized_overlap(ideal, &output, shots, rng)?.c_re,
        };
        per_state_distances.push(2.0 - 2.0 * overlap_re);
    }
    let f = per_state_distances.iter().sum::<f64>() / per_state_distances.len() as f64;
    Ok(LossReport { f, per_state_distances })
}

/// similarity(U, C) = 1 − ‖C − U‖_F / (2‖U‖_F); phase-sensitive, equals 1
/// only on exact reconstruction. For unitary U, ‖U‖_F = √2ⁿ.
pub fn similarity(circuit: &DenseUnitary, target: &DenseUnitary) -> Result<f64, CoreError> {
    if circuit.num_qubits() != target.num_qubits() {
        return Err(CoreError::DimensionMismatch {
            left: circuit.num_qubits(),
            right: target.num_qubits(),
        });
    }
    let diff = circuit.matrix().sub(target.matrix()).frobenius_norm();
    Ok(1.0 - diff / (2.0 * target.matrix().frobenius_norm()))
}

/// Diagnostic variant of [`similarity`] maximized over a global phase on the
/// circuit. Reported alongside the plain value, never used for acceptance.
pub fn phase_aligned_similarity(
    circuit: &DenseUnitary,
    target: &DenseUnitary,
) -> Result<f64, CoreError> {
    if circuit.num_qubits() != target.num_qubits() {
        return Err(CoreError::DimensionMismatch {
            left: circuit.num_qubits(),
            right: target.num_qubits(),
        });
    }
    let c_norm_sq = circuit.matrix().frobenius_norm().powi(2);
    let u_norm = target.matrix().frobenius_norm();
    let cross = circuit.matrix().frobenius_inner(target.matrix()).norm();
    let diff_sq = (c_norm_sq + u_norm * u_norm - 2.0 * cross).max(0.0);
    Ok(1.0 - diff_sq.sqrt() / (2.0 * u_norm))
}

/// accuracy = (1/N)Σ|⟨φ_ideal|φ'⟩|, i.e. the mean √a from the SWAP test over
/// the validation set. Needs no phase information.
pub fn accuracy(
    ansatz: &Ansatz,
    theta: &[f64],
    validation: &Dataset,
    shots: Shots,
    rng: &mut ChaCha8Rng,
) -> Result<f64, CoreError> {
    let mut total = 0.0;
    for (input, ideal) in validation.inputs.iter().zip(&validation.ideal_outputs) {
        let output = ansatz.evolve(theta, input)?;
        let a = fidelity(ideal, &output, shots, rng)?.clamp(0.0, 1.0);
        total += a.sqrt();
    }
    Ok(total / validation.len() as f64)
}

/// Outcome of one independently seeded training run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub trial_seed: u64,
    /// Set when the loss or gradient went non-finite; such trials keep their
    /// history but report no metrics.
    pub failed: bool,
    pub epochs_run: usize,
    pub loss_history: Vec<f64>,
    pub theta_final: Vec<f64>,
    pub similarity: Option<f64>,
    pub phase_aligned_similarity: Option<f64>,
    pub accuracy: Option<f64>,
}

/// Everything a single trial needs, shared immutably across the trial pool.
pub struct TrialContext<'a> {
    pub ansatz: &'a Ansatz,
    pub target: &'a DenseUnitary,
    pub training: &'a Dataset,
    pub validation: &'a Dataset,
    pub optimizer: &'a OptimizerConfig,
    pub overlap_mode: OverlapMode,
    pub shots: Shots,
    /// Epoch interval for stderr progress lines; 0 disables them.
    pub progress_every: usize,
    pub trial_index: usize,
}

/// Run one trial: θ initialized uniformly on [0, 2π) from the trial seed,
/// then gradient descent until the loss threshold, a plateau, or the epoch
/// cap. Records the full loss history and the final metrics.
pub fn run_trial(ctx: &TrialContext, trial_seed: u64) -> TrialRecord {
    debug_assert_eq!(ctx.training.role, DatasetRole::Training);
    debug_assert_eq!(ctx.validation.role, DatasetRole::Validation);

    let mut init_rng = rng_from_seed(derive(trial_seed, Purpose::TrialInit));
    let mut shot_rng = rng_from_seed(derive(trial_seed, Purpose::TrialShots));
    let num_params = ctx.ansatz.num_params();
    let mut theta: Vec<f64> = (0..num_params).map(|_| init_rng.gen_range(0.0..TAU)).collect();

    let mut stepper = Stepper::new(ctx.optimizer, num_params);
    let mut loss_history = Vec::new();
    let mut failed = false;
    let mut epochs_run = 0usize;
    let mut best_loss = f64::INFINITY;
    let mut stall = 0usize;

    loop {
        let report = match loss(
            ctx.ansatz,
            &theta,
            ctx.training,
            ctx.overlap_mode,
            ctx.shots,
            &mut shot_rng,
        ) {
            Ok(r) => r,
            Err(_) => {
                failed = true;
                break;
            }
        };
        loss_history.push(report.f);
        if !report.f.is_finite() {
            failed = true;
            break;
        }
        if ctx.progress_every > 0 && epochs_run.is_multiple_of(ctx.progress_every) {
            eprintln!(
                "trial {:>3} epoch {:>5} loss {:.6e}",
                ctx.trial_index, epochs_run, report.f
            );
        }
        if report.f < ctx.optimizer.loss_threshold {
            break;
        }
        if report.f < best_loss - 1e-9 {
            best_loss = report.f;
            stall = 0;
        } else {
            stall += 1;
            if ctx.optimizer.plateau_patience > 0 && stall >= ctx.optimizer.plateau_patience {
                break;
            }
        }
        if epochs_run >= ctx.optimizer.max_epochs {
            break;
        }

        let grad = match ctx.optimizer.gradient_mode {
            GradientMode::Exact => gradient_exact(ctx.ansatz, &theta, ctx.training),
            GradientMode::ParameterShift => gradient_parameter_shift(
                ctx.ansatz,
                &theta,
                ctx.training,
                ctx.shots,
                &mut shot_rng,
            ),
        };
        let grad = match grad {
            Ok(g) if g.iter().all(|x| x.is_finite()) => g,
            _ => {
                failed = true;
                break;
            }
        };
        stepper.step(&mut theta, &grad);
        epochs_run += 1;
    }

    let (sim, aligned, acc) = if failed {
        (None, None, None)
    } else {
        let metrics = (|| -> Result<(f64, f64, f64), CoreError> {
            let gates = ctx.ansatz.bind(&theta)?;
            let circuit = circuit_to_unitary(&gates, ctx.ansatz.num_qubits())?;
            let sim = similarity(&circuit, ctx.target)?;
            let aligned = phase_aligned_similarity(&circuit, ctx.target)?;
            let acc = accuracy(ctx.ansatz, &theta, ctx.validation, ctx.shots, &mut shot_rng)?;
            Ok((sim, aligned, acc))
        })();
        match metrics {
            Ok((s, al, ac)) => (Some(s), Some(al), Some(ac)),
            Err(_) => {
                failed = true;
                (None, None, None)
            }
        }
    };

    TrialRecord {
        trial_index: ctx.trial_index,
        trial_seed,
        failed,
        epochs_run,
        loss_history,
        theta_final: theta,
        similarity: sim,
        phase_aligned_similarity: aligned,
        accuracy: acc,
    }
}

/// All trials of one experiment plus the best-trial selection and the
/// similarity statistics over completed trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub trials: Vec<TrialRecord>,
    /// Index of the completed trial with the highest validation accuracy.
    pub best_trial_index: usize,
    pub similarity_max: f64,
    pub similarity_mean: f64,
    pub similarity_std: f64,
}

impl ExperimentResult {
    pub fn best(&self) -> &TrialRecord {
        &self.trials[self.best_trial_index]
    }
}

/// Build the target unitary a config describes.
pub fn build_target(target: &TargetSpec) -> Result<DenseUnitary, CoreError> {
    match target {
        TargetSpec::Xxz(p) => build_xxz_unitary(p),
        TargetSpec::Rqc(p) => build_rqc_unitary(p),
    }
}

/// Build the training and validation sets for a config from its master seed.
pub fn build_datasets(
    config: &ExperimentConfig,
    target: &DenseUnitary,
) -> Result<(Dataset, Dataset), CoreError> {
    let mut train_rng = rng_from_seed(derive(config.master_seed, Purpose::TrainingSet));
    let mut val_rng = rng_from_seed(derive(config.master_seed, Purpose::ValidationSet));
    let training = make_dataset(
        config.qubits,
        config.num_states,
        target,
        &mut train_rng,
        DatasetRole::Training,
    )?;
    let validation = make_dataset(
        config.qubits,
        config.validation_size(),
        target,
        &mut val_rng,
        DatasetRole::Validation,
    )?;
    Ok((training, validation))
}

/// Run `config.trials` independently seeded trials in parallel and select
/// the one with the highest validation accuracy. Statistics cover completed
/// trials only; an experiment where every trial failed is an error.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult, CoreError> {
    config.validate()?;
    let target = build_target(&config.target)?;
    let ansatz = Ansatz::build_with_pattern(config.qubits, config.depth, config.pattern)?;
    let (training, validation) = build_datasets(config, &target)?;

    let trials: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let ctx = TrialContext {
                ansatz: &ansatz,
                target: &target,
                training: &training,
                validation: &validation,
                optimizer: &config.optimizer,
                overlap_mode: config.overlap_mode,
                shots: config.shots,
                progress_every: config.progress_every,
                trial_index: t,
            };
            let trial_seed = derive_indexed(config.master_seed, Purpose::Trial, t as u64);
            let record = run_trial(&ctx, trial_seed);
            if config.progress_every > 0 {
                eprintln!(
                    "trial {:>3} done: epochs {} loss {:.3e} similarity {:?}",
                    t,
                    record.epochs_run,
                    record.loss_history.last().copied().unwrap_or(f64::NAN),
                    record.similarity
                );
            }
            record
        })
        .collect();

    let completed: Vec<&TrialRecord> = trials.iter().filter(|t| !t.failed).collect();
    if completed.is_empty() {
        return Err(CoreError::AllTrialsFailed(trials.len()));
    }

    let best_trial_index = completed
        .iter()
        .max_by(|a, b| {
            a.accuracy
                .unwrap_or(f64::NEG_INFINITY)
                .partial_cmp(&b.accuracy.unwrap_or(f64::NEG_INFINITY))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .map(|t| t.trial_index)
        .expect("non-empty completed set");

    let sims: Vec<f64> = completed.iter().filter_map(|t| t.similarity).collect();
    let similarity_max = sims.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let similarity_mean = sims.iter().sum::<f64>() / sims.len() as f64;
    let similarity_std = (sims
        .iter()
        .map(|s| (s - similarity_mean).powi(2))
        .sum::<f64>()
        / sims.len() as f64)
        .sqrt();

    Ok(ExperimentResult {
        trials,
        best_trial_index,
        similarity_max,
        similarity_mean,
        similarity_std,
    })
}
