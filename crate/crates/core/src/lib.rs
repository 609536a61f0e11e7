//! Classical engine for reconstructing an unknown n-qubit unitary process by
//! training a layered parametric quantum circuit against random input/output
//! state pairs.
//!
//! The crate is organized around a dense statevector simulator ([`state`],
//! [`gate`], [`unitary`]), the trainable circuit layout ([`ansatz`]),
//! ground-truth target builders ([`targets`]), dataset generation
//! ([`dataset`]), SWAP-test overlap estimation ([`swaptest`]), and the
//! training loop with its metrics ([`training`]).
//!
//! # Qubit ordering
//!
//! Qubit 0 is the least-significant bit of the amplitude index, everywhere:
//! basis state `|q_{n-1} … q_1 q_0⟩` lives at index `Σ q_k 2^k`.

pub mod ansatz;
pub mod config;
pub mod dataset;
pub mod error;
pub mod gate;
pub mod linalg;
pub mod seeding;
pub mod state;
pub mod swaptest;
pub mod targets;
pub mod training;
pub mod unitary;

pub use ansatz::{Ansatz, AnsatzDescription, EntanglerPattern};
pub use config::{ExperimentConfig, GradientMode, OptimizerConfig, OverlapMode, TargetSpec};
pub use dataset::{Dataset, DatasetRole, StateRecipe};
pub use error::CoreError;
pub use gate::Gate;
pub use state::StateVector;
pub use swaptest::{OverlapEstimate, Shots};
pub use targets::{RqcParams, XxzParams};
pub use training::{ExperimentResult, LossReport, TrialRecord};
pub use unitary::DenseUnitary;
