use thiserror::Error;

/// Errors surfaced by the simulation and training layers.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("qubit index {index} out of range for {num_qubits} qubit(s)")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("{requested} qubits exceed the configured cap of {max} (2^{requested} amplitudes)")]
    CapacityExceeded { requested: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parameter vector has length {got}, ansatz expects {expected}")]
    ParameterCount { expected: usize, got: usize },

    #[error("degenerate superposition: |ψ⟩ + |φ⟩ has vanishing norm (post-selection probability 0)")]
    DegenerateSuperposition,

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("all {0} trials failed to produce a finite loss")]
    AllTrialsFailed(usize),
}
