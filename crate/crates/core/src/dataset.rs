//! Seeded random input states and training/validation pair sets.

use crate::error::CoreError;
use crate::gate::Gate;
use crate::state::StateVector;
use crate::unitary::DenseUnitary;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// How a random state was produced: Ry(angle) on every qubit, then a list of
/// CZ gates on random distinct pairs. Enough to replay the state exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateRecipe {
    pub ry_angles: Vec<f64>,
    pub cz_pairs: Vec<(usize, usize)>,
}

impl StateRecipe {
    /// Rebuild the state this recipe describes.
    pub fn to_state(&self) -> Result<StateVector, CoreError> {
        let n = self.ry_angles.len();
        let mut s = StateVector::zero(n)?;
        for (q, &angle) in self.ry_angles.iter().enumerate() {
            s.apply(&Gate::Ry { qubit: q, angle })?;
        }
        for &(a, b) in &self.cz_pairs {
            s.apply(&Gate::Cz { a, b })?;
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DatasetRole {
    Training,
    Validation,
}

/// Input states paired with the target's outputs for them.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub role: DatasetRole,
    pub recipes: Vec<StateRecipe>,
    pub inputs: Vec<StateVector>,
    pub ideal_outputs: Vec<StateVector>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    /// Rebuild a dataset from stored recipes and the target unitary.
    pub fn from_recipes(
        recipes: Vec<StateRecipe>,
        target: &DenseUnitary,
        role: DatasetRole,
    ) -> Result<Self, CoreError> {
        let mut inputs = Vec::with_capacity(recipes.len());
        let mut ideal_outputs = Vec::with_capacity(recipes.len());
        for r in &recipes {
            let s = r.to_state()?;
            ideal_outputs.push(target.apply(&s)?);
            inputs.push(s);
        }
        Ok(Dataset { role, recipes, inputs, ideal_outputs })
    }
}

/// Draw one random state: Ry(θ_q) with θ_q ~ U[0, 2π) on each qubit, then
/// `num_cz` CZ gates on uniformly drawn distinct (control, target) pairs.
/// With a single qubit there are no valid pairs, so no CZs are drawn.
pub fn sample_state_with(
    n: usize,
    num_cz: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(StateRecipe, StateVector), CoreError> {
    StateVector::zero(n)?;
    let ry_angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
    let mut cz_pairs = Vec::new();
    if n >= 2 {
        for _ in 0..num_cz {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            cz_pairs.push((a, b));
        }
    }
    let recipe = StateRecipe { ry_angles, cz_pairs };
    let state = recipe.to_state()?;
    Ok((recipe, state))
}

/// [`sample_state_with`] at the default of n CZ gates per state.
pub fn sample_state(n: usize, rng: &mut ChaCha8Rng) -> Result<(StateRecipe, StateVector), CoreError> {
    sample_state_with(n, n, rng)
}

/// Generate `count` random inputs and their images under `target`.
pub fn make_dataset(
    n: usize,
    count: usize,
    target: &DenseUnitary,
    rng: &mut ChaCha8Rng,
    role: DatasetRole,
) -> Result<Dataset, CoreError> {
    if count == 0 {
        return Err(CoreError::InvalidConfig("dataset size must be ≥ 1".into()));
    }
    if target.num_qubits() != n {
        return Err(CoreError::DimensionMismatch { left: target.num_qubits(), right: n });
    }
    let mut recipes = Vec::with_capacity(count);
    let mut inputs = Vec::with_capacity(count);
    let mut ideal_outputs = Vec::with_capacity(count);
    for _ in 0..count {
        let (recipe, state) = sample_state(n, rng)?;
        ideal_outputs.push(target.apply(&state)?);
        inputs.push(state);
        recipes.push(recipe);
    }
    Ok(Dataset { role, recipes, inputs, ideal_outputs })
}
