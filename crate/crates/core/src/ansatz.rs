//! The layered parametric circuit: interleaved single-qubit rotation layers
//! (Rz, Ry, Rz on every qubit) and fixed CZ entangling layers.
//!
//! A depth-d circuit is `[SQ] + d × ([TQ] + [SQ])`: it begins and ends with a
//! single-qubit layer, giving 3n(d+1) trainable angles.

use crate::error::CoreError;
use crate::gate::Gate;
use crate::state::StateVector;
use serde::{Deserialize, Serialize};

/// Rotation axis of a parameter slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationAxis {
    Y,
    Z,
}

/// One position in the circuit layout: either a rotation bound to a
/// parameter slot, or a fixed CZ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LayoutElement {
    Rotation {
        axis: RotationAxis,
        qubit: usize,
        slot: usize,
    },
    Cz {
        a: usize,
        b: usize,
    },
}

/// Wiring of the two-qubit layers.
///
/// `Ladder` puts a CZ on every nearest-neighbor pair each entangling layer;
/// `Brick` alternates between even pairs `(0,1),(2,3),…` and odd pairs
/// `(1,2),(3,4),…` per layer. Ladder is the default: its CZ count keeps the
/// circuit determinant at +1 for the shipped experiment shapes, which the
/// phase-sensitive similarity metric requires (see `Ansatz::cz_count`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum EntanglerPattern {
    #[default]
    Ladder,
    Brick,
}

impl EntanglerPattern {
    fn pairs(self, n: usize, layer_index: usize) -> Vec<(usize, usize)> {
        match self {
            EntanglerPattern::Ladder => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            EntanglerPattern::Brick => {
                let start = layer_index % 2;
                (start..n.saturating_sub(1))
                    .step_by(2)
                    .map(|i| (i, i + 1))
                    .collect()
            }
        }
    }
}

/// Serializable description of an ansatz shape; enough to rebuild the exact
/// layout (and so to reload trained parameters).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnsatzDescription {
    pub num_qubits: usize,
    pub depth: usize,
    #[serde(default)]
    pub pattern: EntanglerPattern,
}

/// The trainable circuit layout with its parameter-slot map.
#[derive(Debug, Clone, PartialEq)]
pub struct Ansatz {
    num_qubits: usize,
    depth: usize,
    pattern: EntanglerPattern,
    layout: Vec<LayoutElement>,
    num_params: usize,
}

impl Ansatz {
    /// Build the layered circuit: a single-qubit layer, then `depth`
    /// repetitions of entangling layer + single-qubit layer.
    pub fn build(num_qubits: usize, depth: usize) -> Result<Self, CoreError> {
        Self::build_with_pattern(num_qubits, depth, EntanglerPattern::default())
    }

    pub fn build_with_pattern(
        num_qubits: usize,
        depth: usize,
        pattern: EntanglerPattern,
    ) -> Result<Self, CoreError> {
        if num_qubits == 0 {
            return Err(CoreError::InvalidConfig("ansatz needs at least 1 qubit".into()));
        }
        StateVector::zero(num_qubits)?; // capacity check
        let mut layout = Vec::new();
        let mut slot = 0usize;
        let push_single_layer = |layout: &mut Vec<LayoutElement>, slot: &mut usize| {
            for q in 0..num_qubits {
                for axis in [RotationAxis::Z, RotationAxis::Y, RotationAxis::Z] {
                    layout.push(LayoutElement::Rotation {
                        axis,
                        qubit: q,
                        slot: *slot,
                    });
                    *slot += 1;
                }
            }
        };
        push_single_layer(&mut layout, &mut slot);
        for layer in 0..depth {
            for (a, b) in pattern.pairs(num_qubits, layer) {
                layout.push(LayoutElement::Cz { a, b });
            }
            push_single_layer(&mut layout, &mut slot);
        }
        debug_assert_eq!(slot, 3 * num_qubits * (depth + 1));
        Ok(Ansatz {
            num_qubits,
            depth,
            pattern,
            layout,
            num_params: slot,
        })
    }

    pub fn from_description(d: &AnsatzDescription) -> Result<Self, CoreError> {
        Self::build_with_pattern(d.num_qubits, d.depth, d.pattern)
    }

    pub fn description(&self) -> AnsatzDescription {
        AnsatzDescription {
            num_qubits: self.num_qubits,
            depth: self.depth,
            pattern: self.pattern,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn pattern(&self) -> EntanglerPattern {
        self.pattern
    }

    /// 3n(d+1).
    pub fn num_params(&self) -> usize {
        self.num_params
    }

    pub fn layout(&self) -> &[LayoutElement] {
        &self.layout
    }

    /// Number of CZ gates; its parity fixes the circuit determinant
    /// det C(θ) = (−1)^cz_count independently of θ.
    pub fn cz_count(&self) -> usize {
        self.layout
            .iter()
            .filter(|e| matches!(e, LayoutElement::Cz { .. }))
            .count()
    }

    fn check_theta(&self, theta: &[f64]) -> Result<(), CoreError> {
        if theta.len() != self.num_params {
            return Err(CoreError::ParameterCount {
                expected: self.num_params,
                got: theta.len(),
            });
        }
        Ok(())
    }

    /// Substitute angles into the layout, yielding a plain gate list.
    pub fn bind(&self, theta: &[f64]) -> Result<Vec<Gate>, CoreError> {
        self.check_theta(theta)?;
        Ok(self
            .layout
            .iter()
            .map(|e| match *e {
                LayoutElement::Rotation { axis, qubit, slot } => match axis {
                    RotationAxis::Y => Gate::Ry { qubit, angle: theta[slot] },
                    RotationAxis::Z => Gate::Rz { qubit, angle: theta[slot] },
                },
                LayoutElement::Cz { a, b } => Gate::Cz { a, b },
            })
            .collect())
    }

    /// Apply the circuit at angles `theta` to `state`, in place.
    pub fn apply(&self, theta: &[f64], state: &mut StateVector) -> Result<(), CoreError> {
        self.check_theta(theta)?;
        if state.num_qubits() != self.num_qubits {
            return Err(CoreError::DimensionMismatch {
                left: self.num_qubits,
                right: state.num_qubits(),
            });
        }
        for e in &self.layout {
            match *e {
                LayoutElement::Rotation { axis, qubit, slot } => {
                    let g = match axis {
                        RotationAxis::Y => Gate::Ry { qubit, angle: theta[slot] },
                        RotationAxis::Z => Gate::Rz { qubit, angle: theta[slot] },
                    };
                    state.apply(&g)?;
                }
                LayoutElement::Cz { a, b } => state.apply(&Gate::Cz { a, b })?,
            }
        }
        Ok(())
    }

    /// C(θ)|input⟩ as a fresh state.
    pub fn evolve(&self, theta: &[f64], input: &StateVector) -> Result<StateVector, CoreError> {
        let mut out = input.clone();
        self.apply(theta, &mut out)?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_counts_match_formula() {
        assert_eq!(Ansatz::build(2, 2).unwrap().num_params(), 18);
        assert_eq!(Ansatz::build(1, 0).unwrap().num_params(), 3);
        assert_eq!(Ansatz::build(5, 6).unwrap().num_params(), 105);
    }

    #[test]
    fn depth_zero_is_one_rotation_layer() {
        let a = Ansatz::build(1, 0).unwrap();
        let axes: Vec<_> = a
            .layout()
            .iter()
            .map(|e| match e {
                LayoutElement::Rotation { axis, qubit: 0, .. } => *axis,
                other => panic!("unexpected element {other:?}"),
            })
            .collect();
        assert_eq!(axes, vec![RotationAxis::Z, RotationAxis::Y, RotationAxis::Z]);
    }

    #[test]
    fn every_slot_appears_exactly_once() {
        for (n, d) in [(1, 0), (2, 3), (4, 2), (5, 6)] {
            let a = Ansatz::build(n, d).unwrap();
            let mut seen = vec![0usize; a.num_params()];
            for e in a.layout() {
                if let LayoutElement::Rotation { slot, .. } = e {
                    seen[*slot] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1), "(n={n}, d={d})");
        }
    }

    #[test]
    fn zero_angles_depth_zero_is_identity() {
        let a = Ansatz::build(3, 0).unwrap();
        let theta = vec![0.0; a.num_params()];
        let mut state = StateVector::basis(3, 5).unwrap();
        let before = state.clone();
        a.apply(&theta, &mut state).unwrap();
        for (x, y) in state.amplitudes().iter().zip(before.amplitudes()) {
            assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn zero_angles_leaves_only_cz() {
        // n=2, d=1: rotations collapse to identity, a single CZ(0,1) remains.
        let a = Ansatz::build(2, 1).unwrap();
        let theta = vec![0.0; a.num_params()];
        let u = crate::unitary::circuit_to_unitary(&a.bind(&theta).unwrap(), 2).unwrap();
        let cz = crate::unitary::circuit_to_unitary(&[Gate::Cz { a: 0, b: 1 }], 2).unwrap();
        assert!(u.matrix().sub(cz.matrix()).frobenius_norm() < 1e-12);
    }

    #[test]
    fn theta_length_mismatch_is_an_error() {
        let a = Ansatz::build(2, 1).unwrap();
        let mut s = StateVector::zero(2).unwrap();
        assert!(matches!(
            a.apply(&[0.0; 3], &mut s),
            Err(CoreError::ParameterCount { expected: 12, got: 3 })
        ));
    }

    #[test]
    fn brick_pattern_alternates() {
        let a = Ansatz::build_with_pattern(4, 2, EntanglerPattern::Brick).unwrap();
        let czs: Vec<_> = a
            .layout()
            .iter()
            .filter_map(|e| match e {
                LayoutElement::Cz { a, b } => Some((*a, *b)),
                _ => None,
            })
            .collect();
        assert_eq!(czs, vec![(0, 1), (2, 3), (1, 2)]);
    }

    #[test]
    fn description_round_trip() {
        let a = Ansatz::build_with_pattern(3, 2, EntanglerPattern::Brick).unwrap();
        let d = a.description();
        let json = serde_json::to_string(&d).unwrap();
        let back: AnsatzDescription = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert_eq!(Ansatz::from_description(&back).unwrap(), a);
    }
}
