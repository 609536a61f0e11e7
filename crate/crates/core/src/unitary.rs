//! Dense unitaries assembled from circuits, and application to states.

use crate::error::CoreError;
use crate::gate::Gate;
use crate::linalg::CMatrix;
use crate::state::StateVector;
use num_complex::Complex64;

/// A 2ⁿ×2ⁿ complex unitary, column-major (see [`CMatrix`]).
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    num_qubits: usize,
    matrix: CMatrix,
}

impl DenseUnitary {
    pub fn identity(num_qubits: usize) -> Result<Self, CoreError> {
        crate::state::StateVector::zero(num_qubits)?; // capacity check
        Ok(DenseUnitary {
            num_qubits,
            matrix: CMatrix::identity(1 << num_qubits),
        })
    }

    /// Wrap a matrix that is already known to be 2ⁿ×2ⁿ.
    pub fn from_matrix(num_qubits: usize, matrix: CMatrix) -> Self {
        assert_eq!(matrix.dim(), 1 << num_qubits);
        DenseUnitary { num_qubits, matrix }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// ‖M†M − I‖_F; ≤ 1e-10 for anything this crate constructs.
    pub fn unitarity_error(&self) -> f64 {
        let dim = self.matrix.dim();
        self.matrix
            .adjoint()
            .matmul(&self.matrix)
            .sub(&CMatrix::identity(dim))
            .frobenius_norm()
    }

    /// U|ψ⟩ as a fresh state.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector, CoreError> {
        if state.num_qubits() != self.num_qubits {
            return Err(CoreError::DimensionMismatch {
                left: self.num_qubits,
                right: state.num_qubits(),
            });
        }
        let out = self.matrix.matvec(state.amplitudes());
        StateVector::from_amplitudes(self.num_qubits, out)
    }
}

/// Assemble the full matrix of a circuit: column k is the circuit applied to
/// the computational basis state |k⟩.
pub fn circuit_to_unitary(gates: &[Gate], num_qubits: usize) -> Result<DenseUnitary, CoreError> {
    let dim_check = StateVector::zero(num_qubits)?; // capacity + validity
    drop(dim_check);
    let dim = 1 << num_qubits;
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut s = StateVector::basis(num_qubits, k)?;
        s.apply_all(gates)?;
        columns.push(s.amplitudes().to_vec());
    }
    Ok(DenseUnitary::from_matrix(
        num_qubits,
        CMatrix::from_columns(columns),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn empty_circuit_is_identity() {
        let u = circuit_to_unitary(&[], 2).unwrap();
        assert_eq!(u.matrix(), &CMatrix::identity(4));
    }

    #[test]
    fn single_hadamard_matrix() {
        let u = circuit_to_unitary(&[Gate::H { qubit: 0 }], 1).unwrap();
        let h = FRAC_1_SQRT_2;
        for (r, c, want) in [(0, 0, h), (0, 1, h), (1, 0, h), (1, 1, -h)] {
            assert!((u.matrix()[(r, c)] - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn gate_algebra_small_identities() {
        // CZ² = I, H² = I, T⁸ = I, (√X)² twice = X², i.e. (√X)⁴ = I up to X² = I.
        let cz2 = circuit_to_unitary(&[Gate::Cz { a: 0, b: 1 }, Gate::Cz { a: 0, b: 1 }], 2).unwrap();
        assert!(cz2.matrix().sub(&CMatrix::identity(4)).frobenius_norm() < 1e-12);

        let h2 = circuit_to_unitary(&[Gate::H { qubit: 0 }, Gate::H { qubit: 0 }], 1).unwrap();
        assert!(h2.matrix().sub(&CMatrix::identity(2)).frobenius_norm() < 1e-12);

        let t8 = circuit_to_unitary(&[Gate::T { qubit: 0 }; 8], 1).unwrap();
        assert!(t8.matrix().sub(&CMatrix::identity(2)).frobenius_norm() < 1e-12);

        // (√X)² equals X as an operator.
        let sx2 = circuit_to_unitary(&[Gate::SqrtX { qubit: 0 }; 2], 1).unwrap();
        let mut x = CMatrix::zeros(2);
        x[(0, 1)] = Complex64::new(1.0, 0.0);
        x[(1, 0)] = Complex64::new(1.0, 0.0);
        assert!(sx2.matrix().sub(&x).frobenius_norm() < 1e-12);

        // (√Y)² equals Y.
        let sy2 = circuit_to_unitary(&[Gate::SqrtY { qubit: 0 }; 2], 1).unwrap();
        let mut y = CMatrix::zeros(2);
        y[(0, 1)] = Complex64::new(0.0, -1.0);
        y[(1, 0)] = Complex64::new(0.0, 1.0);
        assert!(sy2.matrix().sub(&y).frobenius_norm() < 1e-12);

        // Rz(a)·Rz(b) = Rz(a+b).
        let lhs = circuit_to_unitary(
            &[
                Gate::Rz { qubit: 0, angle: 0.9 },
                Gate::Rz { qubit: 0, angle: -0.35 },
            ],
            1,
        )
        .unwrap();
        let rhs = circuit_to_unitary(&[Gate::Rz { qubit: 0, angle: 0.55 }], 1).unwrap();
        assert!(lhs.matrix().sub(rhs.matrix()).frobenius_norm() < 1e-12);
    }

    #[test]
    fn capacity_error_on_oversized_register() {
        assert!(matches!(
            circuit_to_unitary(&[], crate::state::MAX_QUBITS + 1),
            Err(CoreError::CapacityExceeded { .. })
        ));
    }
}
