//! Dense statevector representation and in-place gate kernels.
//!
//! Gate kernels act over amplitude pairs selected by bit masks; no full
//! matrix is ever built while evolving a state. Qubit 0 is the
//! least-significant bit of the amplitude index.

use crate::error::CoreError;
use crate::gate::{adjoint_2x2, Gate};
use num_complex::Complex64;

/// Hard cap on the simulated register size (2^12 amplitudes).
pub const MAX_QUBITS: usize = 12;

/// 2^n complex amplitudes of an n-qubit pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros state |0…0⟩.
    pub fn zero(num_qubits: usize) -> Result<Self, CoreError> {
        Self::basis(num_qubits, 0)
    }

    /// Computational basis state |k⟩.
    pub fn basis(num_qubits: usize, k: usize) -> Result<Self, CoreError> {
        check_capacity(num_qubits)?;
        let dim = 1 << num_qubits;
        assert!(k < dim, "basis index {k} out of range for {num_qubits} qubits");
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[k] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wrap raw amplitudes; the length must be 2^num_qubits.
    pub fn from_amplitudes(num_qubits: usize, amps: Vec<Complex64>) -> Result<Self, CoreError> {
        check_capacity(num_qubits)?;
        if amps.len() != 1 << num_qubits {
            return Err(CoreError::Numerical(format!(
                "expected {} amplitudes, got {}",
                1usize << num_qubits,
                amps.len()
            )));
        }
        Ok(StateVector { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Σ|amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Scale so that the norm becomes 1. Errors on a (near-)zero vector.
    pub fn normalize(&mut self) -> Result<(), CoreError> {
        let n = self.norm_sqr().sqrt();
        if n < 1e-12 {
            return Err(CoreError::DegenerateSuperposition);
        }
        let inv = 1.0 / n;
        for a in &mut self.amps {
            *a *= inv;
        }
        Ok(())
    }

    /// ⟨self|other⟩ = Σ conj(self_i)·other_i.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64, CoreError> {
        if self.num_qubits != other.num_qubits {
            return Err(CoreError::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, gate: &Gate) -> Result<(), CoreError> {
        match *gate {
            Gate::Cz { a, b } => self.apply_cz(a, b),
            _ => {
                let (q, _) = gate.targets();
                let m = gate.single_qubit_matrix().expect("single-qubit gate");
                self.apply_single(q, &m)
            }
        }
    }

    /// Apply the conjugate transpose of one gate in place.
    pub fn apply_inverse(&mut self, gate: &Gate) -> Result<(), CoreError> {
        match *gate {
            Gate::Cz { a, b } => self.apply_cz(a, b),
            _ => {
                let (q, _) = gate.targets();
                let m = gate.single_qubit_matrix().expect("single-qubit gate");
                self.apply_single(q, &adjoint_2x2(&m))
            }
        }
    }

    /// Apply every gate of `circuit` in order.
    pub fn apply_all(&mut self, circuit: &[Gate]) -> Result<(), CoreError> {
        for g in circuit {
            self.apply(g)?;
        }
        Ok(())
    }

    /// Apply an arbitrary 2×2 (row-major) on qubit `q`.
    pub(crate) fn apply_single(&mut self, q: usize, m: &[Complex64; 4]) -> Result<(), CoreError> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        let dim = self.amps.len();
        let mut i0 = 0usize;
        while i0 < dim {
            if i0 & mask == 0 {
                let i1 = i0 | mask;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = m[0] * a0 + m[1] * a1;
                self.amps[i1] = m[2] * a0 + m[3] * a1;
            }
            i0 += 1;
        }
        Ok(())
    }

    /// CZ: phase −1 on amplitudes where both target bits are set.
    fn apply_cz(&mut self, a: usize, b: usize) -> Result<(), CoreError> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        assert_ne!(a, b, "CZ targets must be distinct");
        let mask = (1usize << a) | (1usize << b);
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    /// Pauli Y on qubit `q`: |0⟩ → i|1⟩, |1⟩ → −i|0⟩. Used by the adjoint
    /// gradient pass as the generator of Ry.
    pub(crate) fn apply_pauli_y(&mut self, q: usize) -> Result<(), CoreError> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        let i = Complex64::new(0.0, 1.0);
        for i0 in 0..self.amps.len() {
            if i0 & mask == 0 {
                let i1 = i0 | mask;
                let a0 = self.amps[i0];
                let a1 = self.amps[i1];
                self.amps[i0] = -i * a1;
                self.amps[i1] = i * a0;
            }
        }
        Ok(())
    }

    /// Pauli Z on qubit `q`: phase −1 where the bit is set.
    pub(crate) fn apply_pauli_z(&mut self, q: usize) -> Result<(), CoreError> {
        self.check_qubit(q)?;
        let mask = 1usize << q;
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask != 0 {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    fn check_qubit(&self, q: usize) -> Result<(), CoreError> {
        if q >= self.num_qubits {
            Err(CoreError::QubitOutOfRange {
                index: q,
                num_qubits: self.num_qubits,
            })
        } else {
            Ok(())
        }
    }
}

fn check_capacity(num_qubits: usize) -> Result<(), CoreError> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(CoreError::CapacityExceeded {
            requested: num_qubits,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn ry_pi_flips_zero_to_one() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply(&Gate::Ry { qubit: 0, angle: PI }).unwrap();
        assert!(s.amplitudes()[0].norm() < 1e-15);
        assert!((s.amplitudes()[1] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn rz_phases_zero_state() {
        let theta = 0.83;
        let mut s = StateVector::zero(1).unwrap();
        s.apply(&Gate::Rz { qubit: 0, angle: theta }).unwrap();
        let expect = Complex64::from_polar(1.0, -theta / 2.0);
        assert!((s.amplitudes()[0] - expect).norm() < 1e-15);
    }

    #[test]
    fn cz_flips_sign_of_11_only() {
        // (|10⟩ + |11⟩)/√2 → (|10⟩ − |11⟩)/√2
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let amps = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(inv, 0.0),
            Complex64::new(inv, 0.0),
        ];
        let mut s = StateVector::from_amplitudes(2, amps).unwrap();
        s.apply(&Gate::Cz { a: 0, b: 1 }).unwrap();
        assert!((s.amplitudes()[2] - Complex64::new(inv, 0.0)).norm() < 1e-15);
        assert!((s.amplitudes()[3] - Complex64::new(-inv, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn inner_product_basis_states() {
        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        assert_eq!(zero.inner_product(&zero).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(zero.inner_product(&one).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn inner_product_rejects_dimension_mismatch() {
        let a = StateVector::zero(2).unwrap();
        let b = StateVector::zero(3).unwrap();
        assert!(matches!(
            a.inner_product(&b),
            Err(CoreError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn out_of_range_target_is_an_error() {
        let mut s = StateVector::zero(2).unwrap();
        assert!(matches!(
            s.apply(&Gate::H { qubit: 2 }),
            Err(CoreError::QubitOutOfRange { .. })
        ));
    }

    #[test]
    fn capacity_cap_enforced() {
        assert!(matches!(
            StateVector::zero(MAX_QUBITS + 1),
            Err(CoreError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn pauli_kernels_match_generators() {
        // Y|+⟩ relative phases and Z sign structure, spot-checked on 2 qubits.
        let mut s = StateVector::basis(2, 1).unwrap(); // |01⟩, qubit0 = 1
        s.apply_pauli_y(0).unwrap();
        assert!((s.amplitudes()[0] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        let mut t = StateVector::basis(2, 2).unwrap(); // qubit1 = 1
        t.apply_pauli_z(1).unwrap();
        assert!((t.amplitudes()[2] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }
}
