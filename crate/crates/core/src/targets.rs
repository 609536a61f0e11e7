//! Ground-truth target unitaries: XXZ spin-chain time evolution and seeded
//! random quantum circuits.

use crate::error::CoreError;
use crate::gate::Gate;
use crate::linalg::{hermitian_eigen, CMatrix};
use crate::seeding::rng_from_seed;
use crate::state::StateVector;
use crate::unitary::{circuit_to_unitary, DenseUnitary};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Heisenberg XXZ chain in a longitudinal field, open boundary conditions:
/// H = Σ_{l<n−1} [J(σˣσˣ + σʸσʸ) + Δ σᶻσᶻ] + h Σ σᶻ, with dt the evolution
/// time in ħ=1 units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XxzParams {
    pub n: usize,
    pub j: f64,
    pub delta: f64,
    pub h: f64,
    pub dt: f64,
}

impl Default for XxzParams {
    fn default() -> Self {
        // h = 0.1, J = 1, dt = 0.01 are the reference settings; Δ defaults
        // to 1 and is exposed because nothing pins it.
        XxzParams { n: 2, j: 1.0, delta: 1.0, h: 0.1, dt: 0.01 }
    }
}

impl XxzParams {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.n < 2 {
            return Err(CoreError::InvalidConfig("XXZ chain needs n ≥ 2".into()));
        }
        if self.dt < 0.0 {
            return Err(CoreError::InvalidConfig("XXZ evolution time must be ≥ 0".into()));
        }
        Ok(())
    }
}

/// A seeded random circuit target: H on every qubit, D depths of brick CZ
/// layers plus random {T, √X, √Y} single-qubit gates, H on every qubit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RqcParams {
    pub n: usize,
    pub depth: usize,
    pub seed: u64,
}

impl RqcParams {
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.n < 2 {
            return Err(CoreError::InvalidConfig("random circuit needs n ≥ 2".into()));
        }
        if self.depth < 1 {
            return Err(CoreError::InvalidConfig("random circuit needs depth ≥ 1".into()));
        }
        Ok(())
    }
}

/// Build the dense XXZ Hamiltonian matrix. Qubit l ↔ bit l of the index;
/// σᶻ|0⟩ = +|0⟩.
pub fn build_xxz_hamiltonian(p: &XxzParams) -> Result<CMatrix, CoreError> {
    p.validate()?;
    StateVector::zero(p.n)?; // capacity check
    let dim = 1usize << p.n;
    let mut m = CMatrix::zeros(dim);

    let z_of = |idx: usize, l: usize| if idx >> l & 1 == 0 { 1.0 } else { -1.0 };

    for idx in 0..dim {
        // Diagonal: Δ σᶻσᶻ on bonds plus the field term.
        let mut diag = 0.0;
        for l in 0..p.n - 1 {
            diag += p.delta * z_of(idx, l) * z_of(idx, l + 1);
        }
        for l in 0..p.n {
            diag += p.h * z_of(idx, l);
        }
        m[(idx, idx)] += Complex64::new(diag, 0.0);

        // Off-diagonal: J(σˣσˣ + σʸσʸ) = 2J(|01⟩⟨10| + |10⟩⟨01|) per bond.
        for l in 0..p.n - 1 {
            let bl = idx >> l & 1;
            let blp = idx >> (l + 1) & 1;
            if bl != blp {
                let flipped = idx ^ (1 << l) ^ (1 << (l + 1));
                m[(flipped, idx)] += Complex64::new(2.0 * p.j, 0.0);
            }
        }
    }
    Ok(m)
}

/// U = V·diag(e^{−iλdt})·V† from the Hermitian eigendecomposition of H.
pub fn evolve_unitary(h: &CMatrix, dt: f64) -> Result<DenseUnitary, CoreError> {
    let dim = h.dim();
    let num_qubits = dim.trailing_zeros() as usize;
    assert_eq!(1usize << num_qubits, dim, "dimension must be a power of two");
    let (lambda, v) = hermitian_eigen(h)?;
    let mut d = CMatrix::zeros(dim);
    for (i, l) in lambda.iter().enumerate() {
        d[(i, i)] = Complex64::from_polar(1.0, -l * dt);
    }
    let u = v.matmul(&d).matmul(&v.adjoint());
    Ok(DenseUnitary::from_matrix(num_qubits, u))
}

/// The XXZ evolution operator e^{−iH dt}.
pub fn build_xxz_unitary(p: &XxzParams) -> Result<DenseUnitary, CoreError> {
    let h = build_xxz_hamiltonian(p)?;
    evolve_unitary(&h, p.dt)
}

/// Deterministic gate list of the seeded random circuit. Draw order is
/// fixed: depth by depth, qubit 0..n, one uniform choice from {T, √X, √Y}.
pub fn build_random_circuit(p: &RqcParams) -> Result<Vec<Gate>, CoreError> {
    p.validate()?;
    StateVector::zero(p.n)?;
    let mut rng = rng_from_seed(p.seed);
    let mut gates = Vec::new();
    for q in 0..p.n {
        gates.push(Gate::H { qubit: q });
    }
    for depth in 0..p.depth {
        let start = depth % 2;
        let mut a = start;
        while a + 1 < p.n {
            gates.push(Gate::Cz { a, b: a + 1 });
            a += 2;
        }
        for q in 0..p.n {
            gates.push(match rng.gen_range(0..3u8) {
                0 => Gate::T { qubit: q },
                1 => Gate::SqrtX { qubit: q },
                _ => Gate::SqrtY { qubit: q },
            });
        }
    }
    for q in 0..p.n {
        gates.push(Gate::H { qubit: q });
    }
    Ok(gates)
}

/// Dense matrix of the seeded random circuit.
pub fn build_rqc_unitary(p: &RqcParams) -> Result<DenseUnitary, CoreError> {
    let gates = build_random_circuit(p)?;
    circuit_to_unitary(&gates, p.n)
}
