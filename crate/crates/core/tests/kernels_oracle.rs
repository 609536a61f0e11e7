//! Gate kernels and circuit assembly checked against an independent
//! Kronecker-product oracle.
#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use num_complex::Complex64;
use vqpt_core::gate::Gate;
use vqpt_core::seeding::rng_from_seed;
use vqpt_core::state::StateVector;
use vqpt_core::unitary::circuit_to_unitary;

#[test]
fn random_gate_sequences_match_kronecker_matvec() {
    let mut rng = rng_from_seed(101);
    for _ in 0..20 {
        let n = 3;
        let amps = random_state_vec(n, &mut rng);
        let gates: Vec<Gate> = (0..12).map(|_| random_gate(n, &mut rng)).collect();

        let mut state = StateVector::from_amplitudes(n, amps.clone()).unwrap();
        state.apply_all(&gates).unwrap();

        let expect = matvec(&circuit_matrix(&gates, n), &amps);
        for (got, want) in state.amplitudes().iter().zip(&expect) {
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }
}

#[test]
fn two_qubit_circuit_matrix_matches_kronecker_oracle() {
    let gates = [Gate::H { qubit: 0 }, Gate::Cz { a: 0, b: 1 }];
    let u = circuit_to_unitary(&gates, 2).unwrap();
    let expect = circuit_matrix(&gates, 2);
    for r in 0..4 {
        for col in 0..4 {
            assert!((u.matrix()[(r, col)] - expect[r][col]).norm() < 1e-12);
        }
    }
}

#[test]
fn assembled_unitary_agrees_with_sequential_application() {
    let mut rng = rng_from_seed(55);
    let n = 3;
    let gates: Vec<Gate> = (0..20).map(|_| random_gate(n, &mut rng)).collect();
    let u = circuit_to_unitary(&gates, n).unwrap();
    for _ in 0..100 {
        let amps = random_state_vec(n, &mut rng);
        let mut state = StateVector::from_amplitudes(n, amps.clone()).unwrap();
        state.apply_all(&gates).unwrap();
        let via_matrix = u.apply(&StateVector::from_amplitudes(n, amps).unwrap()).unwrap();
        for (got, want) in state.amplitudes().iter().zip(via_matrix.amplitudes()) {
            assert!((got - want).norm() < 1e-12);
        }
    }
}

#[test]
fn norm_survives_a_thousand_random_gates() {
    let mut rng = rng_from_seed(77);
    let n = 4;
    let mut state = StateVector::from_amplitudes(n, random_state_vec(n, &mut rng)).unwrap();
    for _ in 0..1000 {
        state.apply(&random_gate(n, &mut rng)).unwrap();
    }
    assert!((state.norm_sqr() - 1.0).abs() <= 1e-10, "{}", state.norm_sqr());
}

#[test]
fn inner_product_matches_summation_oracle() {
    let mut rng = rng_from_seed(13);
    for _ in 0..20 {
        let a = random_state_vec(3, &mut rng);
        let b = random_state_vec(3, &mut rng);
        let mut expect = Complex64::new(0.0, 0.0);
        for (x, y) in a.iter().zip(&b) {
            expect += x.conj() * y;
        }
        let sa = StateVector::from_amplitudes(3, a).unwrap();
        let sb = StateVector::from_amplitudes(3, b).unwrap();
        let got = sa.inner_product(&sb).unwrap();
        assert!((got - expect).norm() < 1e-14);
    }
}

#[test]
fn gate_algebra_via_assembled_matrices() {
    // Rz(a)·Rz(b) = Rz(a+b) as operators, on a 3-qubit register.
    let lhs = circuit_to_unitary(
        &[
            Gate::Rz { qubit: 1, angle: 1.3 },
            Gate::Rz { qubit: 1, angle: -0.4 },
        ],
        3,
    )
    .unwrap();
    let rhs = circuit_to_unitary(&[Gate::Rz { qubit: 1, angle: 0.9 }], 3).unwrap();
    assert!(lhs.matrix().sub(rhs.matrix()).frobenius_norm() < 1e-12);
}
