//! Independent Kronecker-product oracle used by the integration tests.
//!
//! Everything here is built from hand-written 2×2 matrices and naive dense
//! algebra, deliberately sharing no code with the library's kernels.
#![allow(dead_code)] // each test target uses a different subset
#![allow(clippy::needless_range_loop)] // index pairs read naturally in matrix code

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use vqpt_core::gate::Gate;

pub type Mat = Vec<Vec<Complex64>>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn eye(dim: usize) -> Mat {
    let mut m = vec![vec![c(0.0, 0.0); dim]; dim];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = (a.len(), a[0].len());
    let (rb, cb) = (b.len(), b[0].len());
    let mut out = vec![vec![c(0.0, 0.0); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(a: &Mat, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
        .collect()
}

/// Hand-written single-qubit matrices (row-major 2×2).
pub fn single_matrix(gate: &Gate) -> Mat {
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    match *gate {
        Gate::Ry { angle, .. } => vec![
            vec![c((angle / 2.0).cos(), 0.0), c(-(angle / 2.0).sin(), 0.0)],
            vec![c((angle / 2.0).sin(), 0.0), c((angle / 2.0).cos(), 0.0)],
        ],
        Gate::Rz { angle, .. } => vec![
            vec![c((angle / 2.0).cos(), -(angle / 2.0).sin()), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c((angle / 2.0).cos(), (angle / 2.0).sin())],
        ],
        Gate::H { .. } => vec![vec![c(s2, 0.0), c(s2, 0.0)], vec![c(s2, 0.0), c(-s2, 0.0)]],
        Gate::T { .. } => vec![
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(s2, s2)],
        ],
        Gate::SqrtX { .. } => vec![
            vec![c(0.5, 0.5), c(0.5, -0.5)],
            vec![c(0.5, -0.5), c(0.5, 0.5)],
        ],
        Gate::SqrtY { .. } => vec![
            vec![c(0.5, 0.5), c(-0.5, -0.5)],
            vec![c(0.5, 0.5), c(0.5, 0.5)],
        ],
        Gate::Cz { .. } => panic!("CZ has no 2x2 form"),
    }
}

/// Full 2ⁿ×2ⁿ matrix for one gate; qubit 0 is the least-significant bit,
/// so a gate on qubit q embeds as I ⊗ … ⊗ M ⊗ … ⊗ I with M in slot q from
/// the right.
pub fn gate_matrix_full(gate: &Gate, n: usize) -> Mat {
    match *gate {
        Gate::Cz { a, b } => {
            let dim = 1usize << n;
            let mut m = eye(dim);
            let mask = (1usize << a) | (1usize << b);
            for i in 0..dim {
                if i & mask == mask {
                    m[i][i] = c(-1.0, 0.0);
                }
            }
            m
        }
        _ => {
            let (q, _) = gate.targets();
            let single = single_matrix(gate);
            let mut m = if q == 0 { single.clone() } else { eye(1 << q) };
            if q > 0 {
                m = kron(&single, &m);
            }
            if q + 1 < n {
                m = kron(&eye(1 << (n - q - 1)), &m);
            }
            m
        }
    }
}

/// Product of all gate matrices in application order.
pub fn circuit_matrix(gates: &[Gate], n: usize) -> Mat {
    let mut u = eye(1 << n);
    for g in gates {
        u = matmul(&gate_matrix_full(g, n), &u);
    }
    u
}

/// Uniform random normalized complex vector.
pub fn random_state_vec(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..1usize << n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    for x in &mut v {
        *x /= norm;
    }
    v
}

/// A random gate drawn over all kinds with valid targets.
pub fn random_gate(n: usize, rng: &mut ChaCha8Rng) -> Gate {
    let q = rng.gen_range(0..n);
    match rng.gen_range(0..7u8) {
        0 => Gate::Ry { qubit: q, angle: rng.gen_range(-6.0..6.0) },
        1 => Gate::Rz { qubit: q, angle: rng.gen_range(-6.0..6.0) },
        2 => Gate::H { qubit: q },
        3 => Gate::T { qubit: q },
        4 => Gate::SqrtX { qubit: q },
        5 => Gate::SqrtY { qubit: q },
        _ => {
            if n < 2 {
                Gate::H { qubit: q }
            } else {
                let a = rng.gen_range(0..n);
                let mut b = rng.gen_range(0..n - 1);
                if b >= a {
                    b += 1;
                }
                Gate::Cz { a, b }
            }
        }
    }
}
