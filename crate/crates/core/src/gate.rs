//! Gate instances and their fixed 2×2 matrices.

use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// One gate instance: a rotation with an explicit angle, a fixed single-qubit
/// gate, or the two-qubit CZ. CZ is the only two-target kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    Ry { qubit: usize, angle: f64 },
    Rz { qubit: usize, angle: f64 },
    H { qubit: usize },
    T { qubit: usize },
    SqrtX { qubit: usize },
    SqrtY { qubit: usize },
    Cz { a: usize, b: usize },
}

impl Gate {
    /// Qubit indices the gate touches (one or, for CZ, two).
    pub fn targets(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::Ry { qubit, .. }
            | Gate::Rz { qubit, .. }
            | Gate::H { qubit }
            | Gate::T { qubit }
            | Gate::SqrtX { qubit }
            | Gate::SqrtY { qubit } => (qubit, None),
            Gate::Cz { a, b } => (a, Some(b)),
        }
    }

    /// The 2×2 matrix of a single-qubit gate, row-major. CZ has no 2×2 form.
    pub fn single_qubit_matrix(&self) -> Option<[Complex64; 4]> {
        match *self {
            Gate::Ry { angle, .. } => Some(ry_matrix(angle)),
            Gate::Rz { angle, .. } => Some(rz_matrix(angle)),
            Gate::H { .. } => Some(H_MATRIX),
            Gate::T { .. } => Some(t_matrix()),
            Gate::SqrtX { .. } => Some(SQRT_X_MATRIX),
            Gate::SqrtY { .. } => Some(SQRT_Y_MATRIX),
            Gate::Cz { .. } => None,
        }
    }
}

/// Ry(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].
pub fn ry_matrix(theta: f64) -> [Complex64; 4] {
    let (s, c) = (theta / 2.0).sin_cos();
    [
        Complex64::new(c, 0.0),
        Complex64::new(-s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(c, 0.0),
    ]
}

/// Rz(θ) = diag(e^{−iθ/2}, e^{iθ/2}).
pub fn rz_matrix(theta: f64) -> [Complex64; 4] {
    let half = theta / 2.0;
    [
        Complex64::from_polar(1.0, -half),
        ZERO,
        ZERO,
        Complex64::from_polar(1.0, half),
    ]
}

/// H = (1/√2)[[1, 1], [1, −1]].
pub const H_MATRIX: [Complex64; 4] = [
    Complex64::new(FRAC_1_SQRT_2, 0.0),
    Complex64::new(FRAC_1_SQRT_2, 0.0),
    Complex64::new(FRAC_1_SQRT_2, 0.0),
    Complex64::new(-FRAC_1_SQRT_2, 0.0),
];

/// T = diag(1, e^{iπ/4}).
fn t_matrix() -> [Complex64; 4] {
    [
        Complex64::new(1.0, 0.0),
        ZERO,
        ZERO,
        Complex64::from_polar(1.0, FRAC_PI_4),
    ]
}

/// √X = ½[[1+i, 1−i], [1−i, 1+i]]; squares to X exactly.
pub const SQRT_X_MATRIX: [Complex64; 4] = [
    Complex64::new(0.5, 0.5),
    Complex64::new(0.5, -0.5),
    Complex64::new(0.5, -0.5),
    Complex64::new(0.5, 0.5),
];

/// √Y = ½[[1+i, −1−i], [1+i, 1+i]]; squares to Y exactly.
pub const SQRT_Y_MATRIX: [Complex64; 4] = [
    Complex64::new(0.5, 0.5),
    Complex64::new(-0.5, -0.5),
    Complex64::new(0.5, 0.5),
    Complex64::new(0.5, 0.5),
];

/// Conjugate transpose of a row-major 2×2.
pub fn adjoint_2x2(m: &[Complex64; 4]) -> [Complex64; 4] {
    [m[0].conj(), m[2].conj(), m[1].conj(), m[3].conj()]
}
