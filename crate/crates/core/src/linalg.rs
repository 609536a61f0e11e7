//! Minimal dense complex linear algebra: just enough for building target
//! unitaries and comparing circuits against them.
//!
//! Matrices are stored column-major. Sizes stay small here (≤ 2^8 rows for
//! the shipped experiment configurations), so the routines favor clarity
//! over blocking.

use crate::error::CoreError;
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense square complex matrix, column-major: entry (row, col) lives at
/// `col * dim + row`.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_columns(columns: Vec<Vec<Complex64>>) -> Self {
        let dim = columns.len();
        let mut data = Vec::with_capacity(dim * dim);
        for col in &columns {
            assert_eq!(col.len(), dim, "columns must form a square matrix");
            data.extend_from_slice(col);
        }
        CMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &[Complex64] {
        &self.data[c * self.dim..(c + 1) * self.dim]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim);
        for c in 0..self.dim {
            for r in 0..self.dim {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for c in 0..n {
            for k in 0..n {
                let f = rhs[(k, c)];
                if f == ZERO {
                    continue;
                }
                for r in 0..n {
                    out[(r, c)] += self[(r, k)] * f;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![ZERO; self.dim];
        for c in 0..self.dim {
            let f = v[c];
            if f == ZERO {
                continue;
            }
            for r in 0..self.dim {
                out[r] += self[(r, c)] * f;
            }
        }
        out
    }

    pub fn scale(&self, f: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * f).collect(),
        }
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Frobenius norm: 2-norm of the vectorized matrix.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius inner product ⟨A, B⟩ = tr(A†B).
    pub fn frobenius_inner(&self, rhs: &CMatrix) -> Complex64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// ‖A − A†‖_F, a Hermiticity residual.
    pub fn hermiticity_error(&self) -> f64 {
        self.sub(&self.adjoint()).frobenius_norm()
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[c * self.dim + r]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[c * self.dim + r]
    }
}

/// Eigendecomposition H = V diag(λ) V† of a Hermitian matrix via cyclic
/// Jacobi rotations. Returns (λ, V) with the eigenvectors in V's columns.
///
/// Exact enough at these sizes: off-diagonal mass is driven below
/// 1e-14·‖H‖_F, so reconstruction residuals sit near machine precision.
pub fn hermitian_eigen(h: &CMatrix) -> Result<(Vec<f64>, CMatrix), CoreError> {
    let n = h.dim();
    if h.hermiticity_error() > 1e-9 * (1.0 + h.frobenius_norm()) {
        return Err(CoreError::Numerical(
            "hermitian_eigen called on a non-Hermitian matrix".into(),
        ));
    }
    let mut a = h.clone();
    // Symmetrize exactly so rounding in the input cannot bias the sweep.
    for p in 0..n {
        a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
        for q in (p + 1)..n {
            let avg = (a[(p, q)] + a[(q, p)].conj()) * 0.5;
            a[(p, q)] = avg;
            a[(q, p)] = avg.conj();
        }
    }
    let mut v = CMatrix::identity(n);
    let scale = h.frobenius_norm().max(1.0);
    let tol = 1e-14 * scale;
    const MAX_SWEEPS: usize = 60;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += a[(p, q)].norm_sqr();
                }
            }
            (2.0 * s).sqrt()
        };
        if off <= tol {
            let lambda: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
            return Ok((lambda, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let g = a[(p, q)];
                let m = g.norm();
                if m <= tol / (n as f64) {
                    continue;
                }
                let phase = g / m;
                let alpha = a[(p, p)].re;
                let beta = a[(q, q)].re;
                // tan(2ϑ) choice that zeroes the (p,q) entry; smaller root
                // keeps |t| ≤ 1 for stability.
                let theta = (beta - alpha) / (2.0 * m);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let sp = phase * s; // J[p][q] = s·e^{iφ}, J[q][p] = −s·e^{−iφ}

                // A ← J† A J, touching only rows/cols p and q.
                for r in 0..n {
                    let arp = a[(r, p)];
                    let arq = a[(r, q)];
                    a[(r, p)] = arp * c - arq * sp.conj();
                    a[(r, q)] = arp * sp + arq * c;
                }
                for col in 0..n {
                    let apc = a[(p, col)];
                    let aqc = a[(q, col)];
                    a[(p, col)] = apc * c - aqc * sp;
                    a[(q, col)] = apc * sp.conj() + aqc * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

                for r in 0..n {
                    let vrp = v[(r, p)];
                    let vrq = v[(r, q)];
                    v[(r, p)] = vrp * c - vrq * sp.conj();
                    v[(r, q)] = vrp * sp + vrq * c;
                }
            }
        }
    }
    Err(CoreError::Numerical(format!(
        "Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps (dim {n})"
    )))
}
