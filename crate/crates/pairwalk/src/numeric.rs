//! Dense numeric kernels: Hermitian eigenvalues via cyclic Jacobi rotations
//! and a direct discrete Fourier transform for arbitrary series lengths.
//!
//! Everything here is double precision and allocation-per-call; the matrices
//! involved are at most a few dozen rows, so robustness wins over asymptotics.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Absolute tolerance on |m[r][c] - conj(m[c][r])| accepted by [`HermitianMatrix::new`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Relative off-diagonal Frobenius target for the Jacobi sweep.
const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 60;

/// Dense Hermitian matrix, row-major storage.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Validates the Hermitian symmetry of `data` (row-major, `dim * dim`
    /// entries) within [`HERMITIAN_TOL`]. NaN entries fail the check.
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != dim * dim {
            return Err(Error::MatrixShape {
                expected: dim * dim,
                got: data.len(),
            });
        }
        let mut defect: f64 = 0.0;
        for r in 0..dim {
            for c in r..dim {
                let d = (data[r * dim + c] - data[c * dim + r].conj()).norm();
                if !(d <= defect) {
                    // NaN lands here as well and poisons the defect.
                    defect = d;
                }
            }
        }
        if !(defect <= HERMITIAN_TOL) {
            return Err(Error::NotHermitian { defect });
        }
        Ok(Self { dim, data })
    }

    /// Builds the matrix entry-by-entry from `f(row, col)`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Result<Self> {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self::new(dim, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// Trace; real up to the Hermitian defect.
    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entry(i, i).re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi: each rotation first phases the pivot column so the pivot
/// entry becomes real, then applies the classical symmetric plane rotation
/// that annihilates it. Hermitian symmetry is kept exact by mirroring the
/// updated columns onto the rows. Converges quadratically; the loop stops
/// once the off-diagonal Frobenius norm falls below `1e-13` of the matrix
/// norm.
pub fn hermitian_eigenvalues(m: &HermitianMatrix) -> Result<Vec<f64>> {
    let n = m.dim;
    let mut a = m.data.clone();
    let scale = m.frobenius_norm();
    if scale == 0.0 || n == 1 {
        let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
        return Ok(eig);
    }

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > JACOBI_TOL * scale {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::EigenNoConvergence { sweeps, off });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eig)
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[r * n + c].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating a[p][q] (p < q).
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    // Unitary D = diag(..., e^{-i arg}, ...) at q makes the pivot real.
    let phase = apq / r; // e^{i arg(apq)}
    let phase_conj = phase.conj();
    for x in 0..n {
        a[x * n + q] *= phase_conj;
    }
    for x in 0..n {
        a[q * n + x] *= phase;
    }

    // Classical symmetric rotation zeroing the (now real) pivot.
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for x in 0..n {
        if x == p || x == q {
            continue;
        }
        let u = a[x * n + p];
        let v = a[x * n + q];
        let xp = u * c - v * s;
        let xq = u * s + v * c;
        a[x * n + p] = xp;
        a[x * n + q] = xq;
        a[p * n + x] = xp.conj();
        a[q * n + x] = xq.conj();
    }
    a[p * n + p] = Complex64::new(c * c * app - 2.0 * s * c * r + s * s * aqq, 0.0);
    a[q * n + q] = Complex64::new(s * s * app + 2.0 * s * c * r + c * c * aqq, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
}

/// Discrete Fourier transform, X[k] = sum_n x[n] e^{-2 pi i k n / L}.
///
/// Direct evaluation with a precomputed twiddle table indexed mod L; accepts
/// any length, which keeps the bin-index-to-frequency map exact for series
/// whose length is not a power of two. O(L^2), comfortably fast for the
/// series lengths this crate analyzes.
pub fn dft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    let l = x.len();
    if l == 0 {
        return Err(Error::EmptySeries);
    }
    let twiddle: Vec<Complex64> = (0..l)
        .map(|m| {
            let angle = -2.0 * PI * (m as f64) / (l as f64);
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    let mut out = Vec::with_capacity(l);
    for k in 0..l {
        let mut acc = Complex64::new(0.0, 0.0);
        for (n, &xn) in x.iter().enumerate() {
            acc += xn * twiddle[(k * n) % l];
        }
        out.push(acc);
    }
    Ok(out)
}
