//! Dense complex Hermitian matrices and a cyclic Jacobi eigensolver.
//!
//! Every spectrum in the crate goes through [`hermitian_eigensystem`]. The
//! matrices involved are small (4x4 boson blocks, single-particle lattice
//! Hamiltonians of a few dozen sites), so the solver favours robustness over
//! asymptotic speed: complex Jacobi rotations are applied sweep by sweep until
//! the off-diagonal Frobenius mass drops below `1e-14 * ||M||_F`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexScalar = Complex64;

/// Relative Hermiticity tolerance accepted by [`HermitianMatrix::from_entries`].
pub const HERMITICITY_TOLERANCE: f64 = 1e-14;

/// Jacobi stopping criterion relative to the Frobenius norm of the input.
pub const JACOBI_TOLERANCE: f64 = 1e-14;

const MAX_SWEEPS: usize = 100;

#[inline]
pub fn c64(re: f64, im: f64) -> ComplexScalar {
    Complex64::new(re, im)
}

/// Dense Hermitian matrix stored row-major.
///
/// Construction symmetrizes the input so that `m[j][i]` is exactly the
/// conjugate of `m[i][j]` and the diagonal is exactly real.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<ComplexScalar>,
}

impl HermitianMatrix {
    pub fn from_entries(dim: usize, entries: Vec<ComplexScalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::ShapeMismatch {
                dim,
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let mut scale = 0.0_f64;
        for (idx, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    row: idx / dim,
                    col: idx % dim,
                });
            }
            scale = scale.max(z.norm());
        }
        let tol = HERMITICITY_TOLERANCE * scale;
        for i in 0..dim {
            for j in i..dim {
                let a = entries[i * dim + j];
                let b = entries[j * dim + i];
                if (a - b.conj()).norm() > tol {
                    return Err(Error::NotHermitian {
                        row: i,
                        col: j,
                        value: format!("{a}"),
                        mirror: format!("{b}"),
                    });
                }
            }
        }
        let mut m = Self { dim, entries };
        m.symmetrize();
        Ok(m)
    }

    /// Builds a matrix from the upper triangle produced by `f(i, j)` for `i <= j`.
    pub fn from_upper_fn(dim: usize, mut f: impl FnMut(usize, usize) -> ComplexScalar) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = vec![ComplexScalar::default(); dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let z = f(i, j);
                entries[i * dim + j] = z;
                entries[j * dim + i] = z.conj();
            }
        }
        Self::from_entries(dim, entries)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().map(|&x| c64(x, 0.0))).collect();
        Self::from_entries(dim, entries)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let dim = values.len();
        let mut entries = vec![ComplexScalar::default(); dim * dim];
        for (i, &v) in values.iter().enumerate() {
            entries[i * dim + i] = c64(v, 0.0);
        }
        Self::from_entries(dim, entries)
    }

    fn symmetrize(&mut self) {
        let n = self.dim;
        for i in 0..n {
            self.entries[i * n + i].im = 0.0;
            for j in (i + 1)..n {
                let avg = (self.entries[i * n + j] + self.entries[j * n + i].conj()) * 0.5;
                self.entries[i * n + j] = avg;
                self.entries[j * n + i] = avg.conj();
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i * n + j] * v[j]).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        frobenius_norm(&self.entries)
    }
}

/// Square root of the sum of squared moduli.
pub fn frobenius_norm(entries: &[ComplexScalar]) -> f64 {
    entries.iter().map(|z| z.norm_sqr()).fold(0.0, |a, b| a + b).sqrt()
}

#[derive(Debug, Clone)]
pub struct Eigensystem {
    /// Ascending.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<ComplexScalar>>,
}

pub fn hermitian_eigensystem(m: &HermitianMatrix) -> Result<Eigensystem> {
    let n = m.dim;
    let mut a = m.entries.clone();
    let mut v = vec![ComplexScalar::default(); n * n];
    for i in 0..n {
        v[i * n + i] = c64(1.0, 0.0);
    }
    let norm = m.frobenius_norm();
    let target = JACOBI_TOLERANCE * norm;

    let off_mass = |a: &[ComplexScalar]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    let mut off = off_mass(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                if rotate(&mut a, &mut v, n, p, q) {
                    rotated = true;
                }
            }
        }
        off = off_mass(&a);
        // Remaining entries are below the rounding floor of the diagonal.
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    Ok(Eigensystem { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p][q]`. Returns false when the
/// pivot is already negligible.
fn rotate(a: &mut [ComplexScalar], v: &mut [ComplexScalar], n: usize, p: usize, q: usize) -> bool {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return false;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    if mag <= f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[p * n + q] = ComplexScalar::default();
        a[q * n + p] = ComplexScalar::default();
        return false;
    }
    let phase = apq / mag;
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = diag(1, conj(phase)) * [[c, s], [-s, c]]
    let jpp = c64(c, 0.0);
    let jpq = c64(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * jpp + akq * jqp;
        a[k * n + q] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = jpp.conj() * apk + jqp.conj() * aqk;
        a[q * n + k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[p * n + q] = ComplexScalar::default();
    a[q * n + p] = ComplexScalar::default();
    a[p * n + p].im = 0.0;
    a[q * n + q].im = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = vkp * jpp + vkq * jqp;
        v[k * n + q] = vkp * jpq + vkq * jqq;
    }
    true
}

/// Eigenvalues only, ascending.
pub fn eigenvalues(m: &HermitianMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigensystem(m)?.values)
}

/// Largest elementwise difference between two lists after sorting both.
/// Lists of different length compare as infinitely far apart.
pub fn sorted_max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// True when every element of `needles` occurs in `haystack` within `tol`.
pub fn contains_all(haystack: &[f64], needles: &[f64], tol: f64) -> bool {
    needles.iter().all(|x| haystack.iter().any(|y| (x - y).abs() <= tol))
}
