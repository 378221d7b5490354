//! Dense complex matrices: the exact, slow path.
//!
//! Everything here exists to cross-check the state-vector kernel and to back
//! the eigendecomposition-based oracles. Storage is column-major so that a
//! column can be handed to the same gate kernels the state vector uses.

use alloc::{vec, vec::Vec};
use core::ops::{Index, IndexMut};
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::kernel;
use crate::Result;

/// Square complex matrix, column-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        CMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    /// Identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build entry-wise from a function of (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for c in 0..dim {
            for r in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Borrow one column as a slice.
    pub fn column(&self, c: usize) -> &[Complex64] {
        &self.data[c * self.dim..(c + 1) * self.dim]
    }

    /// Matrix-vector product `self * v`.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (c, &vc) in v.iter().enumerate() {
            if vc == Complex64::new(0.0, 0.0) {
                continue;
            }
            let col = self.column(c);
            for (o, &m) in out.iter_mut().zip(col) {
                *o += m * vc;
            }
        }
        out
    }

    /// Adjoint (conjugate transpose) matrix-vector product `self† * v`.
    pub fn adjoint_matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|c| {
                self.column(c)
                    .iter()
                    .zip(v)
                    .map(|(&m, &vk)| m.conj() * vk)
                    .sum()
            })
            .collect()
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = Self::zeros(self.dim);
        for c in 0..self.dim {
            let col = self.matvec(rhs.column(c));
            out.data[c * self.dim..(c + 1) * self.dim].copy_from_slice(&col);
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    /// Entry-wise difference `self - rhs`.
    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (o, &r) in out.data.iter_mut().zip(&rhs.data) {
            *o -= r;
        }
        out
    }

    /// Multiply every entry by a scalar.
    pub fn scale(&self, s: Complex64) -> CMatrix {
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o *= s;
        }
        out
    }

    /// Largest entry-wise absolute difference to `rhs`.
    pub fn max_abs_diff(&self, rhs: &CMatrix) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self† self - I‖_max ≤ tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint().mul(self).max_abs_diff(&Self::identity(self.dim)) <= tol
    }

    /// `‖self - self†‖_max ≤ tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// Apply a 2x2 gate to qubit `q` of every column (left-multiplication by
    /// the embedded gate).
    pub(crate) fn apply_one_qubit(&mut self, m: &[[Complex64; 2]; 2], q: usize) {
        let dim = self.dim;
        for col in self.data.chunks_exact_mut(dim) {
            kernel::apply_one_qubit(col, m, q);
        }
    }

    /// Apply a 4x4 gate to qubits `(q0, q1)` of every column.
    pub(crate) fn apply_two_qubit(&mut self, m: &[[Complex64; 4]; 4], q0: usize, q1: usize) {
        let dim = self.dim;
        for col in self.data.chunks_exact_mut(dim) {
            kernel::apply_two_qubit(col, m, q0, q1);
        }
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
    ///
    /// Returns eigenvalues in ascending order and the matching orthonormal
    /// eigenvectors as columns. The input is taken as Hermitian; only its
    /// Hermitian part determines the result.
    pub fn eigh(&self) -> Result<(Vec<f64>, CMatrix)> {
        let n = self.dim;
        // Work on the exactly-Hermitian part so rounding in the caller cannot
        // leave a skew component behind.
        let mut a = Self::from_fn(n, |r, c| (self[(r, c)] + self[(c, r)].conj()) * 0.5);
        let mut v = Self::identity(n);

        let scale = a.frobenius_norm();
        if scale == 0.0 {
            return Ok((vec![0.0; n], v));
        }
        let stop = scale * 5e-16;
        let rotate_above = scale * 1e-18;

        for _sweep in 0..100 {
            let mut off_max = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    let h_c = a[(p, q)];
                    let h = h_c.norm();
                    off_max = off_max.max(h);
                    if h <= rotate_above {
                        continue;
                    }
                    let app = a[(p, p)].re;
                    let aqq = a[(q, q)].re;
                    let omega = h_c / h;
                    let tau = (aqq - app) / (2.0 * h);
                    let t = if tau >= 0.0 {
                        1.0 / (tau + (1.0 + tau * tau).sqrt())
                    } else {
                        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let s_omega = omega * s;
                    let s_omega_conj = omega.conj() * s;

                    for k in 0..n {
                        if k == p || k == q {
                            continue;
                        }
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        let new_kp = akp * c - akq * s_omega_conj;
                        let new_kq = akp * s_omega + akq * c;
                        a[(k, p)] = new_kp;
                        a[(p, k)] = new_kp.conj();
                        a[(k, q)] = new_kq;
                        a[(q, k)] = new_kq.conj();
                    }
                    a[(p, p)] = Complex64::new(app - t * h, 0.0);
                    a[(q, q)] = Complex64::new(aqq + t * h, 0.0);
                    a[(p, q)] = Complex64::new(0.0, 0.0);
                    a[(q, p)] = Complex64::new(0.0, 0.0);

                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * c - vkq * s_omega_conj;
                        v[(k, q)] = vkp * s_omega + vkq * c;
                    }
                }
            }
            if off_max <= stop {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&i, &j| {
                    a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalues")
                });
                let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
                let vectors = Self::from_fn(n, |r, c| v[(r, order[c])]);
                return Ok((eigenvalues, vectors));
            }
        }
        Err(Error::InvalidState { what: "Jacobi eigensolver did not converge" })
    }

    /// Largest singular value, via the Hermitian eigenproblem of `self† self`.
    pub fn spectral_norm(&self) -> Result<f64> {
        let gram = self.adjoint().mul(self);
        let (eigs, _) = gram.eigh()?;
        Ok(eigs.last().copied().unwrap_or(0.0).max(0.0).sqrt())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[c * self.dim + r]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[c * self.dim + r]
    }
}
