//! Ground-truth engine: exact `exp(-iHt)` evolution and spectra via dense
//! eigendecomposition, plus the operator-norm Trotter error.
//!
//! The sign convention is `U(t) = exp(-iHt)` everywhere; the Trotter
//! compiler inherits it.

use alloc::vec::Vec;
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::matrix::CMatrix;
use crate::pauli::{ChainModel, PauliSum};
use crate::state::StateVector;
use crate::trotter::{self, TrotterPlan};
use crate::Result;

/// Eigendecomposition guard.
pub const MAX_ORACLE_QUBITS: usize = 10;
/// Operator-norm Trotter-error guard (two dense eigenproblems per call).
pub const MAX_TROTTER_ERROR_QUBITS: usize = 8;

/// Full real spectrum of a Hermitian Pauli sum.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Ascending eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Matching orthonormal eigenvectors, one per column.
    pub eigenvectors: CMatrix,
}

impl Spectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn first_excited_energy(&self) -> f64 {
        self.eigenvalues[1]
    }

    pub fn max_energy(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }
}

fn guard(n_qubits: usize, max: usize) -> Result<()> {
    if n_qubits > max {
        Err(Error::CapacityExceeded { n_qubits, max })
    } else {
        Ok(())
    }
}

/// Exact spectrum of `h`, ascending.
pub fn spectrum(h: &PauliSum) -> Result<Spectrum> {
    guard(h.n_qubits(), MAX_ORACLE_QUBITS)?;
    let (eigenvalues, eigenvectors) = h.to_dense_matrix()?.eigh()?;
    Ok(Spectrum { eigenvalues, eigenvectors })
}

/// Dense `exp(-iHt)` built from the eigendecomposition.
pub fn exact_unitary(h: &PauliSum, t: f64) -> Result<CMatrix> {
    guard(h.n_qubits(), MAX_ORACLE_QUBITS)?;
    if !t.is_finite() {
        return Err(Error::NonFinite { what: "time" });
    }
    let Spectrum { eigenvalues, eigenvectors } = spectrum(h)?;
    let dim = eigenvectors.dim();
    // U = V · diag(e^{-iE_k t}) · V†
    let mut phased = eigenvectors.clone();
    for (k, &e) in eigenvalues.iter().enumerate() {
        let phase = Complex64::new((-e * t).cos(), (-e * t).sin());
        for r in 0..dim {
            phased[(r, k)] = eigenvectors[(r, k)] * phase;
        }
    }
    Ok(phased.mul(&eigenvectors.adjoint()))
}

/// Exact time evolution `exp(-iHt)|ψ₀⟩`.
pub fn evolve_exact(h: &PauliSum, t: f64, psi0: &StateVector) -> Result<StateVector> {
    guard(h.n_qubits(), MAX_ORACLE_QUBITS)?;
    if !t.is_finite() {
        return Err(Error::NonFinite { what: "time" });
    }
    if psi0.n_qubits() != h.n_qubits() {
        return Err(Error::QubitCountMismatch {
            expected: h.n_qubits(),
            found: psi0.n_qubits(),
        });
    }
    let Spectrum { eigenvalues, eigenvectors } = spectrum(h)?;
    let mut coeffs = eigenvectors.adjoint_matvec(psi0.amplitudes());
    for (c, &e) in coeffs.iter_mut().zip(&eigenvalues) {
        *c *= Complex64::new((-e * t).cos(), (-e * t).sin());
    }
    StateVector::from_amplitudes(eigenvectors.matvec(&coeffs))
}

/// Operator-norm (largest singular value) distance between the compiled
/// first-order Trotter circuit for `model` and exact `exp(-iHt)`.
pub fn trotter_error(model: &ChainModel, t: f64, n_steps: usize) -> Result<f64> {
    guard(model.n_qubits(), MAX_TROTTER_ERROR_QUBITS)?;
    let plan = TrotterPlan::new(model.clone(), t, n_steps, false)?;
    let circuit_u = trotter::build_full_circuit(&plan).to_unitary()?;
    let exact_u = exact_unitary(&model.hamiltonian(), t)?;
    circuit_u.sub(&exact_u).spectral_norm()
}
