//! Pauli strings, weighted Pauli sums, and the chain Hamiltonian
//!
//! ```text
//! H = Σ_j (ω_j/2)·Z_j + λ Σ_{j<N-1} (X_j X_{j+1} + Y_j Y_{j+1})
//! ```
//!
//! The coupling weight is exactly `λ` per XX and YY term, so a Trotter block
//! built for angle θ = λ·Δt reproduces `exp(-iH₂Δt)` with no hidden factors.
//! With the conventional σ± = (σx ± iσy)/2 this equals 2λ·Σ(σ⁺σ⁻ + h.c.).

use alloc::{vec, vec::Vec};
use core::fmt;
use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::CMatrix;
use crate::state::StateVector;
use crate::Result;

/// Dense representations are capped here; beyond this the memory cost is no
/// longer desk-scale.
pub const MAX_DENSE_QUBITS: usize = 12;

/// Single-qubit Pauli operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ch = match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        };
        write!(f, "{ch}")
    }
}

/// A tensor product of Paulis, one per qubit (dense, length = qubit count).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    ops: Vec<Pauli>,
}

impl PauliString {
    /// Identity string on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliString { ops: vec![Pauli::I; n] }
    }

    /// Build from explicit per-qubit operators (qubit 0 first).
    pub fn from_ops(ops: Vec<Pauli>) -> Self {
        PauliString { ops }
    }

    /// Single non-identity operator at `qubit`.
    pub fn single(n: usize, qubit: usize, op: Pauli) -> Result<Self> {
        if qubit >= n {
            return Err(Error::QubitOutOfRange { qubit, n_qubits: n });
        }
        let mut s = Self::identity(n);
        s.ops[qubit] = op;
        Ok(s)
    }

    /// Two non-identity operators.
    pub fn pair(n: usize, q0: usize, op0: Pauli, q1: usize, op1: Pauli) -> Result<Self> {
        if q0 == q1 {
            return Err(Error::DuplicateTargets { qubit: q0 });
        }
        let mut s = Self::single(n, q0, op0)?;
        if q1 >= n {
            return Err(Error::QubitOutOfRange { qubit: q1, n_qubits: n });
        }
        s.ops[q1] = op1;
        Ok(s)
    }

    pub fn n_qubits(&self) -> usize {
        self.ops.len()
    }

    pub fn op(&self, qubit: usize) -> Pauli {
        self.ops[qubit]
    }

    pub fn ops(&self) -> &[Pauli] {
        &self.ops
    }

    pub fn is_identity(&self) -> bool {
        self.ops.iter().all(|&p| p == Pauli::I)
    }

    /// Qubits carrying a non-identity operator.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.ops
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != Pauli::I)
            .map(|(q, _)| q)
    }

    /// Bit masks used by the basis-state action: (flip, sign, y_count) with
    /// `P|i⟩ = i^y_count · (-1)^popcount(i & sign) · |i ^ flip⟩`.
    fn action_masks(&self) -> (usize, usize, u32) {
        let mut flip = 0usize;
        let mut sign = 0usize;
        let mut y_count = 0u32;
        for (q, &p) in self.ops.iter().enumerate() {
            match p {
                Pauli::I => {}
                Pauli::X => flip |= 1 << q,
                Pauli::Y => {
                    flip |= 1 << q;
                    sign |= 1 << q;
                    y_count += 1;
                }
                Pauli::Z => sign |= 1 << q,
            }
        }
        (flip, sign, y_count)
    }

    /// Exact expectation `⟨ψ|P|ψ⟩` on a normalized state.
    pub fn expectation(&self, psi: &StateVector) -> Result<f64> {
        if psi.n_qubits() != self.n_qubits() {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits(),
                found: psi.n_qubits(),
            });
        }
        let (flip, sign, y_count) = self.action_masks();
        let i_power = match y_count % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        let amps = psi.amplitudes();
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &amp) in amps.iter().enumerate() {
            let parity = ((i & sign).count_ones() & 1) as i32;
            let phase = if parity == 0 { i_power } else { -i_power };
            acc += amps[i ^ flip].conj() * phase * amp;
        }
        debug_assert!(acc.im.abs() < 1e-10, "Pauli expectation picked up an imaginary part");
        Ok(acc.re)
    }

    /// Dense matrix of the string (qubit 0 = least significant index bit).
    pub fn to_dense_matrix(&self) -> Result<CMatrix> {
        let n = self.n_qubits();
        if n > MAX_DENSE_QUBITS {
            return Err(Error::CapacityExceeded { n_qubits: n, max: MAX_DENSE_QUBITS });
        }
        let dim = 1usize << n;
        let (flip, sign, y_count) = self.action_masks();
        let i_power = match y_count % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        let mut m = CMatrix::zeros(dim);
        for col in 0..dim {
            let parity = ((col & sign).count_ones() & 1) as i32;
            let phase = if parity == 0 { i_power } else { -i_power };
            m[(col ^ flip, col)] = phase;
        }
        Ok(m)
    }
}

impl fmt::Display for PauliString {
    /// Qubit 0 printed rightmost, matching basis-state labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.ops.iter().rev() {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Real-weighted sum of Pauli strings over a fixed register.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n_qubits: usize,
    terms: Vec<(f64, PauliString)>,
}

impl PauliSum {
    pub fn new(n_qubits: usize) -> Self {
        PauliSum { n_qubits, terms: Vec::new() }
    }

    /// Append one weighted string; the coefficient must be finite and the
    /// string must match the register size.
    pub fn add_term(&mut self, coeff: f64, string: PauliString) -> Result<()> {
        if !coeff.is_finite() {
            return Err(Error::NonFinite { what: "Pauli coefficient" });
        }
        if string.n_qubits() != self.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: string.n_qubits(),
            });
        }
        self.terms.push((coeff, string));
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense Hermitian matrix of the sum.
    pub fn to_dense_matrix(&self) -> Result<CMatrix> {
        if self.n_qubits > MAX_DENSE_QUBITS {
            return Err(Error::CapacityExceeded {
                n_qubits: self.n_qubits,
                max: MAX_DENSE_QUBITS,
            });
        }
        let dim = 1usize << self.n_qubits;
        let mut m = CMatrix::zeros(dim);
        for (coeff, string) in &self.terms {
            let (flip, sign, y_count) = string.action_masks();
            let i_power = match y_count % 4 {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
            for col in 0..dim {
                let parity = ((col & sign).count_ones() & 1) as i32;
                let phase = if parity == 0 { i_power } else { -i_power };
                m[(col ^ flip, col)] += phase * *coeff;
            }
        }
        Ok(m)
    }

    /// Exact energy `⟨ψ|H|ψ⟩`; the imaginary residue of the raw inner product
    /// stays below 1e-10 for real-weighted sums and is discarded.
    pub fn expectation(&self, psi: &StateVector) -> Result<f64> {
        if psi.n_qubits() != self.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: psi.n_qubits(),
            });
        }
        let mut total = 0.0;
        for (coeff, string) in &self.terms {
            total += coeff * string.expectation(psi)?;
        }
        Ok(total)
    }
}

/// The staggered XY chain: per-site energies `ω_j` and uniform coupling `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainModel {
    omegas: Vec<f64>,
    lambda: f64,
}

impl ChainModel {
    pub fn new(omegas: Vec<f64>, lambda: f64) -> Result<Self> {
        if omegas.is_empty() {
            return Err(Error::LengthMismatch { what: "omegas", expected: 1, found: 0 });
        }
        if omegas.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite { what: "omega" });
        }
        if !lambda.is_finite() {
            return Err(Error::NonFinite { what: "lambda" });
        }
        Ok(ChainModel { omegas, lambda })
    }

    pub fn n_qubits(&self) -> usize {
        self.omegas.len()
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The chain Hamiltonian as a Pauli sum.
    pub fn hamiltonian(&self) -> PauliSum {
        let n = self.n_qubits();
        let mut h = PauliSum::new(n);
        for (j, &omega) in self.omegas.iter().enumerate() {
            let z = PauliString::single(n, j, Pauli::Z).expect("index in range");
            h.add_term(omega / 2.0, z).expect("validated term");
        }
        for j in 0..n.saturating_sub(1) {
            let xx = PauliString::pair(n, j, Pauli::X, j + 1, Pauli::X).expect("index in range");
            let yy = PauliString::pair(n, j, Pauli::Y, j + 1, Pauli::Y).expect("index in range");
            h.add_term(self.lambda, xx).expect("validated term");
            h.add_term(self.lambda, yy).expect("validated term");
        }
        h
    }

    /// Detuning δ = ω₁ - ω₂ of the first dimer.
    pub fn detuning(&self) -> f64 {
        if self.omegas.len() >= 2 {
            self.omegas[0] - self.omegas[1]
        } else {
            0.0
        }
    }
}

/// Build the chain Hamiltonian from explicit arguments.
pub fn build_hamiltonian(n: usize, omegas: &[f64], lambda: f64) -> Result<PauliSum> {
    if omegas.len() != n || n == 0 {
        return Err(Error::LengthMismatch {
            what: "omegas",
            expected: n.max(1),
            found: omegas.len(),
        });
    }
    Ok(ChainModel::new(omegas.to_vec(), lambda)?.hamiltonian())
}
