//! Dense state-vector engine: in-place gate application, exact
//! probabilities, seeded multinomial shot sampling.
//!
//! Amplitude `k` is the basis state whose bit `q` is the value of qubit `q`
//! (qubit 0 = least significant bit). Text labels therefore read with qubit
//! 0 rightmost: for n = 3, label `"010"` is amplitude index 2.

use alloc::collections::BTreeMap;
use alloc::{format, string::String, vec, vec::Vec};
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Targets};
use crate::error::Error;
use crate::gate::GateMatrix;
use crate::kernel;
use crate::GateOp;
use crate::Result;

/// Dense register state: `2^n` complex amplitudes, unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0…0⟩.
    pub fn zero(n_qubits: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        StateVector { n_qubits, amps }
    }

    /// Basis state from a bit-string label (qubit 0 rightmost).
    pub fn from_basis_label(n_qubits: usize, label: &str) -> Result<Self> {
        if label.len() != n_qubits || !label.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::BadLabel { label: String::from(label) });
        }
        let index = label
            .bytes()
            .fold(0usize, |acc, b| (acc << 1) | usize::from(b == b'1'));
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amps })
    }

    /// Adopt explicit amplitudes; the length must be a power of two and the
    /// norm within 1e-8 of one (it is then renormalized exactly).
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::InvalidState { what: "amplitude count must be a power of two" });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm.is_finite() && (norm - 1.0).abs() < 1e-8) {
            return Err(Error::InvalidState { what: "amplitudes are not normalized" });
        }
        let inv = 1.0 / norm;
        let amps = amps.into_iter().map(|a| a * inv).collect();
        Ok(StateVector { n_qubits: len.trailing_zeros() as usize, amps })
    }

    /// A random normalized state (test and search helper; not Haar-uniform).
    pub fn random<R: Rng>(n_qubits: usize, rng: &mut R) -> Self {
        let amps: Vec<Complex64> = (0..1usize << n_qubits)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let inv = 1.0 / norm;
        StateVector { n_qubits, amps: amps.into_iter().map(|a| a * inv).collect() }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Euclidean distance to another state (phase-sensitive).
    pub fn distance(&self, other: &StateVector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, op: &GateOp) -> Result<()> {
        let check = |q: usize| -> Result<()> {
            if q >= self.n_qubits {
                Err(Error::QubitOutOfRange { qubit: q, n_qubits: self.n_qubits })
            } else {
                Ok(())
            }
        };
        match (op.gate.matrix(), op.targets) {
            (GateMatrix::One(m), Targets::One(q)) => {
                check(q)?;
                kernel::apply_one_qubit(&mut self.amps, &m, q);
            }
            (GateMatrix::Two(m), Targets::Two(a, b)) => {
                check(a)?;
                check(b)?;
                kernel::apply_two_qubit(&mut self.amps, &m, a, b);
            }
            _ => unreachable!("arity checked at construction"),
        }
        Ok(())
    }

    /// Run a whole circuit (ops in order, then its global phase).
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.n_qubits() != self.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: circuit.n_qubits(),
            });
        }
        for op in circuit.ops() {
            self.apply(op)?;
        }
        let phase = circuit.global_phase();
        if phase != 0.0 {
            let factor = Complex64::new(phase.cos(), phase.sin());
            for a in &mut self.amps {
                *a *= factor;
            }
        }
        Ok(())
    }

    /// Exact outcome probabilities `|amp|²`.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// Multinomial shot sampling with a seeded ChaCha8 generator. The draw
    /// order is fixed, so identical (state, shots, seed) give identical
    /// counts on every platform.
    pub fn sample(&self, shots: u64, seed: u64) -> Result<ShotResult> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let probs = self.probabilities();
        let mut cumulative = Vec::with_capacity(probs.len());
        let mut acc = 0.0;
        for p in &probs {
            acc += p;
            cumulative.push(acc);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut index_counts = vec![0u64; probs.len()];
        for _ in 0..shots {
            let u: f64 = rng.gen::<f64>() * acc;
            let idx = cumulative.partition_point(|&c| c <= u).min(probs.len() - 1);
            index_counts[idx] += 1;
        }
        let mut counts = BTreeMap::new();
        for (idx, &count) in index_counts.iter().enumerate() {
            if count > 0 {
                counts.insert(basis_label(idx, self.n_qubits), count);
            }
        }
        Ok(ShotResult { counts, shots })
    }
}

/// Bit-string label of a basis index, qubit 0 rightmost.
pub fn basis_label(index: usize, n_qubits: usize) -> String {
    format!("{index:0width$b}", width = n_qubits)
}

/// Counted measurement outcomes of repeated shots.
#[derive(Debug, Clone, PartialEq)]
pub struct ShotResult {
    counts: BTreeMap<String, u64>,
    shots: u64,
}

impl ShotResult {
    pub fn new(counts: BTreeMap<String, u64>) -> Self {
        let shots = counts.values().sum();
        ShotResult { counts, shots }
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn count_of(&self, label: &str) -> u64 {
        self.counts.get(label).copied().unwrap_or(0)
    }

    pub fn frequency(&self, label: &str) -> f64 {
        self.count_of(label) as f64 / self.shots as f64
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}
