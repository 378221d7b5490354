//! Measurement-basis rotations and Pauli expectation estimates.
//!
//! An X measurement is a trailing Hadamard before the Z-basis readout; a Y
//! measurement is S† then Hadamard. After rotation, any Pauli-string
//! expectation is the ±1 parity of the outcome bits on the string's support,
//! either exactly from probabilities or estimated from counts.

use alloc::{string::ToString, vec, vec::Vec};

use crate::circuit::{Circuit, GateOp};
use crate::error::Error;
use crate::gate::Gate;
use crate::pauli::{ChainModel, Pauli, PauliString};
use crate::state::{ShotResult, StateVector};
use crate::trotter::{self, TrotterPlan};
use crate::{derive_seed, Result};

/// Measurement basis for one qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    X,
    Y,
    Z,
}

impl Basis {
    pub fn label(&self) -> char {
        match self {
            Basis::X => 'X',
            Basis::Y => 'Y',
            Basis::Z => 'Z',
        }
    }
}

/// One basis choice per qubit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MeasurementSetting {
    bases: Vec<Basis>,
}

impl MeasurementSetting {
    pub fn new(bases: Vec<Basis>) -> Self {
        MeasurementSetting { bases }
    }

    /// The same basis on every qubit.
    pub fn uniform(n_qubits: usize, basis: Basis) -> Self {
        MeasurementSetting { bases: vec![basis; n_qubits] }
    }

    /// All 3^n product settings, in a fixed lexicographic order (qubit 0
    /// cycles fastest through X, Y, Z).
    pub fn all(n_qubits: usize) -> Vec<MeasurementSetting> {
        let mut out = Vec::with_capacity(3usize.pow(n_qubits as u32));
        let mut idx = vec![0u8; n_qubits];
        loop {
            let bases = idx
                .iter()
                .map(|&k| match k {
                    0 => Basis::X,
                    1 => Basis::Y,
                    _ => Basis::Z,
                })
                .collect();
            out.push(MeasurementSetting { bases });
            let mut q = 0;
            loop {
                if q == n_qubits {
                    return out;
                }
                idx[q] += 1;
                if idx[q] < 3 {
                    break;
                }
                idx[q] = 0;
                q += 1;
            }
        }
    }

    /// The setting that diagonalizes a Pauli string: the string's own basis
    /// on its support, Z elsewhere.
    pub fn for_string(string: &PauliString) -> Self {
        let bases = string
            .ops()
            .iter()
            .map(|op| match op {
                Pauli::X => Basis::X,
                Pauli::Y => Basis::Y,
                _ => Basis::Z,
            })
            .collect();
        MeasurementSetting { bases }
    }

    pub fn n_qubits(&self) -> usize {
        self.bases.len()
    }

    pub fn basis(&self, qubit: usize) -> Basis {
        self.bases[qubit]
    }

    /// Compact text form, qubit 0 rightmost (matches basis-state labels).
    pub fn text(&self) -> alloc::string::String {
        self.bases.iter().rev().map(Basis::label).collect()
    }
}

/// The rotation that maps this setting's measurement onto the Z basis:
/// X → H, Y → S† then H, Z → nothing, per qubit.
pub fn basis_rotation_circuit(setting: &MeasurementSetting) -> Circuit {
    let mut c = Circuit::new(setting.n_qubits());
    for q in 0..setting.n_qubits() {
        match setting.basis(q) {
            Basis::X => {
                c.append(GateOp::single(Gate::Hadamard, q).expect("valid")).expect("in range");
            }
            Basis::Y => {
                c.append(GateOp::single(Gate::SDagger, q).expect("valid")).expect("in range");
                c.append(GateOp::single(Gate::Hadamard, q).expect("valid")).expect("in range");
            }
            Basis::Z => {}
        }
    }
    c
}

/// ±1 parity expectation over `mask` bits from an exact distribution.
pub fn parity_expectation(probs: &[f64], mask: usize) -> f64 {
    probs
        .iter()
        .enumerate()
        .map(|(idx, p)| if (idx & mask).count_ones() % 2 == 0 { *p } else { -*p })
        .sum()
}

/// Estimate `⟨P⟩` from counts taken after the matching basis rotation: the
/// ±1 parity of outcome bits over the string's support, weighted by
/// frequency. Always in [-1, 1].
pub fn pauli_expectation_from_counts(counts: &ShotResult, string: &PauliString) -> Result<f64> {
    if counts.is_empty() {
        return Err(Error::EmptyCounts);
    }
    let mask = string.support().fold(0usize, |m, q| m | (1 << q));
    let mut acc = 0.0f64;
    for (label, &count) in counts.counts() {
        let idx = usize::from_str_radix(label, 2)
            .map_err(|_| Error::BadLabel { label: label.to_string() })?;
        let sign = if (idx & mask).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * count as f64;
    }
    Ok(acc / counts.shots() as f64)
}

/// Exact `⟨P⟩` through the rotation route: rotate a copy of the state into
/// the string's basis, then take the Z-parity expectation. Equal to the
/// direct `PauliString::expectation` for every string and state.
pub fn rotated_expectation(state: &StateVector, string: &PauliString) -> Result<f64> {
    if state.n_qubits() != string.n_qubits() {
        return Err(Error::QubitCountMismatch {
            expected: string.n_qubits(),
            found: state.n_qubits(),
        });
    }
    let mut rotated = state.clone();
    rotated.apply_circuit(&basis_rotation_circuit(&MeasurementSetting::for_string(string)))?;
    let mask = string.support().fold(0usize, |m, q| m | (1 << q));
    Ok(parity_expectation(&rotated.probabilities(), mask))
}

/// Sweep description for the two-point correlators: the evolution circuit is
/// built per λt value with the per-site phase angles `ω_j·t` held fixed.
#[derive(Debug, Clone)]
pub struct CorrelatorTemplate {
    pub n_qubits: usize,
    /// Per-qubit total phase angles ω_j·t (radians).
    pub omega_t: Vec<f64>,
    pub n_steps: usize,
    pub prepare_hadamard: bool,
    /// 0 = exact mode only.
    pub shots: u64,
    pub seed: u64,
}

/// One sweep row: nearest-neighbour ⟨XX⟩ and ⟨YY⟩, averaged over bonds,
/// exact and (when shots > 0) sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatorPoint {
    pub lambda_t: f64,
    pub xx: f64,
    pub yy: f64,
    pub xx_sampled: Option<f64>,
    pub yy_sampled: Option<f64>,
}

/// Evaluate the correlators over a list of λt values (radians).
pub fn correlator_sweep(
    template: &CorrelatorTemplate,
    lambda_ts: &[f64],
) -> Result<Vec<CorrelatorPoint>> {
    if template.n_qubits < 2 {
        return Err(Error::QubitCountMismatch { expected: 2, found: template.n_qubits });
    }
    if template.omega_t.len() != template.n_qubits {
        return Err(Error::LengthMismatch {
            what: "omega_t",
            expected: template.n_qubits,
            found: template.omega_t.len(),
        });
    }
    let n = template.n_qubits;
    let mut out = Vec::with_capacity(lambda_ts.len());
    for (i, &lambda_t) in lambda_ts.iter().enumerate() {
        // t = 1 makes λ·dt sum to λt across the steps, with ω_j·t fixed.
        let model = ChainModel::new(template.omega_t.clone(), lambda_t)?;
        let plan = TrotterPlan::new(model, 1.0, template.n_steps, template.prepare_hadamard)?;
        let mut state = StateVector::zero(n);
        state.apply_circuit(&trotter::build_full_circuit(&plan))?;

        let mut point = CorrelatorPoint {
            lambda_t,
            xx: 0.0,
            yy: 0.0,
            xx_sampled: None,
            yy_sampled: None,
        };
        for (slot, basis) in [(0usize, Basis::X), (1, Basis::Y)] {
            let mut rotated = state.clone();
            rotated.apply_circuit(&basis_rotation_circuit(&MeasurementSetting::uniform(n, basis)))?;
            let probs = rotated.probabilities();
            let bonds = (n - 1) as f64;
            let exact: f64 = (0..n - 1)
                .map(|q| parity_expectation(&probs, (1 << q) | (1 << (q + 1))))
                .sum::<f64>()
                / bonds;
            let sampled = if template.shots > 0 {
                let counts =
                    rotated.sample(template.shots, derive_seed(template.seed, (2 * i + slot) as u64))?;
                let mut acc = 0.0;
                for q in 0..n - 1 {
                    let p = match basis {
                        Basis::X => Pauli::X,
                        Basis::Y => Pauli::Y,
                        Basis::Z => Pauli::Z,
                    };
                    let string = PauliString::pair(n, q, p, q + 1, p)?;
                    acc += pauli_expectation_from_counts(&counts, &string)?;
                }
                Some(acc / bonds)
            } else {
                None
            };
            match basis {
                Basis::X => {
                    point.xx = exact;
                    point.xx_sampled = sampled;
                }
                Basis::Y => {
                    point.yy = exact;
                    point.yy_sampled = sampled;
                }
                Basis::Z => unreachable!(),
            }
        }
        out.push(point);
    }
    Ok(out)
}
