//! Circuit intermediate representation: an ordered list of gate applications
//! on an N-qubit register, plus composition and dense unitary extraction.
//!
//! A circuit also carries a global phase (radians). Layers compiled from
//! `U1` gates are only equal to the intended `exp(-i(ω/2)Z·dt)` factors up to
//! a known phase, and the operator-norm comparisons against exact evolution
//! need that phase tracked rather than dropped.

use alloc::{format, string::String, vec::Vec};
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::gate::{Gate, GateMatrix};
use crate::matrix::CMatrix;
use crate::Result;

/// Dense unitary extraction is capped here.
pub const MAX_UNITARY_QUBITS: usize = 10;

/// Qubits a gate op acts on, in gate order (first = block bit 0 = control
/// for controlled gates).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Targets {
    One(usize),
    Two(usize, usize),
}

impl Targets {
    pub fn arity(&self) -> usize {
        match self {
            Targets::One(_) => 1,
            Targets::Two(_, _) => 2,
        }
    }

    pub fn max_qubit(&self) -> usize {
        match *self {
            Targets::One(q) => q,
            Targets::Two(a, b) => a.max(b),
        }
    }
}

/// One gate application.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    pub gate: Gate,
    pub targets: Targets,
}

impl GateOp {
    /// Build an op, checking gate arity and target distinctness. Range
    /// checks happen at `Circuit::append`, where the register size is known.
    pub fn new(gate: Gate, targets: Targets) -> Result<Self> {
        if gate.arity() != targets.arity() {
            return Err(Error::LengthMismatch {
                what: "gate targets",
                expected: gate.arity(),
                found: targets.arity(),
            });
        }
        if let Targets::Two(a, b) = targets {
            if a == b {
                return Err(Error::DuplicateTargets { qubit: a });
            }
        }
        Ok(GateOp { gate, targets })
    }

    /// Single-qubit op.
    pub fn single(gate: Gate, qubit: usize) -> Result<Self> {
        Self::new(gate, Targets::One(qubit))
    }

    /// Two-qubit op; for controlled gates `a` is the control.
    pub fn two(gate: Gate, a: usize, b: usize) -> Result<Self> {
        Self::new(gate, Targets::Two(a, b))
    }
}

/// Ordered gate list over a fixed register. The empty circuit is identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
    global_phase: f64,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit { n_qubits, ops: Vec::new(), global_phase: 0.0 }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn global_phase(&self) -> f64 {
        self.global_phase
    }

    /// Add `phase` (radians) to the circuit's global phase.
    pub fn add_global_phase(&mut self, phase: f64) {
        self.global_phase += phase;
    }

    /// Append an op after bounds-checking its targets.
    pub fn append(&mut self, op: GateOp) -> Result<()> {
        let check = |q: usize| -> Result<()> {
            if q >= self.n_qubits {
                Err(Error::QubitOutOfRange { qubit: q, n_qubits: self.n_qubits })
            } else {
                Ok(())
            }
        };
        match op.targets {
            Targets::One(q) => check(q)?,
            Targets::Two(a, b) => {
                check(a)?;
                check(b)?;
            }
        }
        self.ops.push(op);
        Ok(())
    }

    /// Convenience: build and append in one call.
    pub fn push(&mut self, gate: Gate, targets: Targets) -> Result<()> {
        self.append(GateOp::new(gate, targets)?)
    }

    /// `self` then `other`; global phases add.
    pub fn concat(&self, other: &Circuit) -> Result<Circuit> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: other.n_qubits,
            });
        }
        let mut out = self.clone();
        out.ops.extend(other.ops.iter().cloned());
        out.global_phase += other.global_phase;
        Ok(out)
    }

    /// Remove adjacent identical CNOT pairs (they multiply to identity).
    /// Returns the number of ops removed.
    pub fn cancel_adjacent_cnot_pairs(&mut self) -> usize {
        let before = self.ops.len();
        let mut kept: Vec<GateOp> = Vec::with_capacity(before);
        for op in self.ops.drain(..) {
            let cancels = matches!(
                (kept.last(), &op),
                (
                    Some(GateOp { gate: Gate::Cnot, targets: prev }),
                    GateOp { gate: Gate::Cnot, targets: cur },
                ) if prev == cur
            );
            if cancels {
                kept.pop();
            } else {
                kept.push(op);
            }
        }
        self.ops = kept;
        before - self.ops.len()
    }

    /// Dense unitary: the product of embedded gate matrices in application
    /// order (later ops multiply on the left), times `e^{i·global_phase}`.
    pub fn to_unitary(&self) -> Result<CMatrix> {
        if self.n_qubits > MAX_UNITARY_QUBITS {
            return Err(Error::CapacityExceeded {
                n_qubits: self.n_qubits,
                max: MAX_UNITARY_QUBITS,
            });
        }
        let mut u = CMatrix::identity(1 << self.n_qubits);
        for op in &self.ops {
            match (op.gate.matrix(), op.targets) {
                (GateMatrix::One(m), Targets::One(q)) => u.apply_one_qubit(&m, q),
                (GateMatrix::Two(m), Targets::Two(a, b)) => u.apply_two_qubit(&m, a, b),
                _ => unreachable!("arity checked at construction"),
            }
        }
        if self.global_phase != 0.0 {
            let phase = Complex64::new(self.global_phase.cos(), self.global_phase.sin());
            u = u.scale(phase);
        }
        Ok(u)
    }

    /// Plain-text dump, one op per line: `name [params...] qubits...`.
    /// Floats print in Rust's shortest round-trip form; ordering is the
    /// application order. A nonzero global phase adds a `phase` line after
    /// the header.
    pub fn dump(&self) -> String {
        let mut out = format!("qubits {}\n", self.n_qubits);
        if self.global_phase != 0.0 {
            out.push_str(&format!("phase {}\n", self.global_phase));
        }
        for op in &self.ops {
            out.push_str(op.gate.name());
            for p in op.gate.params() {
                out.push_str(&format!(" {p}"));
            }
            match op.targets {
                Targets::One(q) => out.push_str(&format!(" {q}\n")),
                Targets::Two(a, b) => out.push_str(&format!(" {a} {b}\n")),
            }
        }
        out
    }
}
