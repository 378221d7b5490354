//! First-order Trotter compiler for the chain Hamiltonian.
//!
//! Each step applies the on-site phase layer (U1 per qubit) and then, bond
//! by bond, an XX block and a YY block at angle θ = λ·Δt:
//!
//! - XX block: `CNOT(q→q+1) · U3(2θ, -π/2, π/2) on q · CNOT(q→q+1)`
//! - YY block: `CNOT(q→q+1) · CU3(2θ, -π/2, π/2) · anti-CU3(2θ, π/2, -π/2)
//!   · CNOT(q→q+1)`, both controlled gates with control q+1 / target q
//!
//! The factor 2 on the U3 polar angle is the half-angle convention: the
//! blocks above equal `exp(-iθ·XX)` and `exp(-iθ·YY)` exactly, which is the
//! property the tests pin down. Adjacent identical CNOTs between the XX and
//! YY block of one bond cancel and are removed from the assembled circuit.

use core::f64::consts::FRAC_PI_2;

use crate::circuit::{Circuit, GateOp};
use crate::error::Error;
use crate::gate::Gate;
use crate::pauli::ChainModel;
use crate::Result;

/// U3 polar angle per block angle θ (half-angle convention).
const U3_ANGLE_FACTOR: f64 = 2.0;

/// A compiled evolution request: model, total time, step count, and whether
/// to open with the Hadamard preparation on qubit 0.
#[derive(Debug, Clone, PartialEq)]
pub struct TrotterPlan {
    model: ChainModel,
    t: f64,
    n_steps: usize,
    initial_hadamard: bool,
}

impl TrotterPlan {
    pub fn new(model: ChainModel, t: f64, n_steps: usize, initial_hadamard: bool) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite { what: "time" });
        }
        if n_steps == 0 {
            return Err(Error::LengthMismatch { what: "n_steps", expected: 1, found: 0 });
        }
        Ok(TrotterPlan { model, t, n_steps, initial_hadamard })
    }

    pub fn model(&self) -> &ChainModel {
        &self.model
    }

    pub fn n_qubits(&self) -> usize {
        self.model.n_qubits()
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Δt = t / n_steps (single definition, used everywhere).
    pub fn dt(&self) -> f64 {
        self.t / self.n_steps as f64
    }

    pub fn initial_hadamard(&self) -> bool {
        self.initial_hadamard
    }
}

/// One on-site layer: `u1(ω_j·dt)` on every qubit plus the global phase
/// `-Σ_j ω_j·dt/2`, together exactly `Π_j exp(-i(ω_j/2)Z_j·dt)`.
pub fn build_h1_layer(plan: &TrotterPlan) -> Circuit {
    let dt = plan.dt();
    let mut layer = Circuit::new(plan.n_qubits());
    for (j, &omega) in plan.model().omegas().iter().enumerate() {
        layer
            .append(GateOp::single(Gate::U1 { theta: omega * dt }, j).expect("valid index"))
            .expect("in range");
        layer.add_global_phase(-omega * dt / 2.0);
    }
    layer
}

fn bond_guard(n_qubits: usize, bond: usize) -> Result<()> {
    if bond + 1 >= n_qubits {
        return Err(Error::QubitOutOfRange { qubit: bond + 1, n_qubits });
    }
    Ok(())
}

/// Circuit equal to `exp(-iθ·X_q X_{q+1})` on an `n_qubits` register.
pub fn build_xx_block(n_qubits: usize, bond: usize, theta: f64) -> Result<Circuit> {
    bond_guard(n_qubits, bond)?;
    let (q, r) = (bond, bond + 1);
    let mut c = Circuit::new(n_qubits);
    c.append(GateOp::two(Gate::Cnot, q, r)?)?;
    c.append(GateOp::single(
        Gate::U3 { theta: U3_ANGLE_FACTOR * theta, phi: -FRAC_PI_2, lambda: FRAC_PI_2 },
        q,
    )?)?;
    c.append(GateOp::two(Gate::Cnot, q, r)?)?;
    Ok(c)
}

/// Circuit equal to `exp(-iθ·Y_q Y_{q+1})` on an `n_qubits` register.
pub fn build_yy_block(n_qubits: usize, bond: usize, theta: f64) -> Result<Circuit> {
    bond_guard(n_qubits, bond)?;
    let (q, r) = (bond, bond + 1);
    let angle = U3_ANGLE_FACTOR * theta;
    let mut c = Circuit::new(n_qubits);
    c.append(GateOp::two(Gate::Cnot, q, r)?)?;
    c.append(GateOp::two(
        Gate::ControlledU3 { theta: angle, phi: -FRAC_PI_2, lambda: FRAC_PI_2, anti: false },
        r,
        q,
    )?)?;
    c.append(GateOp::two(
        Gate::ControlledU3 { theta: angle, phi: FRAC_PI_2, lambda: -FRAC_PI_2, anti: true },
        r,
        q,
    )?)?;
    c.append(GateOp::two(Gate::Cnot, q, r)?)?;
    Ok(c)
}

/// The full evolution circuit: optional Hadamard preparation on qubit 0,
/// then `n_steps` repetitions of [H1 layer; per bond XX(λΔt), YY(λΔt)].
/// Adjacent cancelling CNOT pairs are removed; the unitary is unchanged.
pub fn build_full_circuit(plan: &TrotterPlan) -> Circuit {
    let n = plan.n_qubits();
    let theta = plan.model().lambda() * plan.dt();
    let mut full = Circuit::new(n);
    if plan.initial_hadamard() {
        full.append(GateOp::single(Gate::Hadamard, 0).expect("valid")).expect("in range");
    }
    for _ in 0..plan.n_steps() {
        full = full.concat(&build_h1_layer(plan)).expect("same register");
        for bond in 0..n.saturating_sub(1) {
            let xx = build_xx_block(n, bond, theta).expect("bond checked");
            let yy = build_yy_block(n, bond, theta).expect("bond checked");
            full = full.concat(&xx).expect("same register");
            full = full.concat(&yy).expect("same register");
        }
    }
    full.cancel_adjacent_cnot_pairs();
    full
}
