//! Simulation core for staggered (dimer) XY spin chains on a gate model.
//!
//! The chain Hamiltonian is
//!
//! ```text
//! H = Σ_j (ω_j/2)·Z_j  +  λ Σ_j (X_j X_{j+1} + Y_j Y_{j+1})
//! ```
//!
//! with per-site energies `ω_j`, nearest-neighbour coupling `λ` and ħ = 1.
//! The crate provides two independent evolution routes and the machinery to
//! compare them:
//!
//! - a dense exact route ([`oracle`]): eigendecomposition, `exp(-iHt)`,
//!   spectra and operator-norm Trotter error;
//! - a circuit route ([`trotter`] + [`state`]): the first-order product
//!   formula compiled to U1 / CNOT / U3 / controlled-U3 gates and run on an
//!   in-place state-vector kernel.
//!
//! On top of those sit measurement-basis rotations and correlators
//! ([`observables`]), linear-inversion state tomography with Uhlmann
//! fidelity ([`tomography`]), and a VQE with an SPSA optimizer ([`vqe`]).
//!
//! Conventions, fixed once and inherited everywhere: qubit 0 is the least
//! significant bit of a basis-state index (bit-string labels therefore show
//! qubit 0 rightmost), and time evolution is `exp(-iHt)`.
//!
//! The crate is `no_std`-compatible (`default-features = false`); it only
//! needs `alloc`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod circuit;
pub mod error;
pub mod gate;
mod kernel;
pub mod matrix;
pub mod observables;
pub mod oracle;
pub mod pauli;
pub mod state;
pub mod tomography;
pub mod trotter;
pub mod vqe;

pub use circuit::{Circuit, GateOp, Targets};
pub use error::Error;
pub use gate::{Gate, GateMatrix};
pub use matrix::CMatrix;
pub use observables::{Basis, MeasurementSetting};
pub use oracle::Spectrum;
pub use pauli::{build_hamiltonian, ChainModel, Pauli, PauliString, PauliSum};
pub use state::{ShotResult, StateVector};
pub use tomography::DensityMatrix;
pub use trotter::TrotterPlan;
pub use vqe::{Ansatz, EnergyMode, SpsaSchedule, VqeResult};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Derive an independent child seed from a master seed and a stream index
/// (splitmix64 mixing). Sweep points, shot batches and per-layer runs each
/// get their own stream so results do not depend on scheduling.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    fn splitmix64(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    splitmix64(master ^ splitmix64(stream))
}
