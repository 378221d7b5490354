//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when building models, circuits or runs.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A qubit index is outside the register.
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    /// A two-qubit op names the same qubit twice.
    DuplicateTargets { qubit: usize },
    /// Two values that must share a qubit count do not.
    QubitCountMismatch { expected: usize, found: usize },
    /// A length did not match what the model requires.
    LengthMismatch { what: &'static str, expected: usize, found: usize },
    /// Dense-path guard: the register is too large for this operation.
    CapacityExceeded { n_qubits: usize, max: usize },
    /// A basis-state label could not be parsed.
    BadLabel { label: String },
    /// A numeric argument must be finite.
    NonFinite { what: &'static str },
    /// `shots` must be at least 1.
    ZeroShots,
    /// Parameter vector length does not match the ansatz.
    ParamCountMismatch { expected: usize, found: usize },
    /// An objective function returned NaN or infinity.
    NonFiniteObjective { iteration: usize },
    /// A counts table was empty.
    EmptyCounts,
    /// Tomography input is missing a measurement setting.
    MissingSetting { setting: String },
    /// A probability argument was outside [0, 1].
    InvalidProbability { value: f64 },
    /// A matrix violated positive semidefiniteness beyond tolerance.
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    /// A matrix or state failed a structural validity check.
    InvalidState { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::QubitOutOfRange { qubit, n_qubits } => {
                write!(f, "qubit index {qubit} out of range for {n_qubits}-qubit register")
            }
            Error::DuplicateTargets { qubit } => {
                write!(f, "two-qubit op targets qubit {qubit} twice")
            }
            Error::QubitCountMismatch { expected, found } => {
                write!(f, "qubit count mismatch: expected {expected}, found {found}")
            }
            Error::LengthMismatch { what, expected, found } => {
                write!(f, "{what}: expected length {expected}, found {found}")
            }
            Error::CapacityExceeded { n_qubits, max } => {
                write!(f, "dense path limited to {max} qubits, got {n_qubits}")
            }
            Error::BadLabel { label } => write!(f, "invalid basis-state label {label:?}"),
            Error::NonFinite { what } => write!(f, "{what} must be finite"),
            Error::ZeroShots => write!(f, "shot count must be at least 1"),
            Error::ParamCountMismatch { expected, found } => {
                write!(f, "parameter count mismatch: expected {expected}, found {found}")
            }
            Error::NonFiniteObjective { iteration } => {
                write!(f, "objective returned a non-finite value at iteration {iteration}")
            }
            Error::EmptyCounts => write!(f, "counts table is empty"),
            Error::MissingSetting { setting } => {
                write!(f, "tomography counts missing measurement setting {setting}")
            }
            Error::InvalidProbability { value } => {
                write!(f, "probability {value} outside [0, 1]")
            }
            Error::NotPositiveSemidefinite { min_eigenvalue } => {
                write!(f, "matrix not PSD: minimum eigenvalue {min_eigenvalue}")
            }
            Error::InvalidState { what } => write!(f, "invalid state: {what}"),
        }
    }
}

impl core::error::Error for Error {}
