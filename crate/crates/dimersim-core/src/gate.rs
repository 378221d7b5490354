//! The fixed gate set: H, X, S†, U1, U3, U3†, CNOT, controlled-U3 and
//! anti-controlled-U3.
//!
//! `U3(θ, φ, λ)` is the general single-qubit rotation
//!
//! ```text
//! [ cos(θ/2)            -e^{iλ}·sin(θ/2)      ]
//! [ e^{iφ}·sin(θ/2)      e^{i(φ+λ)}·cos(θ/2)  ]
//! ```
//!
//! Two-qubit matrices index their 4x4 block little-endian in target order:
//! block = bit(first target) + 2·bit(second target). CNOT and the controlled
//! U3 variants take the *first* listed target as the control.

use core::f64::consts::FRAC_1_SQRT_2;
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

/// A concrete 2x2 or 4x4 unitary.
#[derive(Debug, Clone, PartialEq)]
pub enum GateMatrix {
    One([[Complex64; 2]; 2]),
    Two([[Complex64; 4]; 4]),
}

impl GateMatrix {
    pub fn dim(&self) -> usize {
        match self {
            GateMatrix::One(_) => 2,
            GateMatrix::Two(_) => 4,
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        match self {
            GateMatrix::One(m) => m[r][c],
            GateMatrix::Two(m) => m[r][c],
        }
    }

    pub fn as_one(&self) -> Option<&[[Complex64; 2]; 2]> {
        match self {
            GateMatrix::One(m) => Some(m),
            GateMatrix::Two(_) => None,
        }
    }

    pub fn as_two(&self) -> Option<&[[Complex64; 4]; 4]> {
        match self {
            GateMatrix::One(_) => None,
            GateMatrix::Two(m) => Some(m),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> GateMatrix {
        match self {
            GateMatrix::One(m) => {
                let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        out[r][c] = m[c][r].conj();
                    }
                }
                GateMatrix::One(out)
            }
            GateMatrix::Two(m) => {
                let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
                for r in 0..4 {
                    for c in 0..4 {
                        out[r][c] = m[c][r].conj();
                    }
                }
                GateMatrix::Two(out)
            }
        }
    }

    /// Matrix product `self * rhs` (same dimension).
    pub fn mul(&self, rhs: &GateMatrix) -> GateMatrix {
        match (self, rhs) {
            (GateMatrix::One(a), GateMatrix::One(b)) => {
                let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        for k in 0..2 {
                            out[r][c] += a[r][k] * b[k][c];
                        }
                    }
                }
                GateMatrix::One(out)
            }
            (GateMatrix::Two(a), GateMatrix::Two(b)) => {
                let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
                for r in 0..4 {
                    for c in 0..4 {
                        for k in 0..4 {
                            out[r][c] += a[r][k] * b[k][c];
                        }
                    }
                }
                GateMatrix::Two(out)
            }
            _ => panic!("gate dimension mismatch"),
        }
    }

    /// Largest entry-wise deviation from another matrix.
    pub fn max_abs_diff(&self, rhs: &GateMatrix) -> f64 {
        let d = self.dim();
        assert_eq!(d, rhs.dim());
        let mut worst = 0.0f64;
        for r in 0..d {
            for c in 0..d {
                worst = worst.max((self.entry(r, c) - rhs.entry(r, c)).norm());
            }
        }
        worst
    }

    /// `‖G†G - I‖_max ≤ tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let g = self.adjoint().mul(self);
        let d = self.dim();
        let mut worst = 0.0f64;
        for r in 0..d {
            for c in 0..d {
                let expect = if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((g.entry(r, c) - expect).norm());
            }
        }
        worst <= tol
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn expi(theta: f64) -> Complex64 {
    Complex64::new(theta.cos(), theta.sin())
}

/// Hadamard.
pub fn hadamard() -> GateMatrix {
    let h = FRAC_1_SQRT_2;
    GateMatrix::One([[c(h, 0.0), c(h, 0.0)], [c(h, 0.0), c(-h, 0.0)]])
}

/// Pauli X.
pub fn pauli_x() -> GateMatrix {
    GateMatrix::One([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}

/// S† = diag(1, -i).
pub fn s_dagger() -> GateMatrix {
    GateMatrix::One([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0)]])
}

/// Phase gate diag(1, e^{iθ}).
pub fn u1(theta: f64) -> GateMatrix {
    GateMatrix::One([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), expi(theta)]])
}

/// General single-qubit rotation.
pub fn u3(theta: f64, phi: f64, lam: f64) -> GateMatrix {
    let (ch, sh) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    GateMatrix::One([
        [c(ch, 0.0), -expi(lam) * sh],
        [expi(phi) * sh, expi(phi + lam) * ch],
    ])
}

/// Conjugate transpose of `u3` at the same angles.
pub fn u3_dagger(theta: f64, phi: f64, lam: f64) -> GateMatrix {
    u3(theta, phi, lam).adjoint()
}

/// CNOT with the control on the first target qubit (block bit 0).
pub fn cnot() -> GateMatrix {
    let mut m = [[c(0.0, 0.0); 4]; 4];
    m[0][0] = c(1.0, 0.0);
    m[3][1] = c(1.0, 0.0);
    m[2][2] = c(1.0, 0.0);
    m[1][3] = c(1.0, 0.0);
    GateMatrix::Two(m)
}

/// Controlled U3 with the control on the first target qubit; `anti` fires on
/// control |0⟩ instead of |1⟩.
pub fn controlled_u3(theta: f64, phi: f64, lam: f64, anti: bool) -> GateMatrix {
    let u = u3(theta, phi, lam);
    let u = u.as_one().expect("u3 is 2x2");
    let mut m = [[c(0.0, 0.0); 4]; 4];
    // Control bit value that triggers the rotation.
    let fire = if anti { 0usize } else { 1usize };
    let idle = 1 - fire;
    m[idle][idle] = c(1.0, 0.0);
    m[idle | 2][idle | 2] = c(1.0, 0.0);
    for rt in 0..2 {
        for ct in 0..2 {
            m[fire | (rt << 1)][fire | (ct << 1)] = u[rt][ct];
        }
    }
    GateMatrix::Two(m)
}

/// Parametric gate identifier for circuit ops.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    Hadamard,
    PauliX,
    SDagger,
    U1 { theta: f64 },
    U3 { theta: f64, phi: f64, lambda: f64 },
    U3Dagger { theta: f64, phi: f64, lambda: f64 },
    Cnot,
    ControlledU3 { theta: f64, phi: f64, lambda: f64, anti: bool },
}

impl Gate {
    /// Number of qubits the gate acts on.
    pub fn arity(&self) -> usize {
        match self {
            Gate::Cnot | Gate::ControlledU3 { .. } => 2,
            _ => 1,
        }
    }

    pub fn matrix(&self) -> GateMatrix {
        match *self {
            Gate::Hadamard => hadamard(),
            Gate::PauliX => pauli_x(),
            Gate::SDagger => s_dagger(),
            Gate::U1 { theta } => u1(theta),
            Gate::U3 { theta, phi, lambda } => u3(theta, phi, lambda),
            Gate::U3Dagger { theta, phi, lambda } => u3_dagger(theta, phi, lambda),
            Gate::Cnot => cnot(),
            Gate::ControlledU3 { theta, phi, lambda, anti } => {
                controlled_u3(theta, phi, lambda, anti)
            }
        }
    }

    /// Short mnemonic used by the circuit dump.
    pub fn name(&self) -> &'static str {
        match self {
            Gate::Hadamard => "h",
            Gate::PauliX => "x",
            Gate::SDagger => "sdg",
            Gate::U1 { .. } => "u1",
            Gate::U3 { .. } => "u3",
            Gate::U3Dagger { .. } => "u3dg",
            Gate::Cnot => "cx",
            Gate::ControlledU3 { anti: false, .. } => "cu3",
            Gate::ControlledU3 { anti: true, .. } => "acu3",
        }
    }

    /// Parameters in declaration order, for the circuit dump.
    pub fn params(&self) -> impl Iterator<Item = f64> {
        let list: [Option<f64>; 3] = match *self {
            Gate::U1 { theta } => [Some(theta), None, None],
            Gate::U3 { theta, phi, lambda }
            | Gate::U3Dagger { theta, phi, lambda }
            | Gate::ControlledU3 { theta, phi, lambda, .. } => {
                [Some(theta), Some(phi), Some(lambda)]
            }
            _ => [None, None, None],
        };
        list.into_iter().flatten()
    }
}
