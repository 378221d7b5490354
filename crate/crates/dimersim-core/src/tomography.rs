//! Density matrices, linear-inversion state tomography, Uhlmann fidelity,
//! and the depolarizing channel.
//!
//! Reconstruction uses the full informationally-complete 3^N product-setting
//! grid: every Pauli-string expectation is averaged over all compatible
//! settings, assembled into ρ = 2^{-N} Σ_P ⟨P⟩·P, then projected onto the
//! PSD trace-1 cone by eigenvalue clipping and renormalization.

use alloc::collections::BTreeMap;
use alloc::{vec, vec::Vec};
use num_complex::Complex64;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::matrix::CMatrix;
use crate::observables::{basis_rotation_circuit, parity_expectation, Basis, MeasurementSetting};
use crate::pauli::{Pauli, PauliString};
use crate::state::StateVector;
use crate::Result;

/// Hermitian, PSD, trace-1 operator on the register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
    n_qubits: usize,
}

const HERMITICITY_TOL: f64 = 1e-8;
const TRACE_TOL: f64 = 1e-8;
const PSD_TOL: f64 = 1e-8;

impl DensityMatrix {
    /// Validate and adopt a matrix: Hermitian and trace 1 to 1e-8, smallest
    /// eigenvalue no lower than -1e-8.
    pub fn from_matrix(mat: CMatrix) -> Result<Self> {
        let dim = mat.dim();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::InvalidState { what: "density matrix dimension must be 2^n" });
        }
        if !mat.is_hermitian(HERMITICITY_TOL) {
            return Err(Error::InvalidState { what: "density matrix is not Hermitian" });
        }
        let trace: f64 = (0..dim).map(|k| mat[(k, k)].re).sum();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidState { what: "density matrix trace is not 1" });
        }
        let (eigs, _) = mat.eigh()?;
        if eigs[0] < -PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: eigs[0] });
        }
        Ok(DensityMatrix { mat, n_qubits: dim.trailing_zeros() as usize })
    }

    /// |ψ⟩⟨ψ| of a pure state.
    pub fn from_state(psi: &StateVector) -> Self {
        let amps = psi.amplitudes();
        let mat = CMatrix::from_fn(amps.len(), |r, c| amps[r] * amps[c].conj());
        DensityMatrix { mat, n_qubits: psi.n_qubits() }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|k| self.mat[(k, k)].re).sum()
    }

    /// Tr(ρ²); 1 exactly for pure states.
    pub fn purity(&self) -> f64 {
        let sq = self.mat.mul(&self.mat);
        (0..self.dim()).map(|k| sq[(k, k)].re).sum()
    }

    /// Trace distance ½·Tr|ρ-σ|.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        let (eigs, _) = self.mat.sub(&other.mat).eigh()?;
        Ok(eigs.iter().map(|e| e.abs()).sum::<f64>() / 2.0)
    }

    /// Measurement distribution in the given product basis: rotate, then
    /// read the diagonal.
    pub fn measurement_distribution(&self, setting: &MeasurementSetting) -> Result<Vec<f64>> {
        if setting.n_qubits() != self.n_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.n_qubits,
                found: setting.n_qubits(),
            });
        }
        let u = basis_rotation_circuit(setting).to_unitary()?;
        let rotated = u.mul(&self.mat).mul(&u.adjoint());
        Ok((0..self.dim()).map(|k| rotated[(k, k)].re.max(0.0)).collect())
    }
}

/// Depolarizing channel ρ ↦ (1-p)·ρ + p·I/2^N.
pub fn depolarize(rho: &DensityMatrix, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability { value: p });
    }
    let dim = rho.dim();
    let mut mat = rho.matrix().scale(Complex64::new(1.0 - p, 0.0));
    let mixed = p / dim as f64;
    for k in 0..dim {
        mat[(k, k)] += Complex64::new(mixed, 0.0);
    }
    Ok(DensityMatrix { mat, n_qubits: rho.n_qubits })
}

/// Uhlmann fidelity F(ρ,σ) = Tr√(√ρ·σ·√ρ), clipped to [0, 1] with 1e-9
/// slack. Inputs whose spectra dip below -1e-9 are rejected.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::QubitCountMismatch {
            expected: rho.n_qubits,
            found: sigma.n_qubits,
        });
    }
    let sqrt_rho = psd_sqrt(rho.matrix())?;
    let inner = sqrt_rho.mul(sigma.matrix()).mul(&sqrt_rho);
    let (eigs, _) = inner.eigh()?;
    let mut f = 0.0;
    for e in eigs {
        if e < -1e-9 {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: e });
        }
        f += e.max(0.0).sqrt();
    }
    if f > 1.0 + 1e-9 {
        return Err(Error::InvalidState { what: "fidelity exceeded 1 beyond tolerance" });
    }
    Ok(f.clamp(0.0, 1.0))
}

/// Hermitian square root with eigenvalue clipping at -1e-9.
fn psd_sqrt(m: &CMatrix) -> Result<CMatrix> {
    let (eigs, vecs) = m.eigh()?;
    let dim = m.dim();
    if eigs[0] < -1e-9 {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue: eigs[0] });
    }
    let mut scaled = vecs.clone();
    for (k, &e) in eigs.iter().enumerate() {
        let root = e.max(0.0).sqrt();
        for r in 0..dim {
            scaled[(r, k)] = vecs[(r, k)] * root;
        }
    }
    Ok(scaled.mul(&vecs.adjoint()))
}

/// Linear-inversion tomography from measured counts, one `ShotResult` per
/// product setting. All 3^N settings must be present.
pub fn tomographic_reconstruction(
    counts: &BTreeMap<MeasurementSetting, crate::state::ShotResult>,
) -> Result<DensityMatrix> {
    let n = first_setting_qubits(counts.keys())?;
    let mut distributions = BTreeMap::new();
    for (setting, result) in counts {
        let dim = 1usize << setting.n_qubits();
        let mut probs = vec![0.0f64; dim];
        for (label, &count) in result.counts() {
            let idx = usize::from_str_radix(label, 2)
                .map_err(|_| Error::BadLabel { label: label.clone() })?;
            if idx >= dim {
                return Err(Error::BadLabel { label: label.clone() });
            }
            probs[idx] += count as f64 / result.shots() as f64;
        }
        distributions.insert(setting.clone(), probs);
    }
    reconstruct_from_distributions(n, &distributions)
}

/// Linear-inversion tomography in the infinite-shot limit: exact outcome
/// distributions per setting instead of counts.
pub fn tomographic_reconstruction_exact(
    probs: &BTreeMap<MeasurementSetting, Vec<f64>>,
) -> Result<DensityMatrix> {
    let n = first_setting_qubits(probs.keys())?;
    reconstruct_from_distributions(n, probs)
}

fn first_setting_qubits<'a>(
    mut keys: impl Iterator<Item = &'a MeasurementSetting>,
) -> Result<usize> {
    match keys.next() {
        Some(s) => Ok(s.n_qubits()),
        None => Err(Error::MissingSetting { setting: alloc::string::String::from("(all)") }),
    }
}

fn reconstruct_from_distributions(
    n: usize,
    distributions: &BTreeMap<MeasurementSetting, Vec<f64>>,
) -> Result<DensityMatrix> {
    let dim = 1usize << n;
    for setting in MeasurementSetting::all(n) {
        match distributions.get(&setting) {
            None => return Err(Error::MissingSetting { setting: setting.text() }),
            Some(p) if p.len() != dim => {
                return Err(Error::LengthMismatch {
                    what: "setting distribution",
                    expected: dim,
                    found: p.len(),
                })
            }
            Some(_) => {}
        }
    }

    // ⟨P⟩ for every non-identity string, averaged over compatible settings.
    let mut sums: BTreeMap<PauliString, (f64, u32)> = BTreeMap::new();
    for (setting, probs) in distributions {
        for support in 1..dim {
            let mut ops = vec![Pauli::I; n];
            let mut mask = 0usize;
            for (q, op) in ops.iter_mut().enumerate() {
                if support & (1 << q) != 0 {
                    *op = match setting.basis(q) {
                        Basis::X => Pauli::X,
                        Basis::Y => Pauli::Y,
                        Basis::Z => Pauli::Z,
                    };
                    mask |= 1 << q;
                }
            }
            let est = parity_expectation(probs, mask);
            let entry = sums.entry(PauliString::from_ops(ops)).or_insert((0.0, 0));
            entry.0 += est;
            entry.1 += 1;
        }
    }

    // Assemble ρ = 2^{-N}·(I + Σ_P ⟨P⟩·P).
    let mut rho = CMatrix::zeros(dim);
    let weight = 1.0 / dim as f64;
    for k in 0..dim {
        rho[(k, k)] = Complex64::new(weight, 0.0);
    }
    for (string, (sum, hits)) in &sums {
        let est = sum / *hits as f64;
        let p = string.to_dense_matrix()?;
        for c in 0..dim {
            for r in 0..dim {
                rho[(r, c)] += p[(r, c)] * (est * weight);
            }
        }
    }

    // PSD projection: clip negative eigenvalues, renormalize the trace.
    let (eigs, vecs) = rho.eigh()?;
    let clipped: Vec<f64> = eigs.iter().map(|e| e.max(0.0)).collect();
    let total: f64 = clipped.iter().sum();
    if total <= 0.0 {
        return Err(Error::InvalidState { what: "reconstruction collapsed to zero trace" });
    }
    let mut scaled = vecs.clone();
    for (k, &e) in clipped.iter().enumerate() {
        let w = e / total;
        for r in 0..dim {
            scaled[(r, k)] = vecs[(r, k)] * w;
        }
    }
    let projected = scaled.mul(&vecs.adjoint());
    Ok(DensityMatrix { mat: projected, n_qubits: n })
}

/// Exact measurement distributions of a pure state over all 3^N settings
/// (the infinite-shot tomography input).
pub fn exact_setting_distributions(
    psi: &StateVector,
) -> Result<BTreeMap<MeasurementSetting, Vec<f64>>> {
    let mut out = BTreeMap::new();
    for setting in MeasurementSetting::all(psi.n_qubits()) {
        let mut rotated = psi.clone();
        rotated.apply_circuit(&basis_rotation_circuit(&setting))?;
        out.insert(setting, rotated.probabilities());
    }
    Ok(out)
}

/// Sampled counts of a pure state over all 3^N settings.
pub fn sampled_setting_counts(
    psi: &StateVector,
    shots: u64,
    seed: u64,
) -> Result<BTreeMap<MeasurementSetting, crate::state::ShotResult>> {
    let mut out = BTreeMap::new();
    for (k, setting) in MeasurementSetting::all(psi.n_qubits()).into_iter().enumerate() {
        let mut rotated = psi.clone();
        rotated.apply_circuit(&basis_rotation_circuit(&setting))?;
        out.insert(setting, rotated.sample(shots, crate::derive_seed(seed, k as u64))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Targets;
    use crate::gate::Gate;
    use crate::GateOp;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bell() -> StateVector {
        let mut s = StateVector::zero(2);
        s.apply(&GateOp::single(Gate::Hadamard, 0).unwrap()).unwrap();
        s.apply(&GateOp::new(Gate::Cnot, Targets::Two(0, 1)).unwrap()).unwrap();
        s
    }

    fn random_density(dim_qubits: usize, rng: &mut ChaCha8Rng) -> DensityMatrix {
        let dim = 1 << dim_qubits;
        let a = CMatrix::from_fn(dim, |_, _| {
            Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        let mut m = a.mul(&a.adjoint());
        let trace: f64 = (0..dim).map(|k| m[(k, k)].re).sum();
        m = m.scale(Complex64::new(1.0 / trace, 0.0));
        DensityMatrix::from_matrix(m).unwrap()
    }

    #[test]
    fn pure_state_density_basics() {
        let zero = DensityMatrix::from_state(&StateVector::zero(1));
        assert!((zero.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!(zero.matrix()[(1, 1)].norm() < 1e-15);
        let rho = DensityMatrix::from_state(&bell());
        assert!((rho.matrix()[(0, 0)].re - 0.5).abs() < 1e-12);
        assert!((rho.matrix()[(0, 3)].re - 0.5).abs() < 1e-12);
        assert!((rho.purity() - 1.0).abs() < 1e-12);
        assert!((rho.trace() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_limit_reconstruction_of_basis_state() {
        let psi = StateVector::zero(1);
        let dists = exact_setting_distributions(&psi).unwrap();
        let rho = tomographic_reconstruction_exact(&dists).unwrap();
        let target = DensityMatrix::from_state(&psi);
        assert!(rho.matrix().max_abs_diff(target.matrix()) < 1e-10);
    }

    #[test]
    fn exact_limit_reconstruction_of_bell_state() {
        let psi = bell();
        let dists = exact_setting_distributions(&psi).unwrap();
        let rho = tomographic_reconstruction_exact(&dists).unwrap();
        let target = DensityMatrix::from_state(&psi);
        assert!(rho.matrix().max_abs_diff(target.matrix()) < 1e-10);
        assert!(rho.trace_distance(&target).unwrap() < 1e-9);
    }

    #[test]
    fn missing_setting_is_rejected() {
        let psi = StateVector::zero(2);
        let mut dists = exact_setting_distributions(&psi).unwrap();
        let key = MeasurementSetting::uniform(2, Basis::Y);
        dists.remove(&key);
        assert!(matches!(
            tomographic_reconstruction_exact(&dists),
            Err(Error::MissingSetting { .. })
        ));
    }

    #[test]
    fn finite_shot_reconstruction_is_close() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let mut hits = 0usize;
        let trials = 20usize;
        for trial in 0..trials {
            let psi = StateVector::random(2, &mut rng);
            let counts = sampled_setting_counts(&psi, 8192, 1000 + trial as u64).unwrap();
            let rho = tomographic_reconstruction(&counts).unwrap();
            let target = DensityMatrix::from_state(&psi);
            if rho.trace_distance(&target).unwrap() < 0.05 {
                hits += 1;
            }
        }
        assert!(hits * 100 >= trials * 95, "only {hits}/{trials} within 0.05");
    }

    #[test]
    fn fidelity_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..25 {
            let rho = random_density(2, &mut rng);
            let sigma = random_density(2, &mut rng);
            let f_rr = fidelity(&rho, &rho).unwrap();
            assert!((f_rr - 1.0).abs() < 1e-8, "F(ρ,ρ) = {f_rr}");
            let f_rs = fidelity(&rho, &sigma).unwrap();
            let f_sr = fidelity(&sigma, &rho).unwrap();
            assert!((f_rs - f_sr).abs() < 1e-8, "symmetry violated: {f_rs} vs {f_sr}");
            assert!((0.0..=1.0).contains(&f_rs));
        }
    }

    #[test]
    fn fidelity_of_orthogonal_pure_states_is_zero() {
        let zero = DensityMatrix::from_state(&StateVector::from_basis_label(1, "0").unwrap());
        let one = DensityMatrix::from_state(&StateVector::from_basis_label(1, "1").unwrap());
        assert!(fidelity(&zero, &one).unwrap() < 1e-9);
    }

    #[test]
    fn fidelity_pure_states_is_overlap_magnitude() {
        use core::f64::consts::FRAC_1_SQRT_2;
        let zero = StateVector::zero(1);
        let plus = StateVector::from_amplitudes(vec![
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        ])
        .unwrap();
        let f = fidelity(&DensityMatrix::from_state(&zero), &DensityMatrix::from_state(&plus))
            .unwrap();
        assert!((f - FRAC_1_SQRT_2).abs() < 1e-8);

        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for n in 1..=3usize {
            let a = StateVector::random(n, &mut rng);
            let b = StateVector::random(n, &mut rng);
            let f = fidelity(&DensityMatrix::from_state(&a), &DensityMatrix::from_state(&b))
                .unwrap();
            assert!((f - a.inner(&b).norm()).abs() < 1e-8);
        }
    }

    #[test]
    fn depolarize_limits() {
        let rho = DensityMatrix::from_state(&bell());
        let same = depolarize(&rho, 0.0).unwrap();
        assert!(same.matrix().max_abs_diff(rho.matrix()) < 1e-15);
        let mixed = depolarize(&rho, 1.0).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let expect = if r == c { 0.25 } else { 0.0 };
                assert!((mixed.matrix()[(r, c)] - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
        assert!(depolarize(&rho, 1.5).is_err());
        assert!(depolarize(&rho, -0.1).is_err());
    }

    #[test]
    fn depolarizing_fidelity_is_monotone() {
        let rho = DensityMatrix::from_state(&bell());
        let mut last = 2.0f64;
        for k in 0..=10 {
            let p = k as f64 / 10.0;
            let noisy = depolarize(&rho, p).unwrap();
            let f = fidelity(&noisy, &rho).unwrap();
            assert!(f <= last + 1e-12, "fidelity rose at p = {p}");
            last = f;
        }
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        // Non-unit trace.
        let m = CMatrix::identity(2);
        assert!(DensityMatrix::from_matrix(m).is_err());
        // Negative eigenvalue beyond tolerance.
        let mut m = CMatrix::zeros(2);
        m[(0, 0)] = Complex64::new(1.5, 0.0);
        m[(1, 1)] = Complex64::new(-0.5, 0.0);
        assert!(matches!(
            DensityMatrix::from_matrix(m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }
}
