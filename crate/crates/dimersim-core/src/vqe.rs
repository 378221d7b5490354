//! Variational eigensolver: layered U3 ansatz with an optional CNOT-chain
//! entangler, SPSA optimization of ⟨H⟩, and the first excited state through
//! an overlap (deflation) penalty.
//!
//! Each layer applies one U3 per qubit (3 parameters each, layer-major
//! layout) followed by the entangler chain CNOT(0→1)…CNOT(N-2→N-1) when
//! enabled. Without the entangler the ansatz prepares product states only,
//! which mirrors the plain U3 ansatz the sweeps compare against.

use alloc::vec::Vec;
use core::f64::consts::PI;
// f64 float methods come from this trait in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::Targets;
use crate::error::Error;
use crate::gate::Gate;
use crate::observables::{basis_rotation_circuit, pauli_expectation_from_counts, MeasurementSetting};
use crate::pauli::PauliSum;
use crate::state::StateVector;
use crate::GateOp;
use crate::{derive_seed, Result};

/// Layered U3 ansatz shape.
#[derive(Debug, Clone, PartialEq)]
pub struct Ansatz {
    n_qubits: usize,
    n_layers: usize,
    entangler: bool,
}

impl Ansatz {
    pub fn new(n_qubits: usize, n_layers: usize, entangler: bool) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::LengthMismatch { what: "n_qubits", expected: 1, found: 0 });
        }
        if n_layers == 0 {
            return Err(Error::LengthMismatch { what: "n_layers", expected: 1, found: 0 });
        }
        Ok(Ansatz { n_qubits, n_layers, entangler })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_layers(&self) -> usize {
        self.n_layers
    }

    pub fn entangler(&self) -> bool {
        self.entangler
    }

    /// 3 parameters (θ, φ, λ) per qubit per layer.
    pub fn param_count(&self) -> usize {
        3 * self.n_qubits * self.n_layers
    }

    /// Prepare |ψ(θ⃗)⟩ from |0…0⟩. Deterministic in the parameters.
    pub fn state(&self, params: &[f64]) -> Result<StateVector> {
        if params.len() != self.param_count() {
            return Err(Error::ParamCountMismatch {
                expected: self.param_count(),
                found: params.len(),
            });
        }
        let mut psi = StateVector::zero(self.n_qubits);
        for layer in 0..self.n_layers {
            for q in 0..self.n_qubits {
                let base = 3 * (layer * self.n_qubits + q);
                psi.apply(&GateOp::single(
                    Gate::U3 {
                        theta: params[base],
                        phi: params[base + 1],
                        lambda: params[base + 2],
                    },
                    q,
                )?)?;
            }
            if self.entangler {
                for q in 0..self.n_qubits.saturating_sub(1) {
                    psi.apply(&GateOp::new(Gate::Cnot, Targets::Two(q, q + 1))?)?;
                }
            }
        }
        Ok(psi)
    }
}

/// SPSA gain schedule: a_k = a/(k+1+A)^α, c_k = c/(k+1)^γ.
///
/// `restarts` is a driver-level policy, not part of the gain sequence: the
/// eigensolver entry points run that many independently seeded SPSA runs
/// (seeds derived from `seed`) and keep the best outcome. A single
/// `spsa_minimize` call is always exactly one run.
#[derive(Debug, Clone, PartialEq)]
pub struct SpsaSchedule {
    pub a: f64,
    pub c: f64,
    /// Stability constant A.
    pub stability: f64,
    pub alpha: f64,
    pub gamma: f64,
    pub max_iterations: usize,
    pub seed: u64,
    pub restarts: u32,
}

impl SpsaSchedule {
    /// Standard gains: α = 0.602, γ = 0.101, A = 0.1·max_iterations.
    pub fn new(max_iterations: usize, seed: u64) -> Self {
        SpsaSchedule {
            a: 1.0,
            c: 0.1,
            stability: 0.1 * max_iterations as f64,
            alpha: 0.602,
            gamma: 0.101,
            max_iterations,
            seed,
            restarts: 1,
        }
    }

    /// Same schedule, reseeded.
    pub fn with_seed(&self, seed: u64) -> Self {
        let mut s = self.clone();
        s.seed = seed;
        s
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.a > 0.0
            && self.c > 0.0
            && self.stability >= 0.0
            && self.alpha > 0.0
            && self.alpha < 1.0
            && self.gamma > 0.0
            && self.gamma < 1.0
            && [self.a, self.c, self.stability, self.alpha, self.gamma]
                .iter()
                .all(|v| v.is_finite());
        if !ok {
            return Err(Error::InvalidState { what: "SPSA schedule out of range" });
        }
        if self.max_iterations == 0 {
            return Err(Error::LengthMismatch { what: "max_iterations", expected: 1, found: 0 });
        }
        if self.restarts == 0 {
            return Err(Error::LengthMismatch { what: "restarts", expected: 1, found: 0 });
        }
        Ok(())
    }
}

/// Outcome of one SPSA run.
#[derive(Debug, Clone, PartialEq)]
pub struct SpsaRun {
    pub best_params: Vec<f64>,
    pub best_value: f64,
    /// (f₊ + f₋)/2 per iteration.
    pub trace: Vec<f64>,
    /// Exactly 2 per iteration.
    pub gradient_evaluations: usize,
    /// Final re-evaluation policy: one each at the last iterate, the
    /// best-proxy iterate, and the tail-averaged iterate.
    pub tracking_evaluations: usize,
}

/// Minimize a (possibly noisy) objective with simultaneous-perturbation
/// gradient estimates: two evaluations per iteration at θ ± c_k·Δ with
/// Rademacher Δ, update θ ← θ - a_k·ĝ.
///
/// Final re-evaluation policy: after the loop, the objective is evaluated
/// at the last iterate, at the iterate with the best two-sided proxy, and
/// at the average of the last quarter of the trajectory (which damps the
/// jitter left in shallow directions); the lowest of the three is returned.
/// These three evaluations are reported separately from the two-per-
/// iteration gradient cost.
pub fn spsa_minimize(
    mut objective: impl FnMut(&[f64]) -> f64,
    initial: &[f64],
    schedule: &SpsaSchedule,
) -> Result<SpsaRun> {
    schedule.validate()?;
    let dim = initial.len();
    let mut rng = ChaCha8Rng::seed_from_u64(schedule.seed);
    let mut theta = initial.to_vec();
    let mut plus = theta.clone();
    let mut minus = theta.clone();
    let mut delta = alloc::vec![1.0f64; dim];
    let mut trace = Vec::with_capacity(schedule.max_iterations);
    let mut best_proxy = f64::INFINITY;
    let mut best_theta = theta.clone();
    let tail_start = schedule.max_iterations - schedule.max_iterations / 4;
    let mut tail_sum = alloc::vec![0.0f64; dim];
    let mut tail_count = 0usize;

    for k in 0..schedule.max_iterations {
        let ak = schedule.a / ((k as f64) + 1.0 + schedule.stability).powf(schedule.alpha);
        let ck = schedule.c / ((k as f64) + 1.0).powf(schedule.gamma);
        for d in delta.iter_mut() {
            *d = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        }
        for i in 0..dim {
            plus[i] = theta[i] + ck * delta[i];
            minus[i] = theta[i] - ck * delta[i];
        }
        let f_plus = objective(&plus);
        let f_minus = objective(&minus);
        if !f_plus.is_finite() || !f_minus.is_finite() {
            return Err(Error::NonFiniteObjective { iteration: k });
        }
        let proxy = 0.5 * (f_plus + f_minus);
        if proxy < best_proxy {
            best_proxy = proxy;
            best_theta.copy_from_slice(&theta);
        }
        trace.push(proxy);
        let slope = (f_plus - f_minus) / (2.0 * ck);
        for i in 0..dim {
            theta[i] -= ak * slope * delta[i];
        }
        if k + 1 >= tail_start {
            for i in 0..dim {
                tail_sum[i] += theta[i];
            }
            tail_count += 1;
        }
    }

    let tail_avg: Vec<f64> = tail_sum.iter().map(|s| s / tail_count as f64).collect();
    let mut best_params = Vec::new();
    let mut best_value = f64::INFINITY;
    for candidate in [&theta, &best_theta, &tail_avg] {
        let value = objective(candidate);
        if value < best_value {
            best_value = value;
            best_params = candidate.clone();
        }
    }
    if !best_value.is_finite() {
        return Err(Error::NonFiniteObjective { iteration: schedule.max_iterations });
    }
    Ok(SpsaRun {
        best_params,
        best_value,
        trace,
        gradient_evaluations: 2 * schedule.max_iterations,
        tracking_evaluations: 3,
    })
}

/// How ⟨H⟩ is evaluated inside the optimization loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyMode {
    /// State-vector expectation, no sampling noise.
    Exact,
    /// Per-term basis rotation and counting with this many shots.
    Shots { shots: u64 },
}

/// Result of one eigensolver run.
#[derive(Debug, Clone, PartialEq)]
pub struct VqeResult {
    pub best_energy: f64,
    pub best_parameters: Vec<f64>,
    pub energy_trace: Vec<f64>,
    pub layers: usize,
}

struct EnergyEvaluator<'a> {
    h: &'a PauliSum,
    ansatz: &'a Ansatz,
    mode: EnergyMode,
    seed: u64,
    calls: u64,
}

impl<'a> EnergyEvaluator<'a> {
    fn new(h: &'a PauliSum, ansatz: &'a Ansatz, mode: EnergyMode, seed: u64) -> Self {
        EnergyEvaluator { h, ansatz, mode, seed, calls: 0 }
    }

    fn energy_of_state(&mut self, psi: &StateVector) -> Result<f64> {
        match self.mode {
            EnergyMode::Exact => self.h.expectation(psi),
            EnergyMode::Shots { shots } => {
                let call = self.calls;
                let n_terms = self.h.n_terms() as u64;
                let mut acc = 0.0;
                for (idx, (coeff, string)) in self.h.terms().iter().enumerate() {
                    if string.is_identity() {
                        acc += coeff;
                        continue;
                    }
                    let mut rotated = psi.clone();
                    rotated.apply_circuit(&basis_rotation_circuit(
                        &MeasurementSetting::for_string(string),
                    ))?;
                    let counts =
                        rotated.sample(shots, derive_seed(self.seed, call * n_terms + idx as u64))?;
                    acc += coeff * pauli_expectation_from_counts(&counts, string)?;
                }
                Ok(acc)
            }
        }
    }

    /// Objective-shaped evaluation; errors surface as NaN so the optimizer
    /// aborts with a diagnostic.
    fn eval(&mut self, params: &[f64]) -> f64 {
        self.calls += 1;
        match self.ansatz.state(params).and_then(|psi| self.energy_of_state(&psi)) {
            Ok(v) => v,
            Err(_) => f64::NAN,
        }
    }
}

fn initial_parameters(ansatz: &Ansatz, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0x1217));
    (0..ansatz.param_count()).map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * PI).collect()
}

/// Minimize ⟨ψ(θ)|H|ψ(θ)⟩ over the ansatz parameters. With
/// `schedule.restarts > 1` the run is repeated from independently seeded
/// starting points and the lowest final energy wins.
pub fn ground_state(
    h: &PauliSum,
    ansatz: &Ansatz,
    schedule: &SpsaSchedule,
    mode: EnergyMode,
) -> Result<VqeResult> {
    if h.n_qubits() != ansatz.n_qubits() {
        return Err(Error::QubitCountMismatch {
            expected: ansatz.n_qubits(),
            found: h.n_qubits(),
        });
    }
    schedule.validate()?;
    let mut best: Option<VqeResult> = None;
    for r in 0..schedule.restarts {
        let run_schedule = if schedule.restarts == 1 {
            schedule.clone()
        } else {
            schedule.with_seed(derive_seed(schedule.seed, 0x6E00 + r as u64))
        };
        let mut evaluator =
            EnergyEvaluator::new(h, ansatz, mode, derive_seed(run_schedule.seed, 0x5107));
        let initial = initial_parameters(ansatz, run_schedule.seed);
        let run = spsa_minimize(|p| evaluator.eval(p), &initial, &run_schedule)?;
        let result = VqeResult {
            best_energy: run.best_value,
            best_parameters: run.best_params,
            energy_trace: run.trace,
            layers: ansatz.n_layers(),
        };
        if best.as_ref().map_or(true, |b| result.best_energy < b.best_energy) {
            best = Some(result);
        }
    }
    Ok(best.expect("restarts >= 1"))
}

/// Deflation: minimize ⟨H⟩ + β·|⟨ψ(θ)|ψ_ground⟩|². The overlap penalty is
/// evaluated on the state vectors directly in both energy modes. The
/// reported energy is the raw ⟨H⟩ at the optimum, penalty excluded.
pub fn first_excited_state(
    h: &PauliSum,
    ground: &VqeResult,
    ansatz: &Ansatz,
    schedule: &SpsaSchedule,
    beta: f64,
    mode: EnergyMode,
) -> Result<VqeResult> {
    if h.n_qubits() != ansatz.n_qubits() {
        return Err(Error::QubitCountMismatch {
            expected: ansatz.n_qubits(),
            found: h.n_qubits(),
        });
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::NonFinite { what: "deflation weight beta" });
    }
    schedule.validate()?;
    let ground_psi = ansatz.state(&ground.best_parameters)?;
    let mut best: Option<(f64, VqeResult)> = None;
    for r in 0..schedule.restarts {
        let run_schedule = if schedule.restarts == 1 {
            schedule.clone()
        } else {
            schedule.with_seed(derive_seed(schedule.seed, 0x7E00 + r as u64))
        };
        let mut evaluator =
            EnergyEvaluator::new(h, ansatz, mode, derive_seed(run_schedule.seed, 0xE8C1));
        let penalized = |evaluator: &mut EnergyEvaluator<'_>, params: &[f64]| -> f64 {
            evaluator.calls += 1;
            let result = evaluator.ansatz.state(params).and_then(|psi| {
                let energy = evaluator.energy_of_state(&psi)?;
                Ok(energy + beta * ground_psi.inner(&psi).norm_sqr())
            });
            result.unwrap_or(f64::NAN)
        };
        let initial = initial_parameters(ansatz, derive_seed(run_schedule.seed, 0xE8C2));
        let run = spsa_minimize(|p| penalized(&mut evaluator, p), &initial, &run_schedule)?;
        // Report the raw energy at the optimum, without the penalty; rank
        // restarts by the penalized objective so ground-leaking solutions
        // do not win on energy alone.
        let best_psi = ansatz.state(&run.best_params)?;
        evaluator.calls += 1;
        let best_energy = evaluator.energy_of_state(&best_psi)?;
        let score = run.best_value;
        let result = VqeResult {
            best_energy,
            best_parameters: run.best_params,
            energy_trace: run.trace,
            layers: ansatz.n_layers(),
        };
        if best.as_ref().map_or(true, |(s, _)| score < *s) {
            best = Some((score, result));
        }
    }
    Ok(best.expect("restarts >= 1").1)
}

/// One layer-sweep row.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerSweepRow {
    pub layers: usize,
    pub ground_energy: f64,
    pub excited_energy: f64,
}

/// Ground and first-excited energies for each requested layer count, with
/// per-layer seeds derived from the template seed so runs are reproducible
/// and independent of execution order.
pub fn layer_sweep(
    h: &PauliSum,
    layers: &[usize],
    entangler: bool,
    template: &SpsaSchedule,
    mode: EnergyMode,
    beta: f64,
) -> Result<Vec<LayerSweepRow>> {
    let mut rows = Vec::with_capacity(layers.len());
    for &l in layers {
        let ansatz = Ansatz::new(h.n_qubits(), l, entangler)?;
        let mut schedule = template.clone();
        schedule.seed = derive_seed(template.seed, l as u64);
        let ground = ground_state(h, &ansatz, &schedule, mode)?;
        let mut excited_schedule = template.clone();
        excited_schedule.seed = derive_seed(template.seed, (l as u64) | (1 << 32));
        let excited = first_excited_state(h, &ground, &ansatz, &excited_schedule, beta, mode)?;
        rows.push(LayerSweepRow {
            layers: l,
            ground_energy: ground.best_energy,
            excited_energy: excited.best_energy,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::pauli::build_hamiltonian;
    use alloc::vec;
    use core::cell::Cell;

    #[test]
    fn zero_parameters_give_vacuum_without_entangler() {
        let ansatz = Ansatz::new(3, 2, false).unwrap();
        let psi = ansatz.state(&vec![0.0; ansatz.param_count()]).unwrap();
        assert!((psi.probabilities()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_qubit_pi_rotation_reaches_one() {
        let ansatz = Ansatz::new(1, 1, false).unwrap();
        let psi = ansatz.state(&[PI, 0.0, 0.0]).unwrap();
        assert!((psi.probabilities()[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn parameter_count_is_checked() {
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        assert_eq!(ansatz.param_count(), 12);
        assert!(matches!(
            ansatz.state(&[0.0; 7]),
            Err(Error::ParamCountMismatch { expected: 12, found: 7 })
        ));
    }

    #[test]
    fn spsa_minimizes_a_quadratic_reliably() {
        let mut successes = 0;
        for seed in 0..20u64 {
            let schedule = SpsaSchedule::new(300, seed);
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 9));
            let start: Vec<f64> = (0..3).map(|_| rng.gen::<f64>() * 2.0 - 1.0).collect();
            let run =
                spsa_minimize(|p| p.iter().map(|x| x * x).sum(), &start, &schedule).unwrap();
            let norm: f64 = run.best_params.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 0.05 {
                successes += 1;
            }
        }
        assert!(successes >= 19, "only {successes}/20 seeds converged");
    }

    #[test]
    fn spsa_uses_exactly_two_evaluations_per_iteration() {
        let counter = Cell::new(0usize);
        let schedule = SpsaSchedule::new(50, 3);
        let run = spsa_minimize(
            |p| {
                counter.set(counter.get() + 1);
                p.iter().map(|x| x * x).sum()
            },
            &[0.4, -0.2],
            &schedule,
        )
        .unwrap();
        assert_eq!(run.gradient_evaluations, 100);
        assert_eq!(run.tracking_evaluations, 3);
        assert_eq!(counter.get(), run.gradient_evaluations + run.tracking_evaluations);
    }

    #[test]
    fn spsa_is_deterministic_for_a_fixed_seed() {
        let schedule = SpsaSchedule::new(120, 77);
        let f = |p: &[f64]| p.iter().map(|x| (x - 0.3) * (x - 0.3)).sum();
        let a = spsa_minimize(f, &[1.0, -1.0], &schedule).unwrap();
        let b = spsa_minimize(f, &[1.0, -1.0], &schedule).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spsa_aborts_on_non_finite_objective() {
        let schedule = SpsaSchedule::new(10, 1);
        let out = spsa_minimize(|_| f64::NAN, &[0.1], &schedule);
        assert!(matches!(out, Err(Error::NonFiniteObjective { iteration: 0 })));
    }

    #[test]
    fn schedule_validation() {
        let mut s = SpsaSchedule::new(100, 0);
        s.a = 0.0;
        assert!(s.validate().is_err());
        let mut s = SpsaSchedule::new(100, 0);
        s.alpha = 1.5;
        assert!(s.validate().is_err());
    }

    #[test]
    fn bell_state_is_reachable_by_one_entangled_layer() {
        // Search check: maximize the overlap with the Bell state.
        let target = {
            let mut s = StateVector::zero(2);
            s.apply(&GateOp::single(Gate::Hadamard, 0).unwrap()).unwrap();
            s.apply(&GateOp::new(Gate::Cnot, Targets::Two(0, 1)).unwrap()).unwrap();
            s
        };
        let ansatz = Ansatz::new(2, 1, true).unwrap();
        let schedule = SpsaSchedule::new(400, 5);
        let initial = initial_parameters(&ansatz, 5);
        let run = spsa_minimize(
            |p| match ansatz.state(p) {
                Ok(psi) => 1.0 - target.inner(&psi).norm_sqr(),
                Err(_) => f64::NAN,
            },
            &initial,
            &schedule,
        )
        .unwrap();
        assert!(
            1.0 - run.best_value >= 0.99,
            "best overlap only {}",
            1.0 - run.best_value
        );
    }

    #[test]
    fn ground_state_of_coupled_dimer() {
        let h = build_hamiltonian(2, &[1.0, 1.0], 0.5).unwrap();
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        let schedule = SpsaSchedule::new(500, 11);
        let result = ground_state(&h, &ansatz, &schedule, EnergyMode::Exact).unwrap();
        assert!((result.best_energy + 1.0).abs() < 0.02, "E = {}", result.best_energy);
        assert!(result.best_energy >= -1.0 - 1e-9, "variational bound violated");
    }

    #[test]
    fn uncoupled_product_ground_state_with_single_layer() {
        let h = build_hamiltonian(2, &[1.0, 0.5], 0.0).unwrap();
        let ansatz = Ansatz::new(2, 1, false).unwrap();
        let schedule = SpsaSchedule::new(400, 3);
        let result = ground_state(&h, &ansatz, &schedule, EnergyMode::Exact).unwrap();
        assert!((result.best_energy + 0.75).abs() < 0.02, "E = {}", result.best_energy);
    }

    #[test]
    fn exact_mode_trace_respects_variational_bound() {
        let h = build_hamiltonian(2, &[1.0, 0.5], 0.3).unwrap();
        let e0 = oracle::spectrum(&h).unwrap().ground_energy();
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        let schedule = SpsaSchedule::new(200, 17);
        let result = ground_state(&h, &ansatz, &schedule, EnergyMode::Exact).unwrap();
        for (k, e) in result.energy_trace.iter().enumerate() {
            assert!(*e >= e0 - 1e-9, "iterate {k} dipped to {e} below {e0}");
        }
    }

    #[test]
    fn deflation_finds_the_first_excited_level() {
        let h = build_hamiltonian(2, &[1.0, 0.5], 0.3).unwrap();
        let spectrum = oracle::spectrum(&h).unwrap();
        let beta = 2.0 * (spectrum.max_energy() - spectrum.ground_energy());
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        let mut schedule = SpsaSchedule::new(1000, 19);
        schedule.restarts = 5;
        let ground = ground_state(&h, &ansatz, &schedule, EnergyMode::Exact).unwrap();
        let excited =
            first_excited_state(&h, &ground, &ansatz, &schedule, beta, EnergyMode::Exact).unwrap();
        assert!(
            (excited.best_energy - spectrum.first_excited_energy()).abs() < 0.05,
            "E1 = {}, exact {}",
            excited.best_energy,
            spectrum.first_excited_energy()
        );
        let overlap = ansatz
            .state(&ground.best_parameters)
            .unwrap()
            .inner(&ansatz.state(&excited.best_parameters).unwrap())
            .norm_sqr();
        assert!(overlap < 0.1, "residual ground overlap {overlap}");
    }

    #[test]
    fn zero_beta_reduces_to_ground_objective() {
        let h = build_hamiltonian(2, &[1.0, 1.0], 0.5).unwrap();
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        let schedule = SpsaSchedule::new(500, 23);
        let ground = ground_state(&h, &ansatz, &schedule, EnergyMode::Exact).unwrap();
        let relaxed =
            first_excited_state(&h, &ground, &ansatz, &schedule, 0.0, EnergyMode::Exact).unwrap();
        // Without the penalty the search settles back into the ground level.
        assert!((relaxed.best_energy + 1.0).abs() < 0.05, "E = {}", relaxed.best_energy);
    }

    #[test]
    fn shot_mode_stays_near_exact_energy() {
        let h = build_hamiltonian(2, &[1.0, 1.0], 0.5).unwrap();
        let e0 = oracle::spectrum(&h).unwrap().ground_energy();
        let ansatz = Ansatz::new(2, 2, true).unwrap();
        let schedule = SpsaSchedule::new(300, 29);
        let result = ground_state(&h, &ansatz, &schedule, EnergyMode::Shots { shots: 2048 }).unwrap();
        // Shot noise on 4 unit-weight terms at 2048 shots: σ ≈ 2·√(1/2048) ≈ 0.044.
        let sigma = 2.0 / (2048.0f64).sqrt();
        assert!(result.best_energy >= e0 - 3.0 * sigma, "E = {}", result.best_energy);
    }

    #[test]
    fn layer_sweep_rows_and_bounds() {
        let h = build_hamiltonian(2, &[1.0, 1.0], 0.5).unwrap();
        let e0 = oracle::spectrum(&h).unwrap().ground_energy();
        let template = SpsaSchedule::new(150, 31);
        let rows = layer_sweep(&h, &[1, 2, 3], true, &template, EnergyMode::Exact, 4.0).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!(row.ground_energy >= e0 - 1e-9);
        }
        // Reruns are identical.
        let again = layer_sweep(&h, &[1, 2, 3], true, &template, EnergyMode::Exact, 4.0).unwrap();
        assert_eq!(rows, again);
    }
}
