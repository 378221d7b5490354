//! The central kernel-vs-oracle property: in-place state-vector gate
//! application must match the dense unitary-product route for random
//! circuits drawn from the full gate library.

use dimersim_core::gate::Gate;
use dimersim_core::{Circuit, GateOp, StateVector, Targets};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum OpSpec {
    H(usize),
    X(usize),
    SDg(usize),
    U1(usize, f64),
    U3(usize, f64, f64, f64),
    U3Dg(usize, f64, f64, f64),
    Cnot(usize, usize),
    Cu3(usize, usize, f64, f64, f64, bool),
}

fn angle() -> impl Strategy<Value = f64> {
    -7.0..7.0f64
}

fn op_spec(n: usize) -> impl Strategy<Value = OpSpec> {
    let q = 0..n;
    let q2 = (0..n, 0..n.max(2) - 1).prop_map(move |(a, b)| {
        // Distinct pair on an n-qubit register.
        let second = if b >= a { b + 1 } else { b };
        (a, second % n.max(2))
    });
    prop_oneof![
        q.clone().prop_map(OpSpec::H),
        q.clone().prop_map(OpSpec::X),
        q.clone().prop_map(OpSpec::SDg),
        (0..n, angle()).prop_map(|(q, t)| OpSpec::U1(q, t)),
        (0..n, angle(), angle(), angle()).prop_map(|(q, t, p, l)| OpSpec::U3(q, t, p, l)),
        (0..n, angle(), angle(), angle()).prop_map(|(q, t, p, l)| OpSpec::U3Dg(q, t, p, l)),
        q2.clone().prop_map(|(a, b)| OpSpec::Cnot(a, b)),
        (q2, angle(), angle(), angle(), any::<bool>())
            .prop_map(|((a, b), t, p, l, anti)| OpSpec::Cu3(a, b, t, p, l, anti)),
    ]
}

fn build(n: usize, specs: &[OpSpec]) -> Circuit {
    let mut c = Circuit::new(n);
    for spec in specs {
        let op = match *spec {
            OpSpec::H(q) => GateOp::single(Gate::Hadamard, q),
            OpSpec::X(q) => GateOp::single(Gate::PauliX, q),
            OpSpec::SDg(q) => GateOp::single(Gate::SDagger, q),
            OpSpec::U1(q, theta) => GateOp::single(Gate::U1 { theta }, q),
            OpSpec::U3(q, theta, phi, lambda) => {
                GateOp::single(Gate::U3 { theta, phi, lambda }, q)
            }
            OpSpec::U3Dg(q, theta, phi, lambda) => {
                GateOp::single(Gate::U3Dagger { theta, phi, lambda }, q)
            }
            OpSpec::Cnot(a, b) => {
                if a == b {
                    continue;
                }
                GateOp::new(Gate::Cnot, Targets::Two(a, b))
            }
            OpSpec::Cu3(a, b, theta, phi, lambda, anti) => {
                if a == b {
                    continue;
                }
                GateOp::new(Gate::ControlledU3 { theta, phi, lambda, anti }, Targets::Two(a, b))
            }
        }
        .expect("generated ops are valid");
        c.append(op).expect("indices in range");
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn state_kernel_matches_dense_unitary(
        n in 1usize..=5,
        raw in proptest::collection::vec(op_spec(5), 1..24),
    ) {
        // Clamp generated qubit indices into range for the drawn n.
        let specs: Vec<OpSpec> = raw
            .into_iter()
            .map(|s| match s {
                OpSpec::H(q) => OpSpec::H(q % n),
                OpSpec::X(q) => OpSpec::X(q % n),
                OpSpec::SDg(q) => OpSpec::SDg(q % n),
                OpSpec::U1(q, t) => OpSpec::U1(q % n, t),
                OpSpec::U3(q, t, p, l) => OpSpec::U3(q % n, t, p, l),
                OpSpec::U3Dg(q, t, p, l) => OpSpec::U3Dg(q % n, t, p, l),
                OpSpec::Cnot(a, b) => OpSpec::Cnot(a % n, b % n),
                OpSpec::Cu3(a, b, t, p, l, anti) => OpSpec::Cu3(a % n, b % n, t, p, l, anti),
            })
            .collect();
        let circuit = build(n, &specs);

        let mut state = StateVector::zero(n);
        state.apply_circuit(&circuit).unwrap();

        let u = circuit.to_unitary().unwrap();
        let dense = u.column(0);
        let dist: f64 = state
            .amplitudes()
            .iter()
            .zip(dense)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        prop_assert!(dist < 1e-9, "kernel/oracle distance {dist} on {n} qubits");
        prop_assert!((state.norm() - 1.0).abs() < 1e-10, "norm drifted to {}", state.norm());
    }

    #[test]
    fn dense_route_applied_to_random_state_matches_kernel(
        raw in proptest::collection::vec(op_spec(3), 1..16),
        seed in any::<u64>(),
    ) {
        use rand::SeedableRng;
        let n = 3usize;
        let specs: Vec<OpSpec> = raw
            .into_iter()
            .map(|s| match s {
                OpSpec::H(q) => OpSpec::H(q % n),
                OpSpec::X(q) => OpSpec::X(q % n),
                OpSpec::SDg(q) => OpSpec::SDg(q % n),
                OpSpec::U1(q, t) => OpSpec::U1(q % n, t),
                OpSpec::U3(q, t, p, l) => OpSpec::U3(q % n, t, p, l),
                OpSpec::U3Dg(q, t, p, l) => OpSpec::U3Dg(q % n, t, p, l),
                OpSpec::Cnot(a, b) => OpSpec::Cnot(a % n, b % n),
                OpSpec::Cu3(a, b, t, p, l, anti) => OpSpec::Cu3(a % n, b % n, t, p, l, anti),
            })
            .collect();
        let circuit = build(n, &specs);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let start = StateVector::random(n, &mut rng);

        let mut kernel_state = start.clone();
        kernel_state.apply_circuit(&circuit).unwrap();

        let u = circuit.to_unitary().unwrap();
        let dense = u.matvec(start.amplitudes());
        let dist: f64 = kernel_state
            .amplitudes()
            .iter()
            .zip(&dense)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        prop_assert!(dist < 1e-9, "distance {dist}");
    }
}
