use dimersim_core::vqe::*;
use dimersim_core::*;
use std::time::Instant;

fn main() {
    let h3 = build_hamiltonian(2, &[1.0, 0.5], 0.3).unwrap();
    let spec = oracle::spectrum(&h3).unwrap();
    let ansatz3 = Ansatz::new(2, 2, true).unwrap();
    for (a, iters, restarts) in [(1.0f64, 500usize, 3u32), (1.0, 1000, 3), (1.5, 1000, 3), (1.0, 1000, 5)] {
        let start = Instant::now();
        let (mut okg, mut oke) = (0, 0);
        let (mut worst_g, mut worst_e): (f64, f64) = (0.0, 0.0);
        for seed in 0..20u64 {
            let mut s = SpsaSchedule::new(iters, seed);
            s.a = a;
            s.restarts = restarts;
            let g = ground_state(&h3, &ansatz3, &s, EnergyMode::Exact).unwrap();
            worst_g = worst_g.max((g.best_energy + 0.75).abs());
            if (g.best_energy + 0.75).abs() < 0.02 { okg += 1; }
            let e = first_excited_state(&h3, &g, &ansatz3, &s, 3.0, EnergyMode::Exact).unwrap();
            let err = (e.best_energy - spec.first_excited_energy()).abs();
            worst_e = worst_e.max(err);
            if err < 0.05 { oke += 1; }
        }
        println!("a={a} iters={iters} restarts={restarts}: ground {okg}/20 (worst {worst_g:.4}) excited {oke}/20 (worst {worst_e:.4}) ({:?})", start.elapsed());
    }
    // criterion 5 ground configuration with new default a=1.0, restarts=1
    let h = build_hamiltonian(2, &[1.0, 1.0], 0.5).unwrap();
    let ansatz = Ansatz::new(2, 2, true).unwrap();
    let mut ok = 0;
    let mut worst: f64 = 0.0;
    let start = Instant::now();
    for seed in 0..20u64 {
        let s = SpsaSchedule::new(500, seed);
        let r = ground_state(&h, &ansatz, &s, EnergyMode::Exact).unwrap();
        let err = (r.best_energy + 1.0).abs();
        worst = worst.max(err);
        if err < 0.02 { ok += 1; }
    }
    println!("crit5 defaults: ground {ok}/20 (worst {worst:.5}) ({:?})", start.elapsed());
}
