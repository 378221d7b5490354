//! Cross-module convergence behaviour of the first-order product formula.

use dimersim_core::{oracle, ChainModel};

/// Least-squares slope of log(error) against log(n).
fn fitted_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        let (lx, ly) = (x.ln(), y.ln());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[test]
fn first_order_slope_on_the_detuned_dimer() {
    let model = ChainModel::new(vec![1.0, 0.5], 0.3).unwrap();
    let points: Vec<(f64, f64)> = (0..8)
        .map(|k| {
            let n = 1usize << k;
            (n as f64, oracle::trotter_error(&model, 1.0, n).unwrap())
        })
        .collect();
    let slope = fitted_slope(&points);
    assert!(
        (slope + 1.0).abs() <= 0.15,
        "log-log slope {slope} outside -1.0 ± 0.15; points {points:?}"
    );
}

#[test]
fn error_times_n_approaches_a_constant() {
    let model = ChainModel::new(vec![1.0, 0.5], 0.3).unwrap();
    let c64 = 64.0 * oracle::trotter_error(&model, 1.0, 64).unwrap();
    let c128 = 128.0 * oracle::trotter_error(&model, 1.0, 128).unwrap();
    assert!(
        ((c64 - c128) / c128).abs() < 0.05,
        "n·error not settling: {c64} vs {c128}"
    );
}

#[test]
fn three_site_chain_also_refines_monotonically() {
    let model = ChainModel::new(vec![1.0, 0.6, 0.3], 0.25).unwrap();
    let mut last = f64::INFINITY;
    for n in [1usize, 2, 4, 8, 16] {
        let err = oracle::trotter_error(&model, 1.0, n).unwrap();
        assert!(err < last, "error did not shrink at n = {n}: {err} >= {last}");
        last = err;
    }
}
