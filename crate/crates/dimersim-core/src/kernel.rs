//! In-place gate kernels over amplitude slices.
//!
//! Both the state vector and the dense unitary accumulator (column-major,
//! one register-sized slice per column) go through these two loops, so the
//! hot path and the oracle path share one embedding convention: for a
//! two-qubit op the 4x4 block index is `b = bit(q0) + 2*bit(q1)` with `q0`
//! the first listed target.

use num_complex::Complex64;

/// Apply a 2x2 matrix to qubit `q` of a `2^n`-amplitude slice.
pub(crate) fn apply_one_qubit(amps: &mut [Complex64], m: &[[Complex64; 2]; 2], q: usize) {
    let bit = 1usize << q;
    let dim = amps.len();
    let mut base = 0;
    while base < dim {
        for i in base..base + bit {
            let j = i | bit;
            let a0 = amps[i];
            let a1 = amps[j];
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[j] = m[1][0] * a0 + m[1][1] * a1;
        }
        base += bit << 1;
    }
}

/// Apply a 4x4 matrix to qubits `(q0, q1)` of a `2^n`-amplitude slice.
pub(crate) fn apply_two_qubit(
    amps: &mut [Complex64],
    m: &[[Complex64; 4]; 4],
    q0: usize,
    q1: usize,
) {
    debug_assert_ne!(q0, q1);
    let b0 = 1usize << q0;
    let b1 = 1usize << q1;
    let (lo, hi) = if q0 < q1 { (q0, q1) } else { (q1, q0) };
    let dim = amps.len();
    for k in 0..dim >> 2 {
        // Re-insert zero bits at the two target positions.
        let with_lo = ((k >> lo) << (lo + 1)) | (k & ((1 << lo) - 1));
        let idx = ((with_lo >> hi) << (hi + 1)) | (with_lo & ((1 << hi) - 1));
        let i = [idx, idx | b0, idx | b1, idx | b0 | b1];
        let a = [amps[i[0]], amps[i[1]], amps[i[2]], amps[i[3]]];
        for r in 0..4 {
            amps[i[r]] = m[r][0] * a[0] + m[r][1] * a[1] + m[r][2] * a[2] + m[r][3] * a[3];
        }
    }
}
