//! Oracle helpers shared by the integration suites. Everything here is
//! deliberately independent of the library's solver paths: plain
//! bisection, exhaustive search, and textbook formulas re-typed from
//! scratch.

#![allow(dead_code)]

use rand::Rng;

/// Bisection to interval width `x_tol`; requires a sign change.
pub fn bisect_oracle(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, x_tol: f64) -> f64 {
    let f_lo = f(lo);
    let f_hi = f(hi);
    assert!(
        (f_lo < 0.0) != (f_hi < 0.0),
        "oracle bisection needs a sign change: f({lo}) = {f_lo}, f({hi}) = {f_hi}"
    );
    while hi - lo > x_tol {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == (f_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Standard-normal draw via Box-Muller, fed by the caller's RNG.
pub fn gaussian(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Relative error with an absolute floor for near-zero references.
pub fn rel_err(actual: f64, expected: f64) -> f64 {
    let scale = expected.abs().max(1e-300);
    (actual - expected).abs() / scale
}

/// Brute-force minimizer of a 1-D function over a uniform grid.
/// Returns the argmin.
pub fn grid_argmin(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, step: f64) -> f64 {
    let n = ((hi - lo) / step).round() as usize;
    let mut best_x = lo;
    let mut best_v = f(lo);
    for i in 1..=n {
        let x = lo + i as f64 * step;
        let v = f(x);
        if v < best_v {
            best_v = v;
            best_x = x;
        }
    }
    best_x
}
