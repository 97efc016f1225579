//! Scalar root finding and minimization used across the model modules.
//!
//! Both routines are bracketed: the root finder never steps outside the
//! caller's interval (Newton steps that would leave it fall back to
//! bisection), and the minimizer is golden-section search accelerated by
//! parabolic interpolation.

use crate::error::{Error, Result};

/// Outcome of a bracketed root solve.
#[derive(Debug, Clone, Copy)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Finds `x` in `[lo, hi]` with `|f(x)| <= f_tol`, given `f(lo)` and
/// `f(hi)` of opposite sign.
///
/// Newton steps from the current iterate are accepted only while they
/// stay inside the shrinking bracket; otherwise the step is replaced by
/// the bracket midpoint. Returns `NoConvergence` if the tolerance is not
/// met within `max_iter` iterations and the bracket can no longer shrink.
pub fn bisected_newton(
    mut f: impl FnMut(f64) -> f64,
    mut df: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    f_tol: f64,
    max_iter: usize,
) -> Result<Root> {
    debug_assert!(lo <= hi);
    let mut f_lo = f(lo);
    if f_lo.abs() <= f_tol {
        return Ok(Root {
            x: lo,
            residual: f_lo,
            iterations: 0,
        });
    }
    let f_hi = f(hi);
    if f_hi.abs() <= f_tol {
        return Ok(Root {
            x: hi,
            residual: f_hi,
            iterations: 0,
        });
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::Domain(format!(
            "root not bracketed on [{lo}, {hi}]"
        )));
    }

    let mut x = 0.5 * (lo + hi);
    for iter in 1..=max_iter {
        let fx = f(x);
        if fx.abs() <= f_tol {
            return Ok(Root {
                x,
                residual: fx,
                iterations: iter,
            });
        }
        if (fx < 0.0) == (f_lo < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }

        let dfx = df(x);
        let mut next = if dfx != 0.0 { x - fx / dfx } else { f64::NAN };
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if next == x || next == lo || next == hi {
            // Bracket exhausted at f64 resolution.
            let fx = f(next);
            if fx.abs() <= f_tol {
                return Ok(Root {
                    x: next,
                    residual: fx,
                    iterations: iter,
                });
            }
            return Err(Error::NoConvergence {
                residual: fx,
                iterations: iter,
            });
        }
        x = next;
    }
    Err(Error::NoConvergence {
        residual: f(x),
        iterations: max_iter,
    })
}

/// Outcome of a bracketed scalar minimization.
#[derive(Debug, Clone, Copy)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub iterations: usize,
}

const GOLDEN_SECTION: f64 = 0.381_966_011_250_105;

/// Minimizes `f` on `[lo, hi]` to a relative x-tolerance `rel_tol`.
///
/// Golden-section search with parabolic interpolation through the three
/// best points; a parabolic step is taken only when it lands inside the
/// bracket and shrinks faster than the section step would.
pub fn brent_min(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    rel_tol: f64,
    max_iter: usize,
) -> Minimum {
    let (mut a, mut b) = if lo < hi { (lo, hi) } else { (hi, lo) };
    let rel_tol = rel_tol.abs().max(1e-14);

    let mut x = a + GOLDEN_SECTION * (b - a);
    let mut w = x;
    let mut v = x;
    let mut fx = f(x);
    let mut fw = fx;
    let mut fv = fx;

    let mut step = 0.0_f64;
    let mut prev_step = 0.0_f64;
    let mut iterations = 0;

    for iter in 1..=max_iter {
        iterations = iter;
        let mid = 0.5 * (a + b);
        let tol1 = rel_tol * x.abs() + 1e-300;
        let tol2 = 2.0 * tol1;
        if (x - mid).abs() <= tol2 - 0.5 * (b - a) {
            break;
        }

        let mut take_golden = true;
        if prev_step.abs() > tol1 {
            // Parabola through (v, fv), (w, fw), (x, fx).
            let r = (x - w) * (fx - fv);
            let q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            let mut q2 = 2.0 * (q - r);
            if q2 > 0.0 {
                p = -p;
            } else {
                q2 = -q2;
            }
            if p.abs() < (0.5 * q2 * prev_step).abs() && p > q2 * (a - x) && p < q2 * (b - x) {
                prev_step = step;
                step = p / q2;
                let u = x + step;
                if (u - a) < tol2 || (b - u) < tol2 {
                    step = if x < mid { tol1 } else { -tol1 };
                }
                take_golden = false;
            }
        }
        if take_golden {
            prev_step = if x < mid { b - x } else { a - x };
            step = GOLDEN_SECTION * prev_step;
        }

        let u = if step.abs() >= tol1 {
            x + step
        } else if step > 0.0 {
            x + tol1
        } else {
            x - tol1
        };
        let fu = f(u);

        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if u >= x {
                b = u;
            } else {
                a = u;
            }
            if fu <= fw || w == x {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if fu <= fv || v == x || v == w {
                v = u;
                fv = fu;
            }
        }
    }

    Minimum {
        x,
        value: fx,
        iterations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_finds_cubic_root() {
        let root = bisected_newton(
            |x| x * x * x - 2.0,
            |x| 3.0 * x * x,
            0.0,
            2.0,
            1e-14,
            100,
        )
        .unwrap();
        assert!((root.x - 2.0_f64.cbrt()).abs() < 1e-12);
        assert!(root.residual.abs() <= 1e-14);
    }

    #[test]
    fn newton_rejects_unbracketed() {
        let err = bisected_newton(|x| x * x + 1.0, |x| 2.0 * x, -1.0, 1.0, 1e-12, 100);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn newton_accepts_root_at_endpoint() {
        let root = bisected_newton(|x| x, |_| 1.0, 0.0, 1.0, 1e-14, 100).unwrap();
        assert_eq!(root.x, 0.0);
    }

    #[test]
    fn brent_min_quadratic() {
        let m = brent_min(|x| (x - 0.3).powi(2) + 1.0, -1.0, 2.0, 1e-10, 200);
        assert!((m.x - 0.3).abs() < 1e-8);
        assert!((m.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn brent_min_asymmetric_quartic() {
        let m = brent_min(|x: f64| x.powi(4) - 2.0 * x + 1.0, 0.0, 2.0, 1e-10, 200);
        // worked minimizer: d/dx = 4x^3 - 2 = 0 at (1/2)^(1/3)
        assert!((m.x - 0.5_f64.cbrt()).abs() < 1e-7);
    }
}
