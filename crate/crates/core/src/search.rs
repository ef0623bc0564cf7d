//! One-dimensional searches shared by the criteria and the EE solver.

use crate::channel::sinc_sq;

/// Absolute tolerance on `δ` when inverting `sinc²`.
pub const BISECTION_TOL: f64 = 1e-10;
pub const BISECTION_MAX_ITER: usize = 200;

/// Absolute tolerance of golden-section search on the unit interval.
pub const GOLDEN_TOL: f64 = 1e-10;

/// Largest `δ ∈ [0, π)` with `sinc²(δ) ≥ threshold`.
///
/// `None` when no such `δ` exists (`threshold > 1`) or when every `δ`
/// qualifies (`threshold ≤ 0`); callers tell the two apart from the sign
/// of the threshold.
pub fn delta_for_sinc_sq(threshold: f64) -> Option<f64> {
    if threshold.is_nan() || threshold <= 0.0 || threshold > 1.0 {
        return None;
    }
    if threshold == 1.0 {
        return Some(0.0);
    }
    // sinc² is strictly decreasing on (0, π), from 1 down to 0.
    let (mut lo, mut hi) = (0.0, std::f64::consts::PI);
    for _ in 0..BISECTION_MAX_ITER {
        if hi - lo <= BISECTION_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if sinc_sq(mid).expect("mid lies in [0, pi)") >= threshold {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// Maximizer of a unimodal `f` on `[0, 1]`, endpoints included.
/// Returns `(t, f(t))`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = (0.0f64, 1.0f64);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    let mut best = (mid, f(mid));
    for t in [0.0, 1.0] {
        let v = f(t);
        if v > best.1 {
            best = (t, v);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverts_sinc_sq() {
        for delta in [0.05, 0.5, 1.2972, 2.0, 3.0] {
            let th = sinc_sq(delta).unwrap();
            let back = delta_for_sinc_sq(th).unwrap();
            assert!((back - delta).abs() < 1e-9, "{delta} -> {back}");
        }
        assert_eq!(delta_for_sinc_sq(1.0), Some(0.0));
        assert_eq!(delta_for_sinc_sq(0.0), None);
        assert_eq!(delta_for_sinc_sq(-0.3), None);
        assert_eq!(delta_for_sinc_sq(1.2), None);
    }

    #[test]
    fn golden_section_finds_interior_and_endpoint_maxima() {
        let (t, v) = golden_section_max(|t| -(t - 0.3).powi(2), GOLDEN_TOL);
        assert!((t - 0.3).abs() < 1e-8);
        assert!(v.abs() < 1e-15);

        let (t, _) = golden_section_max(|t| t, GOLDEN_TOL);
        assert_eq!(t, 1.0);
        let (t, _) = golden_section_max(|t| -t, GOLDEN_TOL);
        assert_eq!(t, 0.0);
    }
}
