//! Two independent evaluations of the Lobachevsky function, neither using
//! the library's series.

use std::f64::consts::PI;

/// Kahan-compensated `½ Σ_{n≤terms} sin(2nθ)/n²`.
pub fn lobachevsky_series(theta: f64, terms: u64) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    // smallest terms first
    for n in (1..=terms).rev() {
        let n = n as f64;
        let y = (2.0 * n * theta).sin() / (n * n) - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    0.5 * sum
}

/// `-∫₀^θ ln(2 sin t) dt`, split as the closed form of `-∫ ln(2t)` plus a
/// Romberg integral of the smooth remainder `ln(sin t / t)`.
pub fn lobachevsky_quadrature(theta: f64) -> f64 {
    let g = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let singular = theta * (2.0 * theta).ln() - theta;
    -(singular + romberg(g, 0.0, theta, 22))
}

fn romberg(f: impl Fn(f64) -> f64, a: f64, b: f64, levels: usize) -> f64 {
    let mut prev = vec![0.5 * (b - a) * (f(a) + f(b))];
    for k in 1..levels {
        let steps = 1u64 << k;
        let h = (b - a) / steps as f64;
        let mid: f64 = (1..steps).step_by(2).map(|i| f(a + i as f64 * h)).sum();
        let mut row = vec![0.5 * prev[0] + h * mid];
        for j in 1..=k {
            let p = 4f64.powi(j as i32);
            row.push((p * row[j - 1] - prev[j - 1]) / (p - 1.0));
        }
        if (row[k] - prev[k - 1]).abs() < 1e-16 {
            return row[k];
        }
        prev = row;
    }
    prev[prev.len() - 1]
}

pub fn v3_series() -> f64 {
    3.0 * lobachevsky_series(PI / 3.0, 20_000_000)
}

pub fn v3_quadrature() -> f64 {
    3.0 * lobachevsky_quadrature(PI / 3.0)
}
