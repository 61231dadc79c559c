//! Fixed-step Numerov sweep for y''(x) = Q(x) y(x) on a uniform grid, with
//! on-the-fly renormalization so exponentially growing solutions cannot
//! overflow; the accumulated rescale is returned as a log offset.

use crate::error::{Error, Result};

const RENORM_THRESHOLD: f64 = 1e100;

/// Sweep outcome: `values[i]` times `exp(log_scale)` is the solution at
/// grid index i.
pub struct Sweep {
    pub values: Vec<f64>,
    pub log_scale: f64,
}

/// Integrates outward (increasing index) from `y0 = y[0]`, `y1 = y[1]`.
/// `q` holds the precomputed Q values at the grid nodes, `h` the uniform
/// step of the independent variable.
pub fn numerov_outward(q: &[f64], h: f64, y0: f64, y1: f64) -> Result<Sweep> {
    let n = q.len();
    assert!(n >= 3, "need at least 3 grid points");
    let mut y = vec![0.0_f64; n];
    y[0] = y0;
    y[1] = y1;
    let h2 = h * h;
    let mut log_scale = 0.0;
    for i in 1..n - 1 {
        let c_next = 1.0 - h2 * q[i + 1] / 12.0;
        let b = 2.0 * (1.0 + 5.0 * h2 * q[i] / 12.0) * y[i];
        let c_prev = (1.0 - h2 * q[i - 1] / 12.0) * y[i - 1];
        y[i + 1] = (b - c_prev) / c_next;
        if !y[i + 1].is_finite() {
            return Err(Error::Stiffness { at_r: i as f64 });
        }
        if y[i + 1].abs() > RENORM_THRESHOLD {
            let s = y[i + 1].abs();
            for v in y[..=i + 1].iter_mut() {
                *v /= s;
            }
            log_scale += s.ln();
        }
    }
    Ok(Sweep {
        values: y,
        log_scale,
    })
}

/// Integrates inward (decreasing index) from `y_last = y[n-1]`,
/// `y_second_last = y[n-2]`.
pub fn numerov_inward(q: &[f64], h: f64, y_last: f64, y_second_last: f64) -> Result<Sweep> {
    let n = q.len();
    assert!(n >= 3, "need at least 3 grid points");
    let mut y = vec![0.0_f64; n];
    y[n - 1] = y_last;
    y[n - 2] = y_second_last;
    let h2 = h * h;
    let mut log_scale = 0.0;
    for i in (1..n - 1).rev() {
        let c_prev = 1.0 - h2 * q[i - 1] / 12.0;
        let b = 2.0 * (1.0 + 5.0 * h2 * q[i] / 12.0) * y[i];
        let c_next = (1.0 - h2 * q[i + 1] / 12.0) * y[i + 1];
        y[i - 1] = (b - c_next) / c_prev;
        if !y[i - 1].is_finite() {
            return Err(Error::Stiffness { at_r: i as f64 });
        }
        if y[i - 1].abs() > RENORM_THRESHOLD {
            let s = y[i - 1].abs();
            for v in y[i - 1..].iter_mut() {
                *v /= s;
            }
            log_scale += s.ln();
        }
    }
    Ok(Sweep {
        values: y,
        log_scale,
    })
}
