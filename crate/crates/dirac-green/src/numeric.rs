//! Small numerical helpers shared across the crate: root bracketing and
//! bisection, finite-difference derivatives, low-discrepancy sampling,
//! cubic interpolation and log-log slope fits.

/// Bisection on a bracketing interval `[a, b]` with `f(a)` and `f(b)` of
/// opposite sign. Converges to ~1 ulp; an exact zero of `f` at a midpoint is
/// returned as-is, so roots at representable points (e.g. 1.0) come out exact.
pub fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            return Some(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}

/// 5-point central first derivative, O(h^4).
pub fn derivative_5pt<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// 5-point derivative Richardson-extrapolated once (h and h/2).
pub fn derivative_richardson<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    let d_h = derivative_5pt(f, x, h);
    let d_h2 = derivative_5pt(f, x, 0.5 * h);
    (16.0 * d_h2 - d_h) / 15.0
}

/// 3-point second derivative, O(h^2).
pub fn second_derivative_3pt<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> f64 {
    (f(x - h) - 2.0 * f(x) + f(x + h)) / (h * h)
}

/// Halton low-discrepancy value: `index`-th element of the base-`base`
/// van der Corput sequence.
pub fn halton(mut index: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while index > 0 {
        f /= base as f64;
        r += f * (index % base) as f64;
        index /= base;
    }
    r
}

/// Least-squares slope of ln(y) against ln(x). Used for scaling-exponent fits.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..xs.len() {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    num / den
}

/// 4-point Lagrange (cubic) interpolation through `(xs[i], ys[i])`.
pub fn lagrange_cubic(xs: &[f64; 4], ys: &[f64; 4], x: f64) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        let mut w = ys[i];
        for j in 0..4 {
            if i != j {
                w *= (x - xs[j]) / (xs[i] - xs[j]);
            }
        }
        acc += w;
    }
    acc
}

/// Distance from `x` to the nearest integer.
pub fn dist_to_integer(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Distance from `x` to the nearest non-positive integer (0, -1, -2, ...).
/// For x > 0.5 this is just the distance to 0 clamped through x itself.
pub fn dist_to_nonpositive_integer(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        dist_to_integer(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bisect_finds_sqrt2() {
        let f = |x: f64| x * x - 2.0;
        let r = bisect(&f, 1.0, 2.0).unwrap();
        assert_relative_eq!(r, 2.0_f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn bisect_exact_midpoint_root() {
        // interval symmetric about 1.0: the first midpoint is exactly 1.0
        let f = |x: f64| x - 1.0;
        let r = bisect(&f, 0.9, 1.1).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn derivative_of_exp() {
        let d = derivative_richardson(&|x: f64| x.exp(), 1.0, 1e-2);
        assert_relative_eq!(d, 1.0_f64.exp(), max_relative = 1e-11);
    }

    #[test]
    fn second_derivative_of_sin() {
        let d = second_derivative_3pt(&|x: f64| x.sin(), 0.7, 1e-4);
        assert_relative_eq!(d, -(0.7_f64.sin()), max_relative = 1e-6);
    }

    #[test]
    fn halton_first_values_base2() {
        assert_relative_eq!(halton(1, 2), 0.5);
        assert_relative_eq!(halton(2, 2), 0.25);
        assert_relative_eq!(halton(3, 2), 0.75);
    }

    #[test]
    fn slope_of_pure_power() {
        let xs = [0.1, 0.03, 0.01, 0.003];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x * x).collect();
        assert_relative_eq!(log_log_slope(&xs, &ys), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn cubic_reproduces_cubic() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let p = |x: f64| 1.0 + 2.0 * x - x * x + 0.5 * x * x * x;
        let ys = [p(0.0), p(1.0), p(2.0), p(3.0)];
        assert_relative_eq!(
            lagrange_cubic(&xs, &ys, 1.37),
            p(1.37),
            max_relative = 1e-14
        );
    }
}
