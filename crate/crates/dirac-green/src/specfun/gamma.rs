//! Log-gamma with sign tracking for negative arguments, plus signed
//! log-magnitude arithmetic used to combine gamma-ratio prefactors with
//! exponentially large or small Whittaker factors without overflow.

use crate::error::{Error, Result};
use crate::numeric::dist_to_nonpositive_integer;

/// Guard radius around gamma poles and integer parameter degeneracies.
pub const DELTA_POLE: f64 = 1e-6;

/// A real number stored as `sign * exp(log_abs)`.
///
/// `sign` is +1, -1 or 0; `sign == 0` encodes an exact zero (log_abs is
/// then meaningless and held at -inf).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    pub log_abs: f64,
    pub sign: f64,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue {
        log_abs: f64::NEG_INFINITY,
        sign: 0.0,
    };

    pub const ONE: SignedLogValue = SignedLogValue {
        log_abs: 0.0,
        sign: 1.0,
    };

    pub fn new(log_abs: f64, sign: f64) -> Self {
        if sign == 0.0 {
            Self::ZERO
        } else {
            Self {
                log_abs,
                sign: sign.signum(),
            }
        }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            Self {
                log_abs: v.abs().ln(),
                sign: v.signum(),
            }
        }
    }

    /// Collapse to f64. Magnitudes beyond f64 range come out as +-inf / 0.
    pub fn to_f64(self) -> f64 {
        self.sign * self.log_abs.exp()
    }

    /// Collapse to f64, erroring on overflow instead of returning inf.
    pub fn to_f64_checked(self) -> Result<f64> {
        if self.sign != 0.0 && self.log_abs > 709.0 {
            return Err(Error::Overflow {
                log_abs: self.log_abs,
                sign: self.sign,
            });
        }
        Ok(self.to_f64())
    }

    pub fn mul(self, other: Self) -> Self {
        Self::new(self.log_abs + other.log_abs, self.sign * other.sign)
    }

    pub fn div(self, other: Self) -> Self {
        debug_assert!(other.sign != 0.0, "division by signed-log zero");
        Self::new(self.log_abs - other.log_abs, self.sign * other.sign)
    }

    pub fn recip(self) -> Self {
        debug_assert!(self.sign != 0.0);
        Self::new(-self.log_abs, self.sign)
    }

    pub fn neg(self) -> Self {
        Self::new(self.log_abs, -self.sign)
    }

    pub fn abs(self) -> Self {
        Self::new(self.log_abs, self.sign.abs())
    }

    /// Signed log-sum-exp: self + other, staying in log space.
    pub fn add(self, other: Self) -> Self {
        if self.sign == 0.0 {
            return other;
        }
        if other.sign == 0.0 {
            return self;
        }
        let (big, small) = if self.log_abs >= other.log_abs {
            (self, other)
        } else {
            (other, self)
        };
        let ratio = (small.log_abs - big.log_abs).exp() * small.sign * big.sign;
        // ratio in (-1, 1]
        let s = 1.0 + ratio;
        if s == 0.0 {
            return Self::ZERO;
        }
        Self::new(big.log_abs + s.abs().ln(), big.sign * s.signum())
    }

    /// `x^p` for x > 0 encoded directly in log space.
    pub fn from_pow(x: f64, p: f64) -> Self {
        debug_assert!(x > 0.0);
        Self::new(p * x.ln(), 1.0)
    }

    /// `exp(e)` encoded directly in log space.
    pub fn from_exp(e: f64) -> Self {
        Self::new(e, 1.0)
    }
}

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const LN_SQRT_2PI: f64 = 0.91893853320467274178;
const LN_PI: f64 = 1.1447298858494001741;

fn lanczos_ln_gamma_positive(x: f64) -> f64 {
    // valid for x > 0.5
    let z = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        a += c / (z + (i + 1) as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + a.ln()
}

/// ln|sin(pi x)| and sign(sin(pi x)), with argument reduction so large |x|
/// stays accurate.
fn ln_abs_sin_pi(x: f64) -> (f64, f64) {
    let r = x - x.round(); // in [-0.5, 0.5]
    let s = (std::f64::consts::PI * r).sin();
    // sin(pi x) = sin(pi r) * (-1)^round(x)
    let parity = if (x.round() as i64).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    let v = s * parity;
    (v.abs().ln(), v.signum())
}

/// log|Gamma(x)| together with the sign of Gamma(x).
///
/// Errors with [`Error::Pole`] when `x` is within [`DELTA_POLE`] of a
/// non-positive integer. Negative non-integer arguments go through the
/// reflection formula Gamma(x) Gamma(1-x) = pi / sin(pi x).
pub fn ln_gamma_signed(x: f64) -> Result<SignedLogValue> {
    if !x.is_finite() {
        return Err(Error::Domain {
            what: "ln_gamma argument",
            value: x,
        });
    }
    if dist_to_nonpositive_integer(x) < DELTA_POLE {
        return Err(Error::Pole {
            argument: x,
            nearest_n: (-x.round()) as i64,
            what: "gamma argument",
        });
    }
    if x > 0.5 {
        Ok(SignedLogValue::new(lanczos_ln_gamma_positive(x), 1.0))
    } else {
        // reflection: ln|Gamma(x)| = ln(pi) - ln|sin(pi x)| - ln Gamma(1-x)
        let (ln_sin, sign_sin) = ln_abs_sin_pi(x);
        let log_abs = LN_PI - ln_sin - lanczos_ln_gamma_positive(1.0 - x);
        Ok(SignedLogValue::new(log_abs, sign_sin))
    }
}

/// 1/Gamma(x) as a plain f64. Entire function, evaluated without any pole
/// guard: it passes smoothly through its zeros at the non-positive integers
/// (exactly 0.0 there), making it suitable for pole scans by sign change
/// and for root-finding to full precision.
pub fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.round() {
        return 0.0;
    }
    if x > 0.5 {
        (-lanczos_ln_gamma_positive(x)).exp()
    } else {
        // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
        let (ln_sin, sign_sin) = ln_abs_sin_pi(x);
        sign_sin * (ln_sin + lanczos_ln_gamma_positive(1.0 - x) - LN_PI).exp()
    }
}
