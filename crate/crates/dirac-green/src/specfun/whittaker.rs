//! Whittaker functions of the first and second kind, built on the Kummer
//! kernels:
//!
//!   M_{a,b}(x) = e^{-x/2} x^{b+1/2} 1F1(b - a + 1/2; 2b + 1; x)
//!   W_{a,b}(x) = e^{-x/2} x^{b+1/2} U(b - a + 1/2, 2b + 1, x)
//!
//! W is symmetric under b -> -b (handled inside the U parameter reflection);
//! M is not, and requires 2b + 1 away from the non-positive integers.

use crate::error::{Error, Result};
use crate::numeric::dist_to_nonpositive_integer;
use crate::specfun::gamma::SignedLogValue;
use crate::specfun::kummer::{kummer_m_signed, kummer_u_signed, DELTA_INT};

/// First index, second index and argument of a Whittaker function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerArgs {
    pub a: f64,
    pub b: f64,
    pub x: f64,
}

impl WhittakerArgs {
    /// Validates x > 0. The first-kind constraint on 2b+1 is checked at
    /// evaluation time since it does not apply to W.
    pub fn new(a: f64, b: f64, x: f64) -> Result<Self> {
        if !(x > 0.0) {
            return Err(Error::Domain {
                what: "whittaker argument x",
                value: x,
            });
        }
        Ok(Self { a, b, x })
    }

    /// True when the arguments sit inside the accuracy contract box
    /// (|a| <= 10, b in [0.2, 10] up to the b -> -b symmetry, x in
    /// [1e-3, 50]); outside it results are still returned but downstream
    /// reports flag the degraded-accuracy regime.
    pub fn in_safe_box(&self) -> bool {
        self.a.abs() <= 10.0
            && (0.2..=10.0).contains(&self.b.abs())
            && (1e-3..=50.0).contains(&self.x)
    }
}

/// Whittaker function of the first kind, signed-log form.
pub fn whittaker_m_signed(args: WhittakerArgs) -> Result<SignedLogValue> {
    let WhittakerArgs { a, b, x } = args;
    if x <= 0.0 {
        return Err(Error::Domain {
            what: "whittaker_m argument x",
            value: x,
        });
    }
    if dist_to_nonpositive_integer(2.0 * b + 1.0) < DELTA_INT {
        return Err(Error::Domain {
            what: "whittaker_m index 2b+1 near non-positive integer",
            value: 2.0 * b + 1.0,
        });
    }
    let series = kummer_m_signed(b - a + 0.5, 2.0 * b + 1.0, x)?;
    Ok(SignedLogValue::from_exp(-0.5 * x)
        .mul(SignedLogValue::from_pow(x, b + 0.5))
        .mul(series))
}

/// Whittaker function of the first kind.
pub fn whittaker_m(args: WhittakerArgs) -> Result<f64> {
    whittaker_m_signed(args)?.to_f64_checked()
}

/// Whittaker function of the second kind, signed-log form. Decays like
/// e^{-x/2} x^a as x -> infinity.
pub fn whittaker_w_signed(args: WhittakerArgs) -> Result<SignedLogValue> {
    let WhittakerArgs { a, b, x } = args;
    if x <= 0.0 {
        return Err(Error::Domain {
            what: "whittaker_w argument x",
            value: x,
        });
    }
    let u = kummer_u_signed(b - a + 0.5, 2.0 * b + 1.0, x)?;
    Ok(SignedLogValue::from_exp(-0.5 * x)
        .mul(SignedLogValue::from_pow(x, b + 0.5))
        .mul(u))
}

/// Whittaker function of the second kind.
pub fn whittaker_w(args: WhittakerArgs) -> Result<f64> {
    whittaker_w_signed(args)?.to_f64_checked()
}
