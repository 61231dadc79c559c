//! First-order ladder relations between neighboring Whittaker functions,
//! exposed as numerically measurable residuals. Each relation applies a
//! first-order operator
//!
//!   d/dx + c_inv/x + c_lin * x + c_const
//!
//! to a base function (M or W, with argument x^2 for the A1/A2 family and x
//! for the A3/A4 family) and compares against a single shifted-index
//! function. The derivative is formed by 5-point central differencing with
//! step x*1e-4, Richardson-extrapolated once; these are test oracles, not
//! hot paths.

use crate::error::{Error, Result};
use crate::numeric::derivative_richardson;
use crate::specfun::kummer::DELTA_INT;
use crate::specfun::whittaker::{whittaker_m, whittaker_w, WhittakerArgs};

/// The eight ladder relations, in four families of two (raising and
/// lowering the second index, for M and for W, with squared and plain
/// arguments).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderIdentity {
    A1a,
    A1b,
    A2a,
    A2b,
    A3a,
    A3b,
    A4a,
    A4b,
}

impl LadderIdentity {
    pub const ALL: [LadderIdentity; 8] = [
        LadderIdentity::A1a,
        LadderIdentity::A1b,
        LadderIdentity::A2a,
        LadderIdentity::A2b,
        LadderIdentity::A3a,
        LadderIdentity::A3b,
        LadderIdentity::A4a,
        LadderIdentity::A4b,
    ];

    pub fn label(self) -> &'static str {
        match self {
            LadderIdentity::A1a => "A1a",
            LadderIdentity::A1b => "A1b",
            LadderIdentity::A2a => "A2a",
            LadderIdentity::A2b => "A2b",
            LadderIdentity::A3a => "A3a",
            LadderIdentity::A3b => "A3b",
            LadderIdentity::A4a => "A4a",
            LadderIdentity::A4b => "A4b",
        }
    }

    /// Smallest |denominator| appearing in the relation's own coefficients.
    /// Zero means the relation is singular at these parameters.
    pub fn min_denominator(self, _a: f64, b: f64) -> f64 {
        match self {
            LadderIdentity::A1a | LadderIdentity::A2a | LadderIdentity::A2b => f64::INFINITY,
            LadderIdentity::A1b | LadderIdentity::A4b => (b + 0.5).abs(),
            LadderIdentity::A3a | LadderIdentity::A4a => (2.0 * b - 1.0).abs(),
            LadderIdentity::A3b => (b + 0.5).abs().min((b + 1.0).abs()),
        }
    }

    fn uses_squared_argument(self) -> bool {
        matches!(
            self,
            LadderIdentity::A1a | LadderIdentity::A1b | LadderIdentity::A2a | LadderIdentity::A2b
        )
    }
}

struct Operator {
    c_inv: f64,
    c_lin: f64,
    c_const: f64,
}

fn eval_m(a: f64, b: f64, arg: f64) -> Result<f64> {
    whittaker_m(WhittakerArgs { a, b, x: arg })
}

fn eval_w(a: f64, b: f64, arg: f64) -> Result<f64> {
    whittaker_w(WhittakerArgs { a, b, x: arg })
}

/// Scaled residual |LHS - RHS| / scale of the selected relation at (a, b, x),
/// where the scale is the magnitude of the terms entering the comparison
/// (so relations between exponentially large function values are judged
/// relatively, not absolutely).
pub fn ladder_residual(identity: LadderIdentity, a: f64, b: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain {
            what: "ladder argument x",
            value: x,
        });
    }
    if identity.min_denominator(a, b) < DELTA_INT {
        return Err(Error::Domain {
            what: "ladder relation singular denominator",
            value: b,
        });
    }

    let squared = identity.uses_squared_argument();
    let arg_of = move |t: f64| if squared { t * t } else { t };

    // base function, operator coefficients and the shifted-index right side
    let (base, op, rhs): (Box<dyn Fn(f64) -> Result<f64>>, Operator, f64) = match identity {
        LadderIdentity::A1a => (
            Box::new(move |t| eval_m(a, b, arg_of(t))),
            Operator {
                c_inv: 2.0 * b - 1.0,
                c_lin: 1.0,
                c_const: 0.0,
            },
            4.0 * b * eval_m(a - 0.5, b - 0.5, arg_of(x))?,
        ),
        LadderIdentity::A1b => (
            Box::new(move |t| eval_m(a, b, arg_of(t))),
            Operator {
                c_inv: -(2.0 * b + 1.0),
                c_lin: 1.0,
                c_const: 0.0,
            },
            (1.0 - a / (b + 0.5)) * eval_m(a - 0.5, b + 0.5, arg_of(x))?,
        ),
        LadderIdentity::A2a => (
            Box::new(move |t| eval_w(a, b, arg_of(t))),
            Operator {
                c_inv: -(1.0 + 2.0 * b),
                c_lin: 1.0,
                c_const: 0.0,
            },
            2.0 * (a - b - 0.5) * eval_w(a - 0.5, b + 0.5, arg_of(x))?,
        ),
        LadderIdentity::A2b => (
            Box::new(move |t| eval_w(a, b, arg_of(t))),
            Operator {
                c_inv: -(1.0 + 2.0 * b),
                c_lin: -1.0,
                c_const: 0.0,
            },
            -2.0 * eval_w(a + 0.5, b + 0.5, arg_of(x))?,
        ),
        LadderIdentity::A3a => (
            Box::new(move |t| eval_m(a, b, arg_of(t))),
            Operator {
                c_inv: b - 0.5,
                c_lin: 0.0,
                c_const: -a / (2.0 * b - 1.0),
            },
            2.0 * b * eval_m(a, b - 1.0, arg_of(x))?,
        ),
        LadderIdentity::A3b => (
            Box::new(move |t| eval_m(a, b, arg_of(t))),
            Operator {
                c_inv: -(b + 0.5),
                c_lin: 0.0,
                c_const: a / (2.0 * b + 1.0),
            },
            0.125 / (b + 1.0) * (1.0 - (a / (b + 0.5)).powi(2)) * eval_m(a, b + 1.0, arg_of(x))?,
        ),
        LadderIdentity::A4a => (
            Box::new(move |t| eval_w(a, b, arg_of(t))),
            Operator {
                c_inv: b - 0.5,
                c_lin: 0.0,
                c_const: -a / (2.0 * b - 1.0),
            },
            -0.5 * (1.0 + a / (b - 0.5)) * eval_w(a, b - 1.0, arg_of(x))?,
        ),
        LadderIdentity::A4b => (
            Box::new(move |t| eval_w(a, b, arg_of(t))),
            Operator {
                c_inv: -(b + 0.5),
                c_lin: 0.0,
                c_const: a / (2.0 * b + 1.0),
            },
            0.5 * (-1.0 + a / (b + 0.5)) * eval_w(a, b + 1.0, arg_of(x))?,
        ),
    };

    let f = base(x)?;
    let h = x * 1e-4;
    // finite differencing may step outside the function's domain only for
    // absurdly small x; the x*1e-4 step keeps all stencil points positive
    let deriv = derivative_richardson(&|t: f64| base(t).unwrap_or(f64::NAN), x, h);
    if !deriv.is_finite() {
        return Err(Error::Convergence {
            what: "ladder derivative stencil",
        });
    }
    let lhs = deriv + (op.c_inv / x + op.c_lin * x + op.c_const) * f;
    let lhs_scale =
        deriv.abs() + ((op.c_inv / x).abs() + (op.c_lin * x).abs() + op.c_const.abs()) * f.abs();
    let scale = lhs_scale.max(rhs.abs()).max(1e-300);
    Ok((lhs - rhs).abs() / scale)
}
