use std::fmt;

/// Errors produced by the special-function kernels, the closed-form
/// Green's-function evaluators and the ODE oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A gamma-function argument (or a derived quantum-number condition)
    /// landed within the pole guard of a non-positive integer.
    Pole {
        /// The offending gamma argument.
        argument: f64,
        /// The nearest non-positive integer, reported as `n` where the
        /// argument is close to `-n`.
        nearest_n: i64,
        /// Which quantity tripped the guard (e.g. `"-mu+2nu"`).
        what: &'static str,
    },
    /// Input outside a function's domain.
    Domain { what: &'static str, value: f64 },
    /// The off-diagonal combination weight xi is at its degenerate value 1/2.
    XiDegenerate { xi: f64 },
    /// A value overflowed f64; the magnitude is available in log form.
    Overflow { log_abs: f64, sign: f64 },
    /// Series or quadrature failed to converge.
    Convergence { what: &'static str },
    /// The numerical sweep blew up even after on-the-fly renormalization.
    Stiffness { at_r: f64 },
    /// Two grid solutions are numerically proportional; their Wronskian
    /// cannot normalize a Green's function.
    Degenerate { wronskian: f64, scale: f64 },
    /// Requested evaluation point is too close to the diagonal for the
    /// finite-difference stencil.
    Diagonal { r: f64, r_prime: f64 },
    /// A pole scan found no root in the requested window.
    NoPole { window: (f64, f64) },
    /// Grid lookup outside the tabulated range.
    OffGrid { r: f64, r_min: f64, r_max: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole {
                argument,
                nearest_n,
                what,
            } => write!(
                f,
                "gamma pole guard: {what} = {argument} is within the guard of -{nearest_n}"
            ),
            Error::Domain { what, value } => write!(f, "domain error: {what} = {value}"),
            Error::XiDegenerate { xi } => {
                write!(
                    f,
                    "xi = {xi} is degenerate; the off-diagonal forms require xi != 1/2"
                )
            }
            Error::Overflow { log_abs, sign } => {
                write!(f, "overflow: sign {sign}, log|value| = {log_abs}")
            }
            Error::Convergence { what } => write!(f, "failed to converge: {what}"),
            Error::Stiffness { at_r } => write!(f, "integration overflowed near r = {at_r}"),
            Error::Degenerate { wronskian, scale } => write!(
                f,
                "solutions are not independent: wronskian {wronskian} below 1e-12 of scale {scale}"
            ),
            Error::Diagonal { r, r_prime } => write!(
                f,
                "({r}, {r_prime}) is inside the differentiation stencil of the diagonal"
            ),
            Error::NoPole { window } => {
                write!(f, "no pole found in ({}, {})", window.0, window.1)
            }
            Error::OffGrid { r, r_min, r_max } => {
                write!(f, "r = {r} outside grid [{r_min}, {r_max}]")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
