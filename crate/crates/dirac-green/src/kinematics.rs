use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The relativistic frame shared by both radial problems: Compton scale,
/// relativistic energy (in units of mc^2) and the spin-orbit quantum number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    pub lambda_bar: f64,
    pub epsilon: f64,
    pub kappa: i32,
}

impl Kinematics {
    /// kappa = 0 does not occur in the radial decomposition and is rejected;
    /// problem-specific pole guards run at model construction.
    pub fn new(lambda_bar: f64, epsilon: f64, kappa: i32) -> Result<Self> {
        if !(lambda_bar > 0.0) {
            return Err(Error::Domain {
                what: "lambda_bar must be > 0",
                value: lambda_bar,
            });
        }
        if kappa == 0 {
            return Err(Error::Domain {
                what: "kappa must be a nonzero integer",
                value: 0.0,
            });
        }
        if !epsilon.is_finite() {
            return Err(Error::Domain {
                what: "epsilon",
                value: epsilon,
            });
        }
        Ok(Self {
            lambda_bar,
            epsilon,
            kappa,
        })
    }

    /// Squared wavenumber (eps^2 - 1) / lambda_bar^2 of the second-order
    /// radial equations.
    pub fn k_squared(&self) -> f64 {
        (self.epsilon * self.epsilon - 1.0) / (self.lambda_bar * self.lambda_bar)
    }
}

/// Spinor component selector for per-element operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    Plus,
    Minus,
}

impl Component {
    /// +1 for the upper component, -1 for the lower.
    pub fn sign(self) -> f64 {
        match self {
            Component::Plus => 1.0,
            Component::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Component::Plus => "plus",
            Component::Minus => "minus",
        }
    }
}

/// The four elements of the 2x2 radial Green's matrix at one point pair.
///
/// Evaluation at the swapped pair transposes the matrix: `gpp` and `gmm`
/// are functions of (r_<, r_>) only, while `gpm` and `gmp` trade places.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreenMatrix {
    pub r: f64,
    pub r_prime: f64,
    pub gpp: f64,
    pub gpm: f64,
    pub gmp: f64,
    pub gmm: f64,
}

impl GreenMatrix {
    /// The matrix at the exchanged point pair (r', r).
    pub fn exchanged(&self) -> GreenMatrix {
        GreenMatrix {
            r: self.r_prime,
            r_prime: self.r,
            gpp: self.gpp,
            gpm: self.gmp,
            gmp: self.gpm,
            gmm: self.gmm,
        }
    }

    pub fn element(&self, row: Component, col: Component) -> f64 {
        match (row, col) {
            (Component::Plus, Component::Plus) => self.gpp,
            (Component::Plus, Component::Minus) => self.gpm,
            (Component::Minus, Component::Plus) => self.gmp,
            (Component::Minus, Component::Minus) => self.gmm,
        }
    }
}
