//! Closed-form relativistic two-point Green's functions for the
//! Dirac-oscillator and Dirac-Coulomb radial problems, together with an
//! independent ODE-based oracle and a verification suite that turns the
//! defining properties of these kernels (radial equation residuals,
//! derivative-jump strengths, pole spectra, nonrelativistic limits and
//! Whittaker ladder relations) into named, tolerance-bearing checks.

pub mod coulomb;
pub mod error;
pub mod kinematics;
pub mod numeric;
pub mod oracle;
pub mod oscillator;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use kinematics::{Component, GreenMatrix, Kinematics};
