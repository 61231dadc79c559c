//! The benchmark configuration set shared by the verification suites, the
//! CLI and the acceptance tests: both problems at kappa in {+-1, +-2} with
//! off-pole energies placed midway between pole-ladder rungs.

use crate::coulomb::{self, CoulombModel};
use crate::error::Result;
use crate::kinematics::{Component, GreenMatrix, Kinematics};
use crate::oracle::ProblemSpec;
use crate::oscillator::{self, OscillatorModel};

/// Fine-structure constant; the default Compton scale of Coulomb runs.
pub const ALPHA: f64 = 0.0072973525693;

/// A closed-form Green's matrix evaluator for one model.
#[derive(Debug, Clone, Copy)]
pub enum ClosedForm {
    Oscillator(OscillatorModel),
    Coulomb(CoulombModel),
}

impl ClosedForm {
    pub fn problem(&self) -> ProblemSpec {
        match self {
            ClosedForm::Oscillator(m) => {
                ProblemSpec::oscillator(m.kin, m.omega).expect("validated model")
            }
            ClosedForm::Coulomb(m) => ProblemSpec::coulomb(m.kin, m.z).expect("validated model"),
        }
    }

    pub fn kin(&self) -> Kinematics {
        match self {
            ClosedForm::Oscillator(m) => m.kin,
            ClosedForm::Coulomb(m) => m.kin,
        }
    }

    pub fn diag(&self, component: Component, r: f64, r_prime: f64) -> Result<f64> {
        match self {
            ClosedForm::Oscillator(m) => oscillator::g_diag_osc(m, component, r, r_prime),
            ClosedForm::Coulomb(m) => coulomb::g_diag_coul(m, component, r, r_prime),
        }
    }

    /// Diagonal element with detuning knobs (negative-control hooks).
    pub fn diag_detuned(
        &self,
        component: Component,
        index_shift: f64,
        prefactor_scale: f64,
        r: f64,
        r_prime: f64,
    ) -> Result<f64> {
        match self {
            ClosedForm::Oscillator(m) => oscillator::g_diag_osc_detuned(
                m,
                component,
                index_shift,
                prefactor_scale,
                r,
                r_prime,
            ),
            ClosedForm::Coulomb(m) => {
                coulomb::g_diag_coul_detuned(m, component, index_shift, prefactor_scale, r, r_prime)
            }
        }
    }

    pub fn offdiag(&self, xi: f64, r: f64, r_prime: f64) -> Result<(f64, f64)> {
        match self {
            ClosedForm::Oscillator(m) => oscillator::g_offdiag_osc(m, xi, r, r_prime),
            ClosedForm::Coulomb(m) => coulomb::g_offdiag_coul(m, xi, r, r_prime),
        }
    }

    pub fn matrix(&self, xi: f64, r: f64, r_prime: f64) -> Result<GreenMatrix> {
        match self {
            ClosedForm::Oscillator(m) => oscillator::green_matrix(m, xi, r, r_prime),
            ClosedForm::Coulomb(m) => coulomb::green_matrix(m, xi, r, r_prime),
        }
    }

    /// Delta-source strength (C +- eps) of the selected channel.
    pub fn source_strength(&self, component: Component) -> f64 {
        let problem = self.problem();
        problem.c() + component.sign() * self.kin().epsilon
    }
}

/// One benchmark configuration.
#[derive(Debug, Clone)]
pub struct BenchmarkCase {
    pub label: String,
    pub closed: ClosedForm,
    /// Interior source point for residual checks.
    pub r_source: f64,
    /// Radial window for residual sampling and oracle point pairs.
    pub r_window: (f64, f64),
    /// Source points for the jump checks.
    pub jump_sources: [f64; 3],
}

/// Oscillator benchmark: lb = 0.1, omega = 1, epsilon midway between the
/// mu-ladder rungs of the selected kappa.
pub fn oscillator_case(kappa: i32) -> BenchmarkCase {
    let (lb, omega) = (0.1, 1.0);
    let mu_mid = if kappa > 0 {
        kappa as f64 + 0.5 + 0.5
    } else {
        1.5
    };
    let epsilon = (1.0 + 4.0 * lb * lb * omega * omega * mu_mid).sqrt();
    let kin = Kinematics::new(lb, epsilon, kappa).expect("valid kinematics");
    let model = OscillatorModel::new(kin, omega).expect("off-pole benchmark");
    BenchmarkCase {
        label: format!("oscillator-kappa{kappa}"),
        closed: ClosedForm::Oscillator(model),
        r_source: 1.1,
        r_window: (0.4, 2.4),
        jump_sources: [0.7, 1.0, 1.5],
    }
}

/// Coulomb benchmark: lb = alpha, Z = -1, epsilon between the first and
/// second hydrogenic levels (mapped energy -0.3).
pub fn coulomb_case(kappa: i32) -> BenchmarkCase {
    let lb = ALPHA;
    let e_eff = -0.3;
    let epsilon = (1.0 + 2.0 * lb * lb * e_eff).sqrt();
    let kin = Kinematics::new(lb, epsilon, kappa).expect("valid kinematics");
    let model = CoulombModel::new(kin, -1.0).expect("off-pole benchmark");
    BenchmarkCase {
        label: format!("coulomb-kappa{kappa}"),
        closed: ClosedForm::Coulomb(model),
        r_source: 1.3,
        r_window: (0.4, 4.0),
        jump_sources: [0.8, 1.3, 2.0],
    }
}

/// The full benchmark set: kappa in {1, -1, 2, -2} for both problems.
pub fn benchmark_cases() -> Vec<BenchmarkCase> {
    let mut cases = Vec::new();
    for kappa in [1, -1, 2, -2] {
        cases.push(oscillator_case(kappa));
    }
    for kappa in [1, -1, 2, -2] {
        cases.push(coulomb_case(kappa));
    }
    cases
}
