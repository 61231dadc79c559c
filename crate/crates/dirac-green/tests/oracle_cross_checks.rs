//! Cross-module checks between the closed forms and the ODE oracle that go
//! beyond the verification suites: the off-diagonal elements as exact
//! first-order operator images of the diagonals, the asymptotic overlap of
//! the integrated irregular solution with the second-kind Whittaker form,
//! and the grid-refinement convergence order of the assembled matrix.

use dirac_green::coulomb::{self, CoulombModel};
use dirac_green::kinematics::{Component, Kinematics};
use dirac_green::numeric::log_log_slope;
use dirac_green::oracle::{
    assemble_green, integrate_solution, wronskian, xi_offdiagonal_numeric, Boundary, ProblemSpec,
};
use dirac_green::oscillator::{self, OscillatorModel};
use dirac_green::specfun::{whittaker_w, WhittakerArgs};

fn osc_model() -> (OscillatorModel, ProblemSpec) {
    let eps = (1.0_f64 + 0.04 * 2.0).sqrt(); // mu midway between rungs
    let kin = Kinematics::new(0.1, eps, 1).unwrap();
    (
        OscillatorModel::new(kin, 1.0).unwrap(),
        ProblemSpec::oscillator(kin, 1.0).unwrap(),
    )
}

fn coul_model() -> (CoulombModel, ProblemSpec) {
    let lb = 0.0072973525693;
    let eps = (1.0_f64 + 2.0 * lb * lb * (-0.3)).sqrt();
    let kin = Kinematics::new(lb, eps, 1).unwrap();
    (
        CoulombModel::new(kin, -1.0).unwrap(),
        ProblemSpec::coulomb(kin, -1.0).unwrap(),
    )
}

#[test]
fn oscillator_offdiagonal_is_operator_image_of_diagonals() {
    let (model, problem) = osc_model();
    let gpp = |r: f64, rp: f64| oscillator::g_diag_osc(&model, Component::Plus, r, rp);
    let gmm = |r: f64, rp: f64| oscillator::g_diag_osc(&model, Component::Minus, r, rp);
    for &xi in &[1.0, 0.0, 0.3] {
        for &(r, rp) in &[(0.6, 1.8), (2.4, 0.9)] {
            let image = xi_offdiagonal_numeric(gpp, gmm, &problem, xi, r, rp).unwrap();
            let (_, gmp) = oscillator::g_offdiag_osc(&model, xi, r, rp).unwrap();
            assert!(
                ((image - gmp) / gmp).abs() < 1e-6,
                "xi={xi} ({r},{rp}): image {image} vs closed {gmp}"
            );
        }
    }
}

#[test]
fn coulomb_offdiagonal_is_operator_image_of_diagonals() {
    let (model, problem) = coul_model();
    let gpp = |r: f64, rp: f64| coulomb::g_diag_coul(&model, Component::Plus, r, rp);
    let gmm = |r: f64, rp: f64| coulomb::g_diag_coul(&model, Component::Minus, r, rp);
    for &xi in &[1.0, 0.0, 0.3] {
        for &(r, rp) in &[(0.6, 1.8), (2.4, 0.9)] {
            let image = xi_offdiagonal_numeric(gpp, gmm, &problem, xi, r, rp).unwrap();
            let (_, gmp) = coulomb::g_offdiag_coul(&model, xi, r, rp).unwrap();
            assert!(
                ((image - gmp) / gmp).abs() < 1e-6,
                "xi={xi} ({r},{rp}): image {image} vs closed {gmp}"
            );
        }
    }
}

#[test]
fn oscillator_irregular_tail_overlaps_whittaker_w() {
    // the integrated irregular solution must be proportional to
    // r^{-1/2} W_{mu-nu+1/2, nu}(w r^2) over an outer window
    let (model, problem) = osc_model();
    let grid = problem.default_grid(6000);
    let sol =
        integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity).unwrap();
    let mu = model.mu();
    let nu = model.nu();
    let reference = |r: f64| {
        whittaker_w(WhittakerArgs {
            a: mu - nu + 0.5,
            b: nu,
            x: r * r,
        })
        .unwrap()
            / r.sqrt()
    };
    let i0 = grid.nearest_index(4.0);
    let base_ratio = sol.phi[i0] / reference(grid.r(i0));
    for &r in &[4.2, 4.6, 5.0] {
        let i = grid.nearest_index(r);
        let ratio = sol.phi[i] / reference(grid.r(i));
        assert!(
            ((ratio - base_ratio) / base_ratio).abs() < 1e-6,
            "ratio drift at r={r}: {ratio} vs {base_ratio}"
        );
    }
}

#[test]
fn assembled_matrix_converges_at_numerov_order() {
    // halving the step (doubling the point count) must shrink the
    // assembly error like h^4
    let (_, problem) = osc_model();
    let reference = {
        let grid = problem.default_grid(32000);
        let reg = integrate_solution(
            &problem,
            Component::Plus,
            &grid,
            Boundary::RegularOrigin { exponent: None },
        )
        .unwrap();
        let irr = integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity)
            .unwrap();
        let w = wronskian(&reg, &irr, problem.kin.lambda_bar).unwrap();
        assemble_green(&reg, &irr, w.value, 0.7, 1.6).unwrap()
    };
    let ns = [500usize, 1000, 2000];
    let mut errors = Vec::new();
    for &n in &ns {
        let grid = problem.default_grid(n);
        let reg = integrate_solution(
            &problem,
            Component::Plus,
            &grid,
            Boundary::RegularOrigin { exponent: None },
        )
        .unwrap();
        let irr = integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity)
            .unwrap();
        let w = wronskian(&reg, &irr, problem.kin.lambda_bar).unwrap();
        let g = assemble_green(&reg, &irr, w.value, 0.7, 1.6).unwrap();
        errors.push(((g.gpp - reference.gpp) / reference.gpp).abs().max(1e-16));
    }
    let hs: Vec<f64> = ns.iter().map(|&n| 1.0 / n as f64).collect();
    let order = log_log_slope(&hs, &errors);
    assert!(
        (order - 4.0).abs() < 1.0,
        "fitted convergence order {order} (errors {errors:?})"
    );
}
