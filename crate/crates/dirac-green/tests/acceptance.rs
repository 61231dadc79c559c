//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria as well.

mod common;

use std::time::Instant;

use dirac_green::coulomb::{self, coulomb_bound_energies};
use dirac_green::kinematics::Component;
use dirac_green::oracle::{assemble_green, integrate_solution, wronskian, Boundary};
use dirac_green::oscillator::{self, oscillator_bound_energies};
use dirac_green::verify::{
    self, benchmark_cases, coulomb_case, identity_suite, negative_controls, nonrel_limit_scan,
    oscillator_case, tolerances, LimitFamily, Suite, SuiteConfig,
};

const ALPHA: f64 = verify::ALPHA;

fn criterion_line(number: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {number:>2} {name:<28} {}  ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} {name} failed: {detail}");
}

#[test]
fn criterion_1_identity_suite() {
    let start = Instant::now();
    let reports = identity_suite(200, 42);
    let elapsed = start.elapsed().as_secs_f64();
    let worst = reports.iter().map(|r| r.measured).fold(0.0_f64, f64::max);
    let all_pass = reports.iter().all(|r| r.pass) && reports.len() == 8;
    criterion_line(
        1,
        "appendix-identities",
        all_pass && elapsed < 5.0,
        &format!("8 relations, 200 seeded samples, worst residual {worst:.2e}, {elapsed:.2} s"),
    );
}

#[test]
fn criterion_2_ode_residuals() {
    let reports = verify::run_suite(Suite::Ode, &SuiteConfig::default()).unwrap();
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.check_id.as_str())
        .collect();
    let worst_resid = reports
        .iter()
        .filter(|r| r.check_id.ends_with("residual"))
        .map(|r| r.measured)
        .fold(0.0_f64, f64::max);
    criterion_line(
        2,
        "ode-residuals",
        failed.is_empty() && reports.len() == 32,
        &format!(
            "16 element/config residuals at h=1e-4 (worst {worst_resid:.2e}) + order fits 2 +- 0.3; failures: {failed:?}"
        ),
    );
}

#[test]
fn criterion_3_jump_conditions() {
    let reports = verify::run_suite(Suite::Jump, &SuiteConfig::default()).unwrap();
    let worst = reports.iter().map(|r| r.measured).fold(0.0_f64, f64::max);
    let all_pass = reports.iter().all(|r| r.pass) && reports.len() == 48;
    criterion_line(
        3,
        "jump-conditions",
        all_pass,
        &format!(
            "48 jumps (both problems, kappa +-1 +-2, 3 interior sources each), worst |dJ - (C+-eps)| = {worst:.2e}"
        ),
    );
}

#[test]
fn criterion_4_oracle_equivalence() {
    let mut worst = 0.0_f64;
    let mut pass = true;
    for kappa in [1, 2] {
        for case in [oscillator_case(kappa), coulomb_case(kappa)] {
            let report = verify::compare_to_oracle(&case, 6000, 1.0, None).unwrap();
            worst = worst.max(report.measured);
            pass &= report.pass;
        }
    }
    // kappa < 0: adjudication reports are produced (informational)
    let mut adjudications = 0;
    for kappa in [-1, -2] {
        for case in [oscillator_case(kappa), coulomb_case(kappa)] {
            adjudications += verify::origin_exponent_adjudication(&case, 6000)
                .unwrap()
                .len();
        }
    }
    criterion_line(
        4,
        "oracle-equivalence",
        pass && adjudications == 8,
        &format!(
            "kappa +1,+2 both problems on 108 on-grid pairs: worst deviation {worst:.2e} (mod reported sign); {adjudications} kappa<0 origin-exponent adjudication reports produced"
        ),
    );
}

#[test]
fn criterion_5_spectra() {
    // Coulomb kappa = 1: root-found poles against the algebraic ladder
    let gamma = (1.0 - ALPHA * ALPHA).sqrt();
    let spec = coulomb_bound_energies(ALPHA, 1, -1.0, 5).unwrap();
    let mut worst: f64 = 0.0;
    for be in &spec.entries {
        let n_big = gamma + 1.0 + be.n as f64;
        let exact = n_big / (n_big * n_big + ALPHA * ALPHA).sqrt();
        worst = worst.max(((be.epsilon - exact) / exact).abs());
    }
    let coulomb_ok = worst < tolerances::SPECTRUM_REL && spec.entries.len() == 6;

    // Bohr ladder as the coupling vanishes, O(lb^4)
    let mut bohr_ok = true;
    for &lb in &[1e-2_f64, 1e-3] {
        let s = coulomb_bound_energies(lb, 1, -1.0, 2).unwrap();
        for be in &s.entries {
            let n0 = be.n as f64 + 2.0; // n_r = n + 1, kappa = 1
            let bohr = 1.0 - lb * lb / (2.0 * n0 * n0);
            bohr_ok &= (be.epsilon - bohr).abs() < 5.0 * lb.powi(4);
        }
    }

    // oscillator kappa = 1 ladder and the exact kappa = -1 ground state
    let osc = oscillator_bound_energies(0.1, 1, 1.0, 5).unwrap();
    let mut osc_worst: f64 = 0.0;
    for be in &osc {
        let exact = (1.0 + 0.04 * (be.n as f64 + 1.5)).sqrt();
        osc_worst = osc_worst.max(((be.epsilon - exact) / exact).abs());
    }
    let osc_neg = oscillator_bound_energies(0.1, -1, 1.0, 1).unwrap();
    let ground_exact = osc_neg[0].epsilon == 1.0;

    criterion_line(
        5,
        "pole-spectra",
        coulomb_ok && bohr_ok && osc_worst < tolerances::SPECTRUM_REL && ground_exact,
        &format!(
            "coulomb fine-structure dev {worst:.2e}, Bohr expansion O(lb^4) {bohr_ok}, oscillator ladder dev {osc_worst:.2e}, kappa=-1 n=0 epsilon == 1 exactly: {ground_exact}"
        ),
    );
}

#[test]
fn criterion_6_nonrelativistic_limits() {
    let lambdas = [1e-1, 3e-2, 1e-2, 3e-3, 1e-3];
    let osc = nonrel_limit_scan(
        LimitFamily::Oscillator { omega: 1.0 },
        1,
        -0.3,
        &lambdas,
        1.0,
    )
    .unwrap();
    let cou = nonrel_limit_scan(LimitFamily::Coulomb { z: -1.0 }, 1, -0.3, &lambdas, 1.0).unwrap();
    let all: Vec<_> = osc.iter().chain(cou.iter()).collect();
    let pass = all.iter().all(|r| r.pass);
    let detail: Vec<String> = all
        .iter()
        .map(|r| format!("{}: {:.2e}", r.check_id, r.measured))
        .collect();
    criterion_line(6, "nonrel-limits", pass, &detail.join("; "));
}

#[test]
fn criterion_7_spectral_sums() {
    const TERMS: usize = 2_000_000;
    // separated pairs: the expansion converges like 1/sqrt(N) at the
    // coincidence kink, so the r = r' diagonal is not sampled here
    let pairs = [
        (0.5, 0.9),
        (0.7, 1.3),
        (1.0, 1.6),
        (1.1, 0.6),
        (1.5, 2.0),
        (0.4, 2.2),
        (2.0, 2.4),
        (0.8, 1.45),
        (1.8, 1.2),
        (2.5, 0.5),
    ];
    let mut worst_osc = 0.0_f64;
    for &(r, rp) in &pairs {
        let exact = oscillator::g_nonrel_oscillator(0.0, 1.0, -0.5, r, rp).unwrap();
        let sum = common::oscillator_spectral_sum(0.0, 1.0, -0.5, r, rp, TERMS);
        worst_osc = worst_osc.max(((sum - exact) / exact).abs());
    }
    let mut worst_cou = 0.0_f64;
    for &(r, rp) in &pairs {
        let exact = coulomb::g_nonrel_coulomb(0.0, -1.0, -0.6, r, rp).unwrap();
        let sum = common::coulomb_sturmian_sum(0.0, -1.0, -0.6, r, rp, TERMS);
        worst_cou = worst_cou.max(((sum - exact) / exact).abs());
    }
    criterion_line(
        7,
        "spectral-sum-kernels",
        worst_osc < tolerances::SPECTRAL_SUM_REL && worst_cou < tolerances::SPECTRAL_SUM_REL,
        &format!(
            "10 pairs each, {TERMS} terms: oscillator dev {worst_osc:.2e}, coulomb dev {worst_cou:.2e}"
        ),
    );
}

#[test]
fn criterion_8_exchange_symmetry() {
    // closed forms: bitwise transpose law
    let mut bitwise = true;
    for case in benchmark_cases() {
        let g = case.closed.matrix(1.0, 0.62, 1.87).unwrap();
        let h = case.closed.matrix(1.0, 1.87, 0.62).unwrap();
        bitwise &= g.gpp.to_bits() == h.gpp.to_bits()
            && g.gmm.to_bits() == h.gmm.to_bits()
            && g.gpm.to_bits() == h.gmp.to_bits()
            && g.gmp.to_bits() == h.gpm.to_bits();
    }

    // oracle assembly: transpose law to 1e-10
    let case = oscillator_case(1);
    let problem = case.closed.problem();
    let grid = problem.default_grid(4000);
    let reg = integrate_solution(
        &problem,
        Component::Plus,
        &grid,
        Boundary::RegularOrigin { exponent: None },
    )
    .unwrap();
    let irr =
        integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity).unwrap();
    let w = wronskian(&reg, &irr, problem.kin.lambda_bar).unwrap();
    let mut oracle_dev = 0.0_f64;
    for &(r, rp) in &[(0.5, 1.4), (0.9, 2.1), (1.8, 0.7)] {
        let a = assemble_green(&reg, &irr, w.value, r, rp).unwrap();
        let b = assemble_green(&reg, &irr, w.value, rp, r).unwrap();
        for (x, y) in [
            (a.gpp, b.gpp),
            (a.gmm, b.gmm),
            (a.gpm, b.gmp),
            (a.gmp, b.gpm),
        ] {
            oracle_dev = oracle_dev.max(((x - y) / y).abs());
        }
    }
    criterion_line(
        8,
        "exchange-symmetry",
        bitwise && oracle_dev < tolerances::ORACLE_EXCHANGE,
        &format!("closed forms bit-identical: {bitwise}; oracle transpose dev {oracle_dev:.2e}"),
    );
}

#[test]
fn criterion_9_negative_controls() {
    let reports = negative_controls().unwrap();
    let all_detected = reports.iter().all(|r| r.pass) && reports.len() == 2;
    let detail: Vec<String> = reports.iter().map(|r| r.notes.clone()).collect();
    criterion_line(9, "negative-controls", all_detected, &detail.join(" | "));
}
