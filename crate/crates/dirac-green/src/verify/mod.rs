//! Named, tolerance-bearing verification procedures: radial-equation
//! residuals, derivative-jump strengths, oracle equivalence, pole spectra
//! cross-checks, nonrelativistic-limit scans and the ladder-identity suite.
//! Each check produces a machine-readable [`VerificationReport`] whose
//! configuration echo reproduces the run exactly.

mod benchmarks;
mod report;
pub mod tolerances;

pub use benchmarks::{
    benchmark_cases, coulomb_case, oscillator_case, BenchmarkCase, ClosedForm, ALPHA,
};
pub use report::{ConfigEcho, VerificationReport};

use crate::coulomb::{self, CoulombModel};
use crate::error::{Error, Result};
use crate::kinematics::{Component, Kinematics};
use crate::numeric::{halton, log_log_slope};
use crate::oracle::{
    assemble_green, integrate_solution, wronskian, Boundary, ProblemSpec, RadialGrid,
    ScalarChannelOracle,
};
use crate::oscillator::{self, OscillatorModel};
use crate::specfun::{ladder_residual, LadderIdentity};

type Evaluator<'a> = &'a dyn Fn(f64, f64) -> Result<f64>;

/// Maximum of |(-D^2 + V_eff - k^2) G(., r')| over a radial window
/// (excluding a band around the source point), normalized by the maximum
/// term magnitude max_r |V_eff - k^2| |G| over the same window. The global
/// normalization keeps the measure meaningful across classical turning
/// points, where the local term scale passes through zero while the
/// irreducible f64 evaluation jitter divided by h^2 does not. Also fits the
/// convergence order of the residual under step halving; two reports are
/// returned (residual at the contract step, and |order - 2|).
pub fn residual_ode(
    evaluator: Evaluator,
    problem: &ProblemSpec,
    component: Component,
    r_source: f64,
    window: (f64, f64),
    check_id: &str,
    config: ConfigEcho,
) -> Result<Vec<VerificationReport>> {
    let k2 = problem.k_squared();
    let n_samples = 40;
    let exclusion = 0.06 * (window.1 - window.0);
    let rs: Vec<f64> = (0..n_samples)
        .map(|i| window.0 + (window.1 - window.0) * i as f64 / (n_samples - 1) as f64)
        .filter(|&r| (r - r_source).abs() > exclusion)
        .collect();

    let residual_at = |h: f64| -> Result<f64> {
        let mut worst: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for &r in &rs {
            let g0 = evaluator(r, r_source)?;
            let gm = evaluator(r - h, r_source)?;
            let gp = evaluator(r + h, r_source)?;
            let v = problem.effective_potential(component, r);
            let second = (gm - 2.0 * g0 + gp) / (h * h);
            worst = worst.max((second - (v - k2) * g0).abs());
            scale = scale.max((v - k2).abs() * g0.abs());
        }
        Ok(worst / scale)
    };

    let measured = residual_at(tolerances::ODE_RESIDUAL_H)?;
    let mut order_resids = Vec::new();
    for &h in &tolerances::ODE_ORDER_STEPS {
        order_resids.push(residual_at(h)?);
    }
    let order = log_log_slope(&tolerances::ODE_ORDER_STEPS, &order_resids);

    let base = config
        .clone()
        .set("component", component.label())
        .set("r_source", r_source)
        .set("window", format!("{}..{}", window.0, window.1))
        .set("h", tolerances::ODE_RESIDUAL_H);
    Ok(vec![
        VerificationReport::new(
            format!("{check_id}-residual"),
            base.clone(),
            measured,
            tolerances::ODE_RESIDUAL,
            format!("relative residual at h={}", tolerances::ODE_RESIDUAL_H),
        ),
        VerificationReport::new(
            format!("{check_id}-order"),
            base,
            (order - 2.0).abs(),
            tolerances::ODE_ORDER_WINDOW,
            format!("fitted convergence order {order:.3} (expected 2)"),
        ),
    ])
}

/// Derivative jump of an element across its source point, measured as
/// Delta = dG/dr|_{r'-} - dG/dr|_{r'+} with one-sided approach from each
/// side and one Richardson extrapolation in the approach distance. The
/// comparison against the delta-source strength (C +- eps) is taken modulo
/// an orientation sign, which is echoed in the notes.
pub fn jump_condition(
    evaluator: Evaluator,
    problem: &ProblemSpec,
    component: Component,
    r_source: f64,
    check_id: &str,
    config: ConfigEcho,
) -> Result<VerificationReport> {
    let expected = problem.c() + component.sign() * problem.kin.epsilon;
    // one-sided O(h^4) derivative fit on each side of the source point;
    // the kink value G(r', r') itself is continuous and shared
    let one_sided = |h: f64| -> Result<f64> {
        let g = |t: f64| evaluator(t, r_source);
        let side = |s: f64| -> Result<f64> {
            Ok((-25.0 * g(r_source)? + 48.0 * g(r_source + s * h)?
                - 36.0 * g(r_source + 2.0 * s * h)?
                + 16.0 * g(r_source + 3.0 * s * h)?
                - 3.0 * g(r_source + 4.0 * s * h)?)
                / (12.0 * s * h))
        };
        Ok(side(-1.0)? - side(1.0)?)
    };
    let h = 0.02 * r_source;
    let j1 = one_sided(h)?;
    let j2 = one_sided(0.5 * h)?;
    let extrapolated = (16.0 * j2 - j1) / 15.0;
    if !extrapolated.is_finite() {
        return Err(Error::Convergence {
            what: "jump stencil",
        });
    }
    let (measured, orientation) =
        if (extrapolated - expected).abs() <= (-extrapolated - expected).abs() {
            ((extrapolated - expected).abs(), 1.0)
        } else {
            ((-extrapolated - expected).abs(), -1.0)
        };
    Ok(VerificationReport::new(
        check_id,
        config
            .set("component", component.label())
            .set("r_source", r_source)
            .set("expected", expected),
        measured,
        tolerances::JUMP,
        format!(
            "jump {extrapolated:.6e} vs (C{}eps) = {expected:.6e}, orientation sign {orientation}",
            if component == Component::Plus {
                "+"
            } else {
                "-"
            },
        ),
    ))
}

/// On-grid point-pair sample inside the case window.
fn sample_pairs(grid: &RadialGrid, window: (f64, f64), n_r: usize, n_rp: usize) -> Vec<(f64, f64)> {
    let pick = |n: usize| -> Vec<f64> {
        (0..n)
            .map(|i| {
                let t = (i as f64 + 0.5) / n as f64;
                let r = window.0 * (window.1 / window.0).powf(t);
                grid.r(grid.nearest_index(r))
            })
            .collect()
    };
    let rs = pick(n_r);
    let rps = pick(n_rp);
    let mut pairs = Vec::with_capacity(n_r * n_rp);
    for &r in &rs {
        for &rp in &rps {
            pairs.push((r, rp));
        }
    }
    pairs
}

fn deviation_mod_sign(closed: f64, oracle: f64, floor: f64) -> f64 {
    let d = (closed - oracle).abs().min((closed + oracle).abs());
    d / oracle.abs().max(floor)
}

struct ElementComparison {
    dev: f64,
    sign: f64,
}

fn compare_element(closed: &[f64], oracle: &[f64]) -> ElementComparison {
    let floor = 1e-3 * oracle.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let mut dev: f64 = 0.0;
    let mut dot = 0.0;
    for (&c, &o) in closed.iter().zip(oracle) {
        dev = dev.max(deviation_mod_sign(c, o, floor));
        dot += c * o;
    }
    ElementComparison {
        dev,
        sign: if dot >= 0.0 { 1.0 } else { -1.0 },
    }
}

/// Closed forms against the ODE ground truth on >= 100 on-grid point pairs.
///
/// Every element is compared against the two-component matrix assembly;
/// the diagonal elements are additionally compared against their direct
/// single-channel scalar oracles, and a diagonal element passes through
/// whichever independent ODE route it matches (which route, and the
/// per-element orientation signs, are part of the report). The off-diagonal
/// comparison is repeated at xi = 0 and xi = 1 alongside the configured
/// default.
pub fn compare_to_oracle(
    case: &BenchmarkCase,
    grid_points: usize,
    xi: f64,
    origin_exponent: Option<f64>,
) -> Result<VerificationReport> {
    let problem = case.closed.problem();
    let grid = problem.default_grid(grid_points);
    let regular = integrate_solution(
        &problem,
        Component::Plus,
        &grid,
        Boundary::RegularOrigin {
            exponent: origin_exponent,
        },
    )?;
    let irregular =
        integrate_solution(&problem, Component::Plus, &grid, Boundary::DecayingInfinity)?;
    let w = wronskian(&regular, &irregular, problem.kin.lambda_bar)?;
    let scalar_plus =
        ScalarChannelOracle::build(&problem, Component::Plus, &grid, origin_exponent)?;
    let scalar_minus = ScalarChannelOracle::build(&problem, Component::Minus, &grid, None)?;

    let pairs = sample_pairs(&grid, case.r_window, 12, 9);
    let mut closed_el: [Vec<f64>; 4] = Default::default();
    let mut oracle_el: [Vec<f64>; 4] = Default::default();
    let mut scalar_pp = Vec::new();
    let mut scalar_mm = Vec::new();
    let mut closed_pp = Vec::new();
    let mut closed_mm = Vec::new();
    let mut offdiag_xi: Vec<(f64, Vec<f64>, Vec<f64>)> =
        vec![(0.0, Vec::new(), Vec::new()), (1.0, Vec::new(), Vec::new())];

    for &(r, rp) in &pairs {
        let cm = case.closed.matrix(xi, r, rp)?;
        let om = assemble_green(&regular, &irregular, w.value, r, rp)?;
        for (slot, (c, o)) in [
            (cm.gpp, om.gpp),
            (cm.gpm, om.gpm),
            (cm.gmp, om.gmp),
            (cm.gmm, om.gmm),
        ]
        .into_iter()
        .enumerate()
        {
            if (slot == 1 || slot == 2) && r == rp {
                continue; // theta convention at coincidence is not a contract
            }
            closed_el[slot].push(c);
            oracle_el[slot].push(o);
        }
        closed_pp.push(cm.gpp);
        closed_mm.push(cm.gmm);
        scalar_pp.push(scalar_plus.eval(r, rp)?);
        scalar_mm.push(scalar_minus.eval(r, rp)?);
        if r != rp {
            for (alt_xi, cs, os) in offdiag_xi.iter_mut() {
                let (_, gmp_alt) = case.closed.offdiag(*alt_xi, r, rp)?;
                cs.push(gmp_alt);
                os.push(om.gmp);
            }
        }
    }

    let matrix_cmp: Vec<ElementComparison> = (0..4)
        .map(|i| compare_element(&closed_el[i], &oracle_el[i]))
        .collect();
    let scalar_cmp_pp = compare_element(&closed_pp, &scalar_pp);
    let scalar_cmp_mm = compare_element(&closed_mm, &scalar_mm);

    // diagonals pass through whichever independent ODE route they match
    let pp_dev = matrix_cmp[0].dev.min(scalar_cmp_pp.dev);
    let mm_dev = matrix_cmp[3].dev.min(scalar_cmp_mm.dev);
    let measured = pp_dev
        .max(matrix_cmp[1].dev)
        .max(matrix_cmp[2].dev)
        .max(mm_dev);

    let xi_notes: Vec<String> = offdiag_xi
        .iter()
        .map(|(alt_xi, cs, os)| {
            let c = compare_element(cs, os);
            format!("xi={alt_xi}: dev {:.2e} sign {:+}", c.dev, c.sign)
        })
        .collect();

    let notes = format!(
        "pairs={} signs(pp,pm,mp,mm)=({:+},{:+},{:+},{:+}) matrix devs=({:.2e},{:.2e},{:.2e},{:.2e}) \
         scalar devs(pp,mm)=({:.2e} sign {:+},{:.2e} sign {:+}) wronskian_rel_std={:.2e} \
         companion_denominator={:.3e} offdiag[{}]",
        pairs.len(),
        matrix_cmp[0].sign,
        matrix_cmp[1].sign,
        matrix_cmp[2].sign,
        matrix_cmp[3].sign,
        matrix_cmp[0].dev,
        matrix_cmp[1].dev,
        matrix_cmp[2].dev,
        matrix_cmp[3].dev,
        scalar_cmp_pp.dev,
        scalar_cmp_pp.sign,
        scalar_cmp_mm.dev,
        scalar_cmp_mm.sign,
        w.relative_std,
        regular.companion_denominator,
        xi_notes.join("; "),
    );

    let config = case_config(case)
        .set("grid_points", grid_points)
        .set("xi", xi)
        .set(
            "origin_exponent",
            origin_exponent.map_or("default".to_string(), |p| p.to_string()),
        );
    Ok(VerificationReport::new(
        format!("oracle-equivalence-{}", case.label),
        config,
        measured,
        tolerances::ORACLE_REL,
        notes,
    ))
}

fn case_config(case: &BenchmarkCase) -> ConfigEcho {
    let kin = case.closed.kin();
    let base = ConfigEcho::new()
        .set("lambda_bar", kin.lambda_bar)
        .set("epsilon", kin.epsilon)
        .set("kappa", kin.kappa);
    match &case.closed {
        ClosedForm::Oscillator(m) => base.set("problem", "oscillator").set("omega", m.omega),
        ClosedForm::Coulomb(m) => base.set("problem", "coulomb").set("Z", m.z),
    }
}

/// Boundary-condition sweep for the kappa < 0 question: the closed
/// diagonals are compared against single-channel scalar oracles built with
/// each of the two indicial exponents; the report states which origin
/// behavior (if either) the closed forms encode. Informational.
pub fn origin_exponent_adjudication(
    case: &BenchmarkCase,
    grid_points: usize,
) -> Result<Vec<VerificationReport>> {
    let problem = case.closed.problem();
    // the origin behavior is a small-r property: adjudicate inside the
    // power-law zone, before near-resonant index admixtures (present when
    // the exponent separation is close to an integer) blur the two roots
    let window = match problem.kind {
        crate::oracle::ProblemKind::Coulomb => (0.04, 0.2),
        _ => case.r_window,
    };
    let mut out = Vec::new();
    for component in [Component::Plus, Component::Minus] {
        let (larger, smaller) = crate::oracle::indicial_exponents(&problem, component);

        // direct measurement: the origin log-slope of the closed element
        // itself, compared against the two indicial roots. Nearly-degenerate
        // roots hide the leading behavior under a near-resonant admixture
        // until far smaller radii.
        let rp_ref = case.r_source;
        let (r1, r2) = if (larger - smaller) < 1.2 {
            (1.5e-6, 3e-6)
        } else {
            (1.5e-3, 3e-3)
        };
        let g1 = case.closed.diag(component, r1, rp_ref)?;
        let g2 = case.closed.diag(component, r2, rp_ref)?;
        let slope = (g2.abs().ln() - g1.abs().ln()) / (r2.ln() - r1.ln());
        let (encoded, other) = if (slope - larger).abs() < (slope - smaller).abs() {
            (larger, smaller)
        } else {
            (smaller, larger)
        };

        // corroboration: Green's functions rebuilt from each origin
        // exponent by direct integration (an outward sweep of a deeply
        // subdominant root saturates in f64 and is reported as such)
        let needs_deep = (larger - smaller) < 1.2;
        let grid = if needs_deep {
            RadialGrid::log_uniform(1e-7, problem.default_r_max(), grid_points.max(12000))
        } else {
            problem.default_grid(grid_points)
        };
        let pairs = sample_pairs(&grid, window, 8, 5);
        let mut descriptions = Vec::new();
        for p in [larger, smaller] {
            match ScalarChannelOracle::build(&problem, component, &grid, Some(p)) {
                Ok(oracle) => {
                    let mut closed = Vec::new();
                    let mut reference = Vec::new();
                    for &(r, rp) in &pairs {
                        closed.push(case.closed.diag(component, r, rp)?);
                        reference.push(oracle.eval(r, rp)?);
                    }
                    let c = compare_element(&closed, &reference);
                    descriptions.push(format!("p={p:.6}: dev {:.2e} sign {:+}", c.dev, c.sign));
                }
                Err(e) => descriptions.push(format!("p={p:.6}: unavailable ({e})")),
            }
        }
        out.push(VerificationReport::informational(
            format!("adjudication-origin-{}-{}", case.label, component.label()),
            case_config(case).set("component", component.label()),
            (slope - encoded).abs(),
            format!(
                "closed-form origin log-slope {slope:.6} encodes p = {encoded:.6} (other root {other:.6}); \
                 oracle sweep: {}",
                descriptions.join("; ")
            ),
        ));
    }
    Ok(out)
}

/// Probes the extra G^{--} pole candidate of the kappa > 0 Coulomb element
/// at mu = gamma: the residue estimate (mu - gamma) G^{--} is tracked as
/// the candidate is approached. A vanishing trend (the (C - eps) weight
/// zeroes out exactly there) means no spurious bound state. Informational.
pub fn gmm_residue_probe(lambda_bar: f64, kappa: i32, z: f64) -> Result<VerificationReport> {
    let kappa_f = kappa as f64;
    let gamma = (kappa_f * kappa_f - lambda_bar * lambda_bar * z * z).sqrt();
    let lz = lambda_bar * z;
    let eps_of_mu = |mu: f64| mu / (mu * mu + lz * lz).sqrt();
    let (r, rp) = (0.7, 1.6);
    let mut estimates = Vec::new();
    for &dmu in &[1e-2, 1e-3, 1e-4] {
        let mu = gamma - dmu;
        let kin = Kinematics::new(lambda_bar, eps_of_mu(mu), kappa)?;
        let model = CoulombModel::new(kin, z)?;
        let g = coulomb::g_diag_coul(&model, Component::Minus, r, rp)?;
        estimates.push((dmu, dmu * g, g));
    }
    let trend = estimates.last().unwrap().1.abs() / estimates.first().unwrap().1.abs().max(1e-300);
    let notes = format!(
        "residue estimates (dmu, dmu*G, G): {}; trend {:.3e} (a true simple pole would hold ~1)",
        estimates
            .iter()
            .map(|(d, res, g)| format!("({d:.0e}, {res:.3e}, {g:.3e})"))
            .collect::<Vec<_>>()
            .join(", "),
        trend
    );
    Ok(VerificationReport::informational(
        format!("adjudication-gmm-pole-candidate-coulomb-kappa{kappa}"),
        ConfigEcho::new()
            .set("lambda_bar", lambda_bar)
            .set("kappa", kappa)
            .set("Z", z)
            .set("mu_candidate", gamma),
        trend,
        notes,
    ))
}

/// Which nonrelativistic family a limit scan walks toward.
#[derive(Debug, Clone, Copy)]
pub enum LimitFamily {
    Oscillator { omega: f64 },
    Coulomb { z: f64 },
}

/// Nonrelativistic limit scan: over a decreasing Compton-scale sequence
/// with eps = 1 + lb^2 E, fits the power-law exponents of
/// ||G^{++} - g_l||, ||G^{--}|| and ||G^{+-}|| against the expected triple
/// (2, 2, 1). For the Coulomb family a second report tracks
/// ||G^{--}/lb^2 - c g_{l-1}|| with the derived limit coefficient
/// c = -(E + Z^2/2 kappa^2)/2.
pub fn nonrel_limit_scan(
    family: LimitFamily,
    kappa: i32,
    e_fixed: f64,
    lambdas: &[f64],
    xi: f64,
) -> Result<Vec<VerificationReport>> {
    let rs = [0.5, 0.8, 1.2, 1.8];
    let rps = [0.65, 1.0, 1.5];
    let kappa_f = kappa as f64;
    let l_eff = if kappa > 0 { kappa_f } else { -kappa_f - 1.0 };

    let mut a_norms = Vec::new();
    let mut b_norms = Vec::new();
    let mut c_norms = Vec::new();
    let mut kernel_dist = Vec::new();

    for &lb in lambdas {
        let eps = 1.0 + lb * lb * e_fixed;
        let kin = Kinematics::new(lb, eps, kappa)?;
        let (mut a_n, mut b_n, mut c_n, mut d_num, mut d_den) =
            (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
        for &r in &rs {
            for &rp in &rps {
                let (gpp, gmm, gpm) = match family {
                    LimitFamily::Oscillator { omega } => {
                        let m = OscillatorModel::new(kin, omega)?;
                        let gpp = oscillator::g_diag_osc(&m, Component::Plus, r, rp)?;
                        let gmm = oscillator::g_diag_osc(&m, Component::Minus, r, rp)?;
                        let (gpm, _) = oscillator::g_offdiag_osc(&m, xi, r, rp)?;
                        (gpp, gmm, gpm)
                    }
                    LimitFamily::Coulomb { z } => {
                        let m = CoulombModel::new(kin, z)?;
                        let gpp = coulomb::g_diag_coul(&m, Component::Plus, r, rp)?;
                        let gmm = coulomb::g_diag_coul(&m, Component::Minus, r, rp)?;
                        let (gpm, _) = coulomb::g_offdiag_coul(&m, xi, r, rp)?;
                        (gpp, gmm, gpm)
                    }
                };
                let g_ref = match family {
                    LimitFamily::Oscillator { omega } => {
                        let e_ref = e_fixed - omega * omega * (kappa_f - 0.5);
                        oscillator::g_nonrel_oscillator(l_eff, omega, e_ref, r, rp)?
                    }
                    LimitFamily::Coulomb { z } => {
                        coulomb::g_nonrel_coulomb(l_eff, z, e_fixed, r, rp)?
                    }
                };
                a_n = a_n.max((gpp - g_ref).abs());
                b_n = b_n.max(gmm.abs());
                c_n = c_n.max(gpm.abs());
                if let LimitFamily::Coulomb { z } = family {
                    if kappa > 0 {
                        let c_inf = -(e_fixed + z * z / (2.0 * kappa_f * kappa_f)) / 2.0;
                        let kernel =
                            c_inf * coulomb::g_nonrel_coulomb(l_eff - 1.0, z, e_fixed, r, rp)?;
                        d_num = d_num.max((gmm / (lb * lb) - kernel).abs());
                        d_den = d_den.max(kernel.abs());
                    }
                }
            }
        }
        a_norms.push(a_n);
        b_norms.push(b_n);
        c_norms.push(c_n);
        if d_den > 0.0 {
            kernel_dist.push(d_num / d_den);
        }
    }

    let exp_a = log_log_slope(lambdas, &a_norms);
    let exp_b = log_log_slope(lambdas, &b_norms);
    let exp_c = log_log_slope(lambdas, &c_norms);
    let measured = (exp_a - 2.0)
        .abs()
        .max((exp_b - 2.0).abs())
        .max((exp_c - 1.0).abs());

    let (family_label, strength) = match family {
        LimitFamily::Oscillator { omega } => ("oscillator", omega),
        LimitFamily::Coulomb { z } => ("coulomb", z),
    };
    let config = ConfigEcho::new()
        .set("family", family_label)
        .set("strength", strength)
        .set("kappa", kappa)
        .set("E", e_fixed)
        .set("xi", xi)
        .set(
            "lambdas",
            lambdas
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );

    let mut reports = vec![VerificationReport::new(
        format!("limit-exponents-{family_label}-kappa{kappa}"),
        config.clone(),
        measured,
        tolerances::LIMIT_EXPONENT_WINDOW,
        format!(
            "fitted exponents (Gpp-gl, Gmm, Gpm) = ({exp_a:.3}, {exp_b:.3}, {exp_c:.3}), expected (2, 2, 1)"
        ),
    )];
    if !kernel_dist.is_empty() {
        reports.push(VerificationReport::new(
            format!("limit-gmm-kernel-{family_label}-kappa{kappa}"),
            config,
            *kernel_dist.last().unwrap(),
            tolerances::LIMIT_GMM_KERNEL,
            format!(
                "||Gmm/lb^2 - c g_(l-1)|| / ||c g_(l-1)|| along the scan: {}",
                kernel_dist
                    .iter()
                    .map(|d| format!("{d:.2e}"))
                    .collect::<Vec<_>>()
                    .join(" -> ")
            ),
        ));
    }
    Ok(reports)
}

/// Runs all eight ladder relations over seeded quasi-random samples in the
/// box a in [-3, 3], b in [0.3, 3], x in [0.1, 10]; samples hitting a
/// relation's own singular denominators are skipped and counted.
pub fn identity_suite(sample_count: usize, seed: u64) -> Vec<VerificationReport> {
    let mut reports = Vec::with_capacity(8);
    for identity in LadderIdentity::ALL {
        let mut worst: f64 = 0.0;
        let mut evaluated = 0usize;
        let mut skipped = 0usize;
        for i in 0..sample_count {
            let idx = seed.wrapping_mul(1009).wrapping_add(31 + i as u64);
            let a = -3.0 + 6.0 * halton(idx, 2);
            let b = 0.3 + 2.7 * halton(idx, 3);
            let x = 0.1 + 9.9 * halton(idx, 5);
            if identity.min_denominator(a, b) < 1e-3 {
                skipped += 1;
                continue;
            }
            match ladder_residual(identity, a, b, x) {
                Ok(res) => {
                    worst = worst.max(res);
                    evaluated += 1;
                }
                Err(_) => skipped += 1,
            }
        }
        reports.push(VerificationReport::new(
            format!("identity-{}", identity.label()),
            ConfigEcho::new()
                .set("samples", sample_count)
                .set("seed", seed)
                .set("box", "a in [-3,3], b in [0.3,3], x in [0.1,10]"),
            worst,
            tolerances::IDENTITY_RESIDUAL,
            format!("evaluated {evaluated}, skipped {skipped} (singular denominators)"),
        ));
    }
    reports
}

/// An engineered formula corruption for the negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corruption {
    /// First Whittaker index shifted by +0.25.
    WrongIndex,
    /// Overall prefactor scaled by 1.02.
    WrongPrefactor,
}

impl Corruption {
    pub fn knobs(self) -> (f64, f64) {
        match self {
            Corruption::WrongIndex => (0.25, 1.0),
            Corruption::WrongPrefactor => (0.0, 1.02),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Corruption::WrongIndex => "wrong-index",
            Corruption::WrongPrefactor => "wrong-prefactor",
        }
    }
}

/// Proves the checks have teeth: each corruption must be caught by the
/// suite sensitive to it (a wrong index breaks the radial equation; a
/// wrong prefactor is invisible to the homogeneous equation but breaks the
/// jump strength). A report passes iff the corrupted evaluator FAILS its
/// check; the corrupted measurement is echoed in the notes.
pub fn negative_controls() -> Result<Vec<VerificationReport>> {
    let case = oscillator_case(1);
    let problem = case.closed.problem();
    let mut out = Vec::new();

    for corruption in [Corruption::WrongIndex, Corruption::WrongPrefactor] {
        let (shift, scale) = corruption.knobs();
        let closed = case.closed;
        let eval = move |r: f64, rp: f64| closed.diag_detuned(Component::Plus, shift, scale, r, rp);
        let (detected, corrupted_measure) = match corruption {
            Corruption::WrongIndex => {
                let reports = residual_ode(
                    &eval,
                    &problem,
                    Component::Plus,
                    case.r_source,
                    case.r_window,
                    "corrupted",
                    case_config(&case),
                )?;
                (!reports[0].pass, reports[0].measured)
            }
            Corruption::WrongPrefactor => {
                let report = jump_condition(
                    &eval,
                    &problem,
                    Component::Plus,
                    case.jump_sources[1],
                    "corrupted",
                    case_config(&case),
                )?;
                (!report.pass, report.measured)
            }
        };
        out.push(VerificationReport::new(
            format!("negative-control-{}", corruption.label()),
            case_config(&case).set("corruption", corruption.label()),
            if detected { 0.0 } else { 1.0 },
            0.5,
            format!(
                "corrupted evaluator measured {corrupted_measure:.3e} against the clean tolerance; detected = {detected}"
            ),
        ));
    }
    Ok(out)
}

/// The named check suites exposed to the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ode,
    Jump,
    Oracle,
    Limits,
    Identities,
    All,
}

/// Effective configuration of a suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub grid_points: usize,
    pub identity_samples: usize,
    pub seed: u64,
    pub xi: f64,
    pub corruption: Option<Corruption>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid_points: tolerances::ORACLE_GRID_POINTS,
            identity_samples: tolerances::IDENTITY_SAMPLES,
            seed: 42,
            xi: 1.0,
            corruption: None,
        }
    }
}

/// Runs the named suites over the benchmark configuration set and merges
/// the reports deterministically by check id. An injected corruption (test
/// hook) detunes every closed-form diagonal evaluator.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    let (shift, scale) = config.corruption.map_or((0.0, 1.0), Corruption::knobs);

    if matches!(suite, Suite::Ode | Suite::All) {
        for case in benchmark_cases() {
            for component in [Component::Plus, Component::Minus] {
                let closed = case.closed;
                let eval =
                    move |r: f64, rp: f64| closed.diag_detuned(component, shift, scale, r, rp);
                let problem = case.closed.problem();
                reports.extend(residual_ode(
                    &eval,
                    &problem,
                    component,
                    case.r_source,
                    case.r_window,
                    &format!("ode-{}-{}", case.label, component.label()),
                    case_config(&case),
                )?);
            }
        }
    }

    if matches!(suite, Suite::Jump | Suite::All) {
        for case in benchmark_cases() {
            for component in [Component::Plus, Component::Minus] {
                for (i, &r_source) in case.jump_sources.iter().enumerate() {
                    let closed = case.closed;
                    let eval =
                        move |r: f64, rp: f64| closed.diag_detuned(component, shift, scale, r, rp);
                    let problem = case.closed.problem();
                    reports.push(jump_condition(
                        &eval,
                        &problem,
                        component,
                        r_source,
                        &format!("jump-{}-{}-r{}", case.label, component.label(), i),
                        case_config(&case),
                    )?);
                }
            }
        }
    }

    if matches!(suite, Suite::Oracle | Suite::All) {
        for case in benchmark_cases() {
            if case.closed.kin().kappa > 0 {
                if let Some(c) = config.corruption {
                    // corruption hook: the detuned plus-diagonal against the
                    // scalar channel oracle must be flagged
                    let problem = case.closed.problem();
                    let grid = problem.default_grid(config.grid_points);
                    let scalar =
                        ScalarChannelOracle::build(&problem, Component::Plus, &grid, None)?;
                    let pairs = sample_pairs(&grid, case.r_window, 8, 5);
                    let mut closed = Vec::new();
                    let mut oracle = Vec::new();
                    for &(r, rp) in &pairs {
                        closed.push(case.closed.diag_detuned(
                            Component::Plus,
                            shift,
                            scale,
                            r,
                            rp,
                        )?);
                        oracle.push(scalar.eval(r, rp)?);
                    }
                    let cmp = compare_element(&closed, &oracle);
                    reports.push(VerificationReport::new(
                        format!("oracle-equivalence-{}", case.label),
                        case_config(&case).set("corruption", c.label()),
                        cmp.dev,
                        tolerances::ORACLE_REL,
                        "corrupted plus-diagonal against the scalar channel oracle",
                    ));
                } else {
                    reports.push(compare_to_oracle(
                        &case,
                        config.grid_points,
                        config.xi,
                        None,
                    )?);
                }
            } else {
                reports.extend(origin_exponent_adjudication(&case, config.grid_points)?);
            }
        }
        reports.push(gmm_residue_probe(ALPHA, 1, -1.0)?);
        reports.push(gmm_residue_probe(ALPHA, 2, -1.0)?);
    }

    if matches!(suite, Suite::Limits | Suite::All) {
        reports.extend(nonrel_limit_scan(
            LimitFamily::Oscillator { omega: 1.0 },
            1,
            -0.3,
            &[1e-1, 3e-2, 1e-2, 3e-3, 1e-3],
            config.xi,
        )?);
        reports.extend(nonrel_limit_scan(
            LimitFamily::Coulomb { z: -1.0 },
            1,
            -0.3,
            &[1e-1, 3e-2, 1e-2, 3e-3, 1e-3],
            config.xi,
        )?);
    }

    if matches!(suite, Suite::Identities | Suite::All) {
        reports.extend(identity_suite(config.identity_samples, config.seed));
    }

    if matches!(suite, Suite::All) {
        reports.extend(negative_controls()?);
    }

    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(reports)
}
