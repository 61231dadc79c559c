//! Independent numerical construction of the Green's matrix: direct Numerov
//! integration of the second-order radial equations for the regular and
//! irregular solutions, companion components through the first-order
//! intertwining relation, Wronskian normalization and theta-split assembly.
//! This is the ground truth the closed forms are validated against.
//!
//! The integration variable is x = ln r on a log-uniform grid; the
//! substitution y(x) = r^{-1/2} phi(r) removes the first-derivative term so
//! the Numerov stencil applies with Q(x) = r^2 (V_eff - k^2) + 1/4.

mod numerov;

use crate::error::{Error, Result};
use crate::kinematics::{Component, GreenMatrix, Kinematics};
use crate::numeric::lagrange_cubic;
use crate::specfun::SignedLogValue;
use numerov::{numerov_inward, numerov_outward};

/// Which radial problem the oracle integrates. `Free` (U identically zero)
/// exists as a sanity hook for the integrator itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Oscillator,
    Coulomb,
    Free,
}

/// Problem definition on the oracle side: kinematics plus the coupling
/// strength (omega for the oscillator, Z for Coulomb, unused for Free).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub kin: Kinematics,
    pub strength: f64,
}

/// Exact coefficient form A/r^2 + B/r + C0 + D r + E r^2 of the effective
/// potentials; both problems fit it exactly, which the power-series
/// boundary starts rely on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialCoeffs {
    pub inv_sq: f64,
    pub inv: f64,
    pub constant: f64,
    pub linear: f64,
    pub quadratic: f64,
}

impl ProblemSpec {
    pub fn oscillator(kin: Kinematics, omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::Domain {
                what: "omega must be > 0",
                value: omega,
            });
        }
        Ok(Self {
            kind: ProblemKind::Oscillator,
            kin,
            strength: omega,
        })
    }

    pub fn coulomb(kin: Kinematics, z: f64) -> Result<Self> {
        let kappa = kin.kappa as f64;
        if kappa * kappa <= kin.lambda_bar * kin.lambda_bar * z * z {
            return Err(Error::Domain {
                what: "kappa^2 must exceed (lambda_bar Z)^2",
                value: z,
            });
        }
        Ok(Self {
            kind: ProblemKind::Coulomb,
            kin,
            strength: z,
        })
    }

    pub fn free(kin: Kinematics) -> Self {
        Self {
            kind: ProblemKind::Free,
            kin,
            strength: 0.0,
        }
    }

    /// S of the construction: 0 for the oscillator, lb Z / kappa for Coulomb.
    pub fn s(&self) -> f64 {
        match self.kind {
            ProblemKind::Oscillator | ProblemKind::Free => 0.0,
            ProblemKind::Coulomb => self.kin.lambda_bar * self.strength / self.kin.kappa as f64,
        }
    }

    /// C of the construction: 1 for the oscillator, gamma / kappa for Coulomb.
    pub fn c(&self) -> f64 {
        match self.kind {
            ProblemKind::Oscillator | ProblemKind::Free => 1.0,
            ProblemKind::Coulomb => {
                let kappa = self.kin.kappa as f64;
                (kappa * kappa
                    - self.kin.lambda_bar * self.kin.lambda_bar * self.strength * self.strength)
                    .sqrt()
                    / kappa
            }
        }
    }

    /// Odd potential W(r): omega^2 r for the oscillator, zero otherwise.
    pub fn w_potential(&self, r: f64) -> f64 {
        match self.kind {
            ProblemKind::Oscillator => self.strength * self.strength * r,
            _ => 0.0,
        }
    }

    /// U(r) = W(r) + kappa / r (identically zero for the Free hook).
    pub fn u_potential(&self, r: f64) -> f64 {
        match self.kind {
            ProblemKind::Free => 0.0,
            _ => self.w_potential(r) + self.kin.kappa as f64 / r,
        }
    }

    /// Analytic dU/dr.
    pub fn du_potential(&self, r: f64) -> f64 {
        match self.kind {
            ProblemKind::Free => 0.0,
            ProblemKind::Oscillator => {
                self.strength * self.strength - self.kin.kappa as f64 / (r * r)
            }
            ProblemKind::Coulomb => -(self.kin.kappa as f64) / (r * r),
        }
    }

    /// Squared wavenumber (eps^2 - 1)/lb^2, reported separately from the
    /// effective potential.
    pub fn k_squared(&self) -> f64 {
        self.kin.k_squared()
    }

    /// Effective potential of the Schroedinger-like channel equation:
    ///
    ///   V_eff = C^2 U^2 -+ C dU/dr + (2 S eps / lb) U
    ///
    /// with the component sign only on the derivative term. The U-linear
    /// term keeps one sign for both components: that is the form the
    /// closed-form minus-channel kernels satisfy, and the form under which
    /// both channels of an attractive coupling stay attractive.
    pub fn effective_potential(&self, component: Component, r: f64) -> f64 {
        let c = self.c();
        let s = self.s();
        let u = self.u_potential(r);
        let du = self.du_potential(r);
        c * c * u * u - component.sign() * c * du
            + 2.0 * s * self.kin.epsilon / self.kin.lambda_bar * u
    }

    /// The same potential in exact coefficient form.
    pub fn coeffs(&self, component: Component) -> PotentialCoeffs {
        let sign = component.sign();
        let kappa = self.kin.kappa as f64;
        match self.kind {
            ProblemKind::Free => PotentialCoeffs {
                inv_sq: 0.0,
                inv: 0.0,
                constant: 0.0,
                linear: 0.0,
                quadratic: 0.0,
            },
            ProblemKind::Oscillator => {
                let w2 = self.strength * self.strength;
                PotentialCoeffs {
                    inv_sq: kappa * (kappa + sign),
                    inv: 0.0,
                    constant: w2 * (2.0 * kappa - sign),
                    linear: 0.0,
                    quadratic: w2 * w2,
                }
            }
            ProblemKind::Coulomb => {
                let gamma = self.c() * kappa;
                PotentialCoeffs {
                    inv_sq: gamma * (gamma + sign),
                    inv: 2.0 * self.strength * self.kin.epsilon,
                    constant: 0.0,
                    linear: 0.0,
                    quadratic: 0.0,
                }
            }
        }
    }

    /// Default outer radius: several decay lengths of the irregular solution.
    pub fn default_r_max(&self) -> f64 {
        match self.kind {
            ProblemKind::Oscillator => 6.0 / self.strength.sqrt(),
            ProblemKind::Coulomb | ProblemKind::Free => {
                let eps = self.kin.epsilon;
                12.0 * self.kin.lambda_bar / (1.0 - eps * eps).sqrt()
            }
        }
    }

    /// Log-uniform default grid with `n` points on [1e-3, default_r_max].
    pub fn default_grid(&self, n: usize) -> RadialGrid {
        RadialGrid::log_uniform(1e-3, self.default_r_max(), n)
    }
}

/// Strictly increasing, log-uniform radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    points: Vec<f64>,
    x0: f64,
    h: f64,
}

impl RadialGrid {
    pub fn log_uniform(r_min: f64, r_max: f64, n: usize) -> Self {
        assert!(r_min > 0.0 && r_max > r_min && n >= 8);
        let x0 = r_min.ln();
        let h = (r_max.ln() - x0) / (n - 1) as f64;
        let points = (0..n).map(|i| (x0 + i as f64 * h).exp()).collect();
        Self { points, x0, h }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn r(&self, i: usize) -> f64 {
        self.points[i]
    }

    pub fn r_min(&self) -> f64 {
        self.points[0]
    }

    pub fn r_max(&self) -> f64 {
        *self.points.last().unwrap()
    }

    /// Uniform step in x = ln r.
    pub fn step(&self) -> f64 {
        self.h
    }

    fn fractional_index(&self, r: f64) -> f64 {
        (r.ln() - self.x0) / self.h
    }

    /// Nearest grid index to r.
    pub fn nearest_index(&self, r: f64) -> usize {
        let t = self.fractional_index(r).round();
        (t.max(0.0) as usize).min(self.len() - 1)
    }
}

/// Boundary condition selecting which solution is produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    /// Power-law start phi ~ r^p at the inner edge. `None` picks the larger
    /// indicial exponent; an explicit value enables the boundary-condition
    /// sweep used for the kappa < 0 adjudication.
    RegularOrigin { exponent: Option<f64> },
    /// Decaying asymptotic start at the outer edge.
    DecayingInfinity,
}

/// A two-component radial solution sampled on the grid. `phi` is the
/// integrated component; `phi_companion` the other one, filled through the
/// first-order relation. True values are the stored ones times
/// exp(log_scale).
#[derive(Debug, Clone)]
pub struct SpinorGridSolution {
    pub grid: RadialGrid,
    pub phi: Vec<f64>,
    pub phi_companion: Vec<f64>,
    pub component: Component,
    pub origin_exponent: f64,
    pub log_scale: f64,
    pub boundary: Boundary,
    /// |C +- eps| of the companion relation used; small values flag an
    /// ill-conditioned companion direction.
    pub companion_denominator: f64,
}

impl SpinorGridSolution {
    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    /// Upper component at index i (mantissa; scale excluded).
    pub fn plus(&self, i: usize) -> f64 {
        match self.component {
            Component::Plus => self.phi[i],
            Component::Minus => self.phi_companion[i],
        }
    }

    /// Lower component at index i (mantissa; scale excluded).
    pub fn minus(&self, i: usize) -> f64 {
        match self.component {
            Component::Plus => self.phi_companion[i],
            Component::Minus => self.phi[i],
        }
    }

    fn interpolate(&self, values: &[f64], r: f64) -> Result<f64> {
        let grid = &self.grid;
        if r < grid.r_min() * (1.0 - 1e-12) || r > grid.r_max() * (1.0 + 1e-12) {
            return Err(Error::OffGrid {
                r,
                r_min: grid.r_min(),
                r_max: grid.r_max(),
            });
        }
        let t = grid.fractional_index(r);
        let nearest = t.round();
        if (t - nearest).abs() < 1e-10 {
            let i = (nearest.max(0.0) as usize).min(grid.len() - 1);
            return Ok(values[i]);
        }
        let j = (t.floor() as usize).clamp(1, grid.len() - 3);
        let xs = [
            grid.r(j - 1).ln(),
            grid.r(j).ln(),
            grid.r(j + 1).ln(),
            grid.r(j + 2).ln(),
        ];
        let ys = [values[j - 1], values[j], values[j + 1], values[j + 2]];
        Ok(lagrange_cubic(&xs, &ys, r.ln()))
    }

    pub fn plus_at(&self, r: f64) -> Result<f64> {
        match self.component {
            Component::Plus => self.interpolate(&self.phi, r),
            Component::Minus => self.interpolate(&self.phi_companion, r),
        }
    }

    pub fn minus_at(&self, r: f64) -> Result<f64> {
        match self.component {
            Component::Plus => self.interpolate(&self.phi_companion, r),
            Component::Minus => self.interpolate(&self.phi, r),
        }
    }
}

/// Indicial exponents p(p-1) = A of the channel equation at the origin,
/// returned as (larger, smaller).
pub fn indicial_exponents(problem: &ProblemSpec, component: Component) -> (f64, f64) {
    let a = problem.coeffs(component).inv_sq;
    let root = (1.0 + 4.0 * a).max(0.0).sqrt();
    (0.5 * (1.0 + root), 0.5 * (1.0 - root))
}

/// Power-series start phi(r) = r^p (1 + c_1 r + ...) of the regular
/// solution; exact for potentials in the coefficient form.
fn regular_series_value(coeffs: &PotentialCoeffs, k2: f64, p: f64, r: f64) -> Result<f64> {
    const TERMS: usize = 14;
    let mut c = [0.0_f64; TERMS + 1];
    c[0] = 1.0;
    for m in 1..=TERMS {
        let mf = m as f64;
        let denom = (p + mf) * (p + mf - 1.0) - coeffs.inv_sq;
        if denom.abs() < 1e-8 * (1.0 + coeffs.inv_sq.abs() + mf * mf) {
            return Err(Error::Convergence {
                what: "indicial resonance in the regular series start",
            });
        }
        let mut rhs = coeffs.inv * c[m - 1];
        if m >= 2 {
            rhs += (coeffs.constant - k2) * c[m - 2];
        }
        if m >= 3 {
            rhs += coeffs.linear * c[m - 3];
        }
        if m >= 4 {
            rhs += coeffs.quadratic * c[m - 4];
        }
        c[m] = rhs / denom;
    }
    let mut sum = 0.0;
    for m in (0..=TERMS).rev() {
        sum = sum * r + c[m];
    }
    Ok(r.powf(p) * sum)
}

/// Decaying asymptotic value of the irregular solution at large r, as
/// (log magnitude, sign). Oscillator tails decay like exp(-w r^2 / 2) r^s,
/// Coulomb and free tails like exp(-c r) r^t.
fn irregular_tail_ln_value(
    problem: &ProblemSpec,
    component: Component,
    r: f64,
) -> Result<(f64, f64)> {
    let coeffs = problem.coeffs(component);
    let k2 = problem.k_squared();
    match problem.kind {
        ProblemKind::Oscillator => {
            let w = problem.strength * problem.strength; // omega^2
            let s = (k2 - coeffs.constant) / (2.0 * w) - 0.5;
            let mut term = 1.0_f64;
            let mut sum = 1.0_f64;
            let mut prev = f64::INFINITY;
            for m in 1..24 {
                let mf = m as f64;
                term *= (coeffs.inv_sq - (s - 2.0 * mf + 2.0) * (s - 2.0 * mf + 1.0))
                    / (4.0 * mf * w * r * r);
                if term.abs() > prev {
                    break; // asymptotic series: stop at the smallest term
                }
                prev = term.abs();
                sum += term;
                if term.abs() < 1e-17 * sum.abs() {
                    break;
                }
            }
            Ok((-0.5 * w * r * r + s * r.ln() + sum.abs().ln(), sum.signum()))
        }
        ProblemKind::Coulomb | ProblemKind::Free => {
            if k2 >= 0.0 {
                return Err(Error::Domain {
                    what: "decaying tail requires eps^2 < 1",
                    value: k2,
                });
            }
            let c = (-k2).sqrt();
            let t = -coeffs.inv / (2.0 * c);
            let mut term = 1.0_f64;
            let mut sum = 1.0_f64;
            let mut prev = f64::INFINITY;
            for m in 1..24 {
                let mf = m as f64;
                term *= (coeffs.inv_sq - (t - mf + 1.0) * (t - mf)) / (2.0 * c * mf * r);
                if term.abs() > prev {
                    break;
                }
                prev = term.abs();
                sum += term;
                if term.abs() < 1e-17 * sum.abs() {
                    break;
                }
            }
            Ok((-c * r + t * r.ln() + sum.abs().ln(), sum.signum()))
        }
    }
}

/// 5-point derivative of grid values in the x = ln r variable, one-sided at
/// the edges, O(h^4) everywhere.
fn grid_derivative_x(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    let mut d = vec![0.0; n];
    for i in 0..n {
        d[i] = if i >= 2 && i + 2 < n {
            (values[i - 2] - 8.0 * values[i - 1] + 8.0 * values[i + 1] - values[i + 2]) / (12.0 * h)
        } else if i < 2 {
            (-25.0 * values[i] + 48.0 * values[i + 1] - 36.0 * values[i + 2] + 16.0 * values[i + 3]
                - 3.0 * values[i + 4])
                / (12.0 * h)
        } else {
            (25.0 * values[i] - 48.0 * values[i - 1] + 36.0 * values[i - 2] - 16.0 * values[i - 3]
                + 3.0 * values[i - 4])
                / (12.0 * h)
        };
    }
    d
}

/// Integrates one spinor-component channel over the grid from the stated
/// boundary and fills the other component through the first-order relation
///
///   phi^{com} = lb/(C +- eps) [ (+-C U -+ S/lb) phi + d/dr phi ]
///
/// (upper signs when integrating the plus component). The integrated
/// channel is exact to the Numerov order; the companion inherits one
/// 5-point differentiation.
pub fn integrate_solution(
    problem: &ProblemSpec,
    component: Component,
    grid: &RadialGrid,
    boundary: Boundary,
) -> Result<SpinorGridSolution> {
    let n = grid.len();
    let h = grid.step();
    let k2 = problem.k_squared();

    let q: Vec<f64> = grid
        .points()
        .iter()
        .map(|&r| r * r * (problem.effective_potential(component, r) - k2) + 0.25)
        .collect();

    let (sweep, origin_exponent) = match boundary {
        Boundary::RegularOrigin { exponent } => {
            let (larger, _) = indicial_exponents(problem, component);
            let p = exponent.unwrap_or(larger);
            let coeffs = problem.coeffs(component);
            let phi0 = regular_series_value(&coeffs, k2, p, grid.r(0))?;
            let phi1 = regular_series_value(&coeffs, k2, p, grid.r(1))?;
            let y0 = phi0 / grid.r(0).sqrt();
            let y1 = phi1 / grid.r(1).sqrt();
            (numerov_outward(&q, h, y0, y1)?, p)
        }
        Boundary::DecayingInfinity => {
            let (ln_a, sign_a) = irregular_tail_ln_value(problem, component, grid.r(n - 1))?;
            let (ln_b, sign_b) = irregular_tail_ln_value(problem, component, grid.r(n - 2))?;
            let ln_ref = ln_a.max(ln_b);
            let ya = sign_a * (ln_a - ln_ref).exp() / grid.r(n - 1).sqrt();
            let yb = sign_b * (ln_b - ln_ref).exp() / grid.r(n - 2).sqrt();
            let mut sweep = numerov_inward(&q, h, ya, yb)?;
            sweep.log_scale += ln_ref;
            let t = match problem.kind {
                ProblemKind::Oscillator => {
                    (k2 - problem.coeffs(component).constant)
                        / (2.0 * problem.strength * problem.strength)
                        - 0.5
                }
                _ => -problem.coeffs(component).inv / (2.0 * (-k2).max(1e-300).sqrt()),
            };
            (sweep, t)
        }
    };

    // phi = sqrt(r) y; dphi/dr = (y/2 + dy/dx) / sqrt(r)
    let y = &sweep.values;
    let dy = grid_derivative_x(y, h);
    let mut phi = vec![0.0; n];
    let mut dphi = vec![0.0; n];
    for i in 0..n {
        let r = grid.r(i);
        phi[i] = r.sqrt() * y[i];
        dphi[i] = (0.5 * y[i] + dy[i]) / r.sqrt();
    }

    let c = problem.c();
    let s = problem.s();
    let eps = problem.kin.epsilon;
    let lb = problem.kin.lambda_bar;
    let denom = match component {
        Component::Plus => c + eps,
        Component::Minus => c - eps,
    };
    let mut companion = vec![0.0; n];
    for i in 0..n {
        let u = problem.u_potential(grid.r(i));
        let q_c = match component {
            Component::Plus => c * u - s / lb,
            Component::Minus => s / lb - c * u,
        };
        companion[i] = lb / denom * (q_c * phi[i] + dphi[i]);
    }

    Ok(SpinorGridSolution {
        grid: grid.clone(),
        phi,
        phi_companion: companion,
        component,
        origin_exponent,
        log_scale: sweep.log_scale,
        boundary,
        companion_denominator: denom.abs(),
    })
}

/// Wronskian estimate over the interior grid.
#[derive(Debug, Clone, Copy)]
pub struct Wronskian {
    pub value: SignedLogValue,
    /// Standard deviation across the grid relative to the median; a quality
    /// metric for the construction (the exact Wronskian is r-independent).
    pub relative_std: f64,
}

/// Median of lb^{-1} (phi+ phibar- - phi- phibar+) across the interior
/// grid. Errors with [`Error::Degenerate`] when the median is below 1e-12
/// of the product scale (solutions numerically proportional).
pub fn wronskian(
    regular: &SpinorGridSolution,
    irregular: &SpinorGridSolution,
    lambda_bar: f64,
) -> Result<Wronskian> {
    assert_eq!(regular.len(), irregular.len(), "solutions share a grid");
    let n = regular.len();
    let margin = 4.max(n / 100);
    let mut samples = Vec::with_capacity(n - 2 * margin);
    let mut scales = Vec::with_capacity(n - 2 * margin);
    for i in margin..n - margin {
        let t1 = regular.plus(i) * irregular.minus(i);
        let t2 = regular.minus(i) * irregular.plus(i);
        samples.push((t1 - t2) / lambda_bar);
        scales.push((t1.abs() + t2.abs()) / lambda_bar);
    }
    let median = |v: &mut Vec<f64>| -> f64 {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v[v.len() / 2]
    };
    let mut sorted = samples.clone();
    let med = median(&mut sorted);
    let mut sorted_scales = scales;
    let scale = median(&mut sorted_scales);
    if med.abs() < 1e-12 * scale {
        return Err(Error::Degenerate {
            wronskian: med,
            scale,
        });
    }
    let mean = samples.iter().sum::<f64>() / samples.len() as f64;
    let var = samples.iter().map(|w| (w - mean) * (w - mean)).sum::<f64>() / samples.len() as f64;
    let rel_std = var.sqrt() / med.abs();
    let value = SignedLogValue::from_value(med).mul(SignedLogValue::from_exp(
        regular.log_scale + irregular.log_scale,
    ));
    Ok(Wronskian {
        value,
        relative_std: rel_std,
    })
}

/// Assembles the 2x2 Green's matrix at (r, r') from a regular/irregular
/// pair and their Wronskian:
///
///   diagonal:     G^{ss} = phi^s(r_<) phibar^s(r_>) / W
///   off-diagonal: G^{+-} = theta(r'-r) phi+(r) phibar-(r')/W
///                        + theta(r-r') phi-(r') phibar+(r)/W    (+ <-> -)
///
/// Off-grid points are cubic-interpolated; coincident off-diagonal points
/// average the two theta branches.
pub fn assemble_green(
    regular: &SpinorGridSolution,
    irregular: &SpinorGridSolution,
    wronskian_value: SignedLogValue,
    r: f64,
    r_prime: f64,
) -> Result<GreenMatrix> {
    let scale = SignedLogValue::from_exp(regular.log_scale + irregular.log_scale)
        .mul(wronskian_value.recip());
    let combine = |a: f64, b: f64| -> f64 {
        SignedLogValue::from_value(a)
            .mul(SignedLogValue::from_value(b))
            .mul(scale)
            .to_f64()
    };

    let (r_less, r_greater) = (r.min(r_prime), r.max(r_prime));
    let gpp = combine(regular.plus_at(r_less)?, irregular.plus_at(r_greater)?);
    let gmm = combine(regular.minus_at(r_less)?, irregular.minus_at(r_greater)?);

    let (gpm, gmp) = if r < r_prime {
        (
            combine(regular.plus_at(r)?, irregular.minus_at(r_prime)?),
            combine(regular.minus_at(r)?, irregular.plus_at(r_prime)?),
        )
    } else if r > r_prime {
        (
            combine(regular.minus_at(r_prime)?, irregular.plus_at(r)?),
            combine(regular.plus_at(r_prime)?, irregular.minus_at(r)?),
        )
    } else {
        let below = combine(regular.plus_at(r)?, irregular.minus_at(r)?);
        let above = combine(regular.minus_at(r)?, irregular.plus_at(r)?);
        (0.5 * (below + above), 0.5 * (above + below))
    };

    Ok(GreenMatrix {
        r,
        r_prime,
        gpp,
        gpm,
        gmp,
        gmm,
    })
}

/// Applies the two first-order branch operators to supplied diagonal
/// fields and combines them with weights xi and 1 - xi:
///
///   xi     * lb/(C+eps) [ (C U(r)  - S/lb) + d/dr  ] gpp(r, r')
///   (1-xi) * lb/(C-eps) [ (S/lb - C U(r')) + d/dr' ] gmm(r, r')
///
/// Running it at xi = 1 and xi = 0 isolates the two branches, which is how
/// the branch-sign question behind the (2 xi - 1) factor is measured.
pub fn xi_offdiagonal_numeric<F, G>(
    gpp_field: F,
    gmm_field: G,
    problem: &ProblemSpec,
    xi: f64,
    r: f64,
    r_prime: f64,
) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
    G: Fn(f64, f64) -> Result<f64>,
{
    let h_r = 2e-3 * r;
    let h_rp = 2e-3 * r_prime;
    if (r - r_prime).abs() < 3.0 * h_r.max(h_rp) {
        return Err(Error::Diagonal { r, r_prime });
    }
    let c = problem.c();
    let s = problem.s();
    let lb = problem.kin.lambda_bar;
    let eps = problem.kin.epsilon;

    let gpp_r = gpp_field(r, r_prime)?;
    let dgpp =
        crate::numeric::derivative_5pt(&|t: f64| gpp_field(t, r_prime).unwrap_or(f64::NAN), r, h_r);
    let gmm_rp = gmm_field(r, r_prime)?;
    let dgmm = crate::numeric::derivative_5pt(
        &|t: f64| gmm_field(r, t).unwrap_or(f64::NAN),
        r_prime,
        h_rp,
    );
    if !dgpp.is_finite() || !dgmm.is_finite() {
        return Err(Error::Convergence {
            what: "xi probe derivative stencil",
        });
    }
    let branch_plus = lb / (c + eps) * ((c * problem.u_potential(r) - s / lb) * gpp_r + dgpp);
    let branch_minus =
        lb / (c - eps) * ((s / lb - c * problem.u_potential(r_prime)) * gmm_rp + dgmm);
    Ok(xi * branch_plus + (1.0 - xi) * branch_minus)
}

/// Scalar single-channel Green's function oracle: the selected channel is
/// integrated directly (no companion) and normalized so the derivative jump
/// toward the diagonal equals the delta-source strength (C +- eps):
///
///   G_ch(r, r') = -(C +- eps) phi(r_<) phibar(r_>) / W(phi, phibar)
///
/// This validates each closed-form diagonal element against its own channel
/// equation independently of the two-component assembly.
pub struct ScalarChannelOracle {
    regular: SpinorGridSolution,
    irregular: SpinorGridSolution,
    strength: f64,
    wronskian: SignedLogValue,
}

impl ScalarChannelOracle {
    pub fn build(
        problem: &ProblemSpec,
        component: Component,
        grid: &RadialGrid,
        origin_exponent: Option<f64>,
    ) -> Result<Self> {
        let regular = integrate_solution(
            problem,
            component,
            grid,
            Boundary::RegularOrigin {
                exponent: origin_exponent,
            },
        )?;
        let irregular = integrate_solution(problem, component, grid, Boundary::DecayingInfinity)?;
        let h = grid.step();
        let d_reg = grid_derivative_x(&regular.phi, h);
        let d_irr = grid_derivative_x(&irregular.phi, h);
        let n = grid.len();
        let margin = 4.max(n / 100);
        // d(phi)/dr = (d phi/dx) / r on the log grid. The Wronskian is
        // r-independent, so it is estimated over the first stretch of the
        // sweep, where an outward integration of a subdominant origin
        // behavior (boundary-condition sweeps) is still uncontaminated by
        // the dominant-root admixture it inevitably accretes.
        let upper = margin + (n - 2 * margin) / 4;
        let mut samples: Vec<f64> = (margin..upper)
            .map(|i| {
                let r = grid.r(i);
                regular.phi[i] * (d_irr[i] / r) - (d_reg[i] / r) * irregular.phi[i]
            })
            .collect();
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let med = samples[samples.len() / 2];
        if med == 0.0 {
            return Err(Error::Degenerate {
                wronskian: med,
                scale: 1.0,
            });
        }
        let strength = match component {
            Component::Plus => problem.c() + problem.kin.epsilon,
            Component::Minus => problem.c() - problem.kin.epsilon,
        };
        let wronskian = SignedLogValue::from_value(med).mul(SignedLogValue::from_exp(
            regular.log_scale + irregular.log_scale,
        ));
        Ok(Self {
            regular,
            irregular,
            strength,
            wronskian,
        })
    }

    pub fn origin_exponent(&self) -> f64 {
        self.regular.origin_exponent
    }

    pub fn eval(&self, r: f64, r_prime: f64) -> Result<f64> {
        let (r_less, r_greater) = (r.min(r_prime), r.max(r_prime));
        let phi = self.regular.interpolate(&self.regular.phi, r_less)?;
        let phibar = self.irregular.interpolate(&self.irregular.phi, r_greater)?;
        Ok(SignedLogValue::from_value(-self.strength * phi)
            .mul(SignedLogValue::from_value(phibar))
            .mul(SignedLogValue::from_exp(
                self.regular.log_scale + self.irregular.log_scale,
            ))
            .mul(self.wronskian.recip())
            .to_f64())
    }
}
