//! Closed-form Dirac-Coulomb radial Green's matrix. The even coupling
//! V(r) = Z/r maps each spinor component onto a nonrelativistic Coulomb
//! kernel with effective charge Z*eps and non-integer angular momenta built
//! from gamma = sqrt(kappa^2 - lb^2 Z^2). Diagonal elements are single
//! Whittaker products in zeta*r; off-diagonal elements combine a
//! diagonal-element bracket (third order in the Compton scale) with a
//! theta-split product term linear in it.
//!
//! Sign conventions: the first Whittaker index is implemented signed,
//! mu = -lb Z eps / sqrt(1 - eps^2) (and tau = -Z/sqrt(-2E) in the
//! nonrelativistic kernel), which agrees with the absolute-value form for
//! attractive coupling (Z eps < 0) and keeps the radial-equation residual
//! checks valid for either sign of Z. Attractive hydrogen-like
//! configurations therefore use Z < 0.

use crate::error::{Error, Result};
use crate::kinematics::{Component, GreenMatrix, Kinematics};
use crate::numeric::dist_to_nonpositive_integer;
use crate::oscillator::DELTA_XI;
use crate::specfun::{
    ln_gamma_signed, recip_gamma, whittaker_m_signed, whittaker_w_signed, SignedLogValue,
    WhittakerArgs, DELTA_POLE,
};

/// Coulomb model: kinematics plus spinor charge. Everything else (gamma,
/// C = gamma/kappa, S = lb Z / kappa, zeta, the signed mu) is derived on
/// demand so the stored state can never go inconsistent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombModel {
    pub kin: Kinematics,
    pub z: f64,
}

impl CoulombModel {
    pub fn new(kin: Kinematics, z: f64) -> Result<Self> {
        let kappa2 = (kin.kappa as f64) * (kin.kappa as f64);
        let lz2 = kin.lambda_bar * kin.lambda_bar * z * z;
        if kappa2 <= lz2 {
            return Err(Error::Domain {
                what: "kappa^2 must exceed (lambda_bar Z)^2 for real gamma",
                value: lz2 - kappa2,
            });
        }
        if kin.epsilon.abs() >= 1.0 {
            return Err(Error::Domain {
                what: "|epsilon| must be < 1 (below the continuum)",
                value: kin.epsilon,
            });
        }
        let model = Self { kin, z };
        let gamma = model.gamma();
        let mu = model.mu();
        let guards: &[(&'static str, f64)] = if kin.kappa > 0 {
            &[("gamma-mu+1", gamma - mu + 1.0), ("gamma-mu", gamma - mu)]
        } else {
            &[
                ("-gamma-mu", -gamma - mu),
                ("-gamma-mu+1", -gamma - mu + 1.0),
            ]
        };
        for &(what, arg) in guards {
            if dist_to_nonpositive_integer(arg) < DELTA_POLE {
                return Err(Error::Pole {
                    argument: arg,
                    nearest_n: (-arg.round()) as i64,
                    what,
                });
            }
        }
        Ok(model)
    }

    /// Relativistic angular momentum gamma = sqrt(kappa^2 - lb^2 Z^2).
    pub fn gamma(&self) -> f64 {
        let kappa = self.kin.kappa as f64;
        (kappa * kappa - self.kin.lambda_bar * self.kin.lambda_bar * self.z * self.z).sqrt()
    }

    /// C = gamma / kappa.
    pub fn c(&self) -> f64 {
        self.gamma() / self.kin.kappa as f64
    }

    /// S = lb Z / kappa.
    pub fn s(&self) -> f64 {
        self.kin.lambda_bar * self.z / self.kin.kappa as f64
    }

    /// Signed first Whittaker index mu = -lb Z eps / sqrt(1 - eps^2);
    /// positive for attractive coupling below the continuum.
    pub fn mu(&self) -> f64 {
        let eps = self.kin.epsilon;
        -self.kin.lambda_bar * self.z * eps / (1.0 - eps * eps).sqrt()
    }

    /// zeta = (2 / lb) sqrt(1 - eps^2).
    pub fn zeta(&self) -> f64 {
        let eps = self.kin.epsilon;
        2.0 / self.kin.lambda_bar * (1.0 - eps * eps).sqrt()
    }
}

/// Parameter map onto the nonrelativistic Coulomb kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombMap {
    pub l_eff: f64,
    pub z_eff: f64,
    pub e_eff: f64,
    pub prefactor: f64,
}

/// l -> gamma or -gamma-1 (plus), gamma-1 or -gamma (minus), Z -> Z eps,
/// E -> (eps^2-1)/(2 lb^2), prefactor (gamma/kappa +- eps)/2.
pub fn map_coulomb(component: Component, kin: Kinematics, z: f64) -> Result<CoulombMap> {
    let model = CoulombModel::new(kin, z)?;
    Ok(map_coulomb_unchecked(component, &model))
}

pub fn map_coulomb_unchecked(component: Component, model: &CoulombModel) -> CoulombMap {
    let gamma = model.gamma();
    let c = model.c();
    let eps = model.kin.epsilon;
    let kappa_pos = model.kin.kappa > 0;
    let e_eff = (eps * eps - 1.0) / (2.0 * model.kin.lambda_bar * model.kin.lambda_bar);
    match component {
        Component::Plus => CoulombMap {
            l_eff: if kappa_pos { gamma } else { -gamma - 1.0 },
            z_eff: model.z * eps,
            e_eff,
            prefactor: 0.5 * (c + eps),
        },
        Component::Minus => CoulombMap {
            l_eff: if kappa_pos { gamma - 1.0 } else { -gamma },
            z_eff: model.z * eps,
            e_eff,
            prefactor: 0.5 * (c - eps),
        },
    }
}

fn check_radii(r: f64, r_prime: f64) -> Result<()> {
    if !(r > 0.0) {
        return Err(Error::Domain {
            what: "r must be > 0",
            value: r,
        });
    }
    if !(r_prime > 0.0) {
        return Err(Error::Domain {
            what: "r_prime must be > 0",
            value: r_prime,
        });
    }
    Ok(())
}

/// Nonrelativistic radial Coulomb Green's function for E < 0:
///
///   g_l(r,r',E) = (1/k) Gamma(l+1-tau)/Gamma(2l+2)
///                 * M_{tau,l+1/2}(2k r_<) W_{tau,l+1/2}(2k r_>)
///
/// with k = sqrt(-2E) and the signed index tau = -Z/k. The 1/k prefactor is
/// the unique normalization whose derivative jump toward the diagonal is 2,
/// i.e. the kernel of [-d^2 + l(l+1)/r^2 + 2Z/r - 2E] with source strength
/// 2; the eigenfunction sum over normalized bound states with denominators
/// (E_n - E) reproduces exactly this normalization. Attractive coupling
/// (Z < 0) produces the pole ladder E_n = -Z^2 / 2(n+l+1)^2; for repulsive
/// coupling tau < 0 keeps the gamma prefactor finite for all E < 0.
pub fn g_nonrel_coulomb(l: f64, z: f64, energy: f64, r: f64, r_prime: f64) -> Result<f64> {
    check_radii(r, r_prime)?;
    if energy >= 0.0 {
        return Err(Error::Domain {
            what: "g_nonrel_coulomb requires E < 0",
            value: energy,
        });
    }
    let k = (-2.0 * energy).sqrt();
    let tau = -z / k;
    let gamma_arg = l + 1.0 - tau;
    if dist_to_nonpositive_integer(gamma_arg) < DELTA_POLE {
        return Err(Error::Pole {
            argument: gamma_arg,
            nearest_n: (-gamma_arg.round()) as i64,
            what: "l+1-tau",
        });
    }
    let r_less = r.min(r_prime);
    let r_greater = r.max(r_prime);
    let b = l + 0.5;
    let m = whittaker_m_signed(WhittakerArgs {
        a: tau,
        b,
        x: 2.0 * k * r_less,
    })?;
    let w = whittaker_w_signed(WhittakerArgs {
        a: tau,
        b,
        x: 2.0 * k * r_greater,
    })?;
    ln_gamma_signed(gamma_arg)?
        .div(ln_gamma_signed(2.0 * l + 2.0)?)
        .mul(SignedLogValue::from_value(1.0 / k))
        .mul(m)
        .mul(w)
        .to_f64_checked()
}

/// Whittaker second index, gamma-ratio and weight of the closed diagonal
/// forms by component and sign of kappa. The first index is always mu.
///
/// The weight is (gamma/kappa +- eps)/zeta: the normalization under which
/// the derivative jump across the diagonal equals the delta-source strength
/// (gamma/kappa +- eps) of the radial equation, consistent with the
/// nonrelativistic kernel normalization above.
fn diag_parameters(model: &CoulombModel, component: Component) -> (f64, f64, f64, f64) {
    // (whittaker_b, gamma_num, gamma_den, weight)
    let gamma = model.gamma();
    let mu = model.mu();
    let c = model.c();
    let eps = model.kin.epsilon;
    let zeta = model.zeta();
    match (component, model.kin.kappa > 0) {
        (Component::Plus, true) => (
            gamma + 0.5,
            gamma - mu + 1.0,
            2.0 * gamma + 2.0,
            (c + eps) / zeta,
        ),
        (Component::Plus, false) => (-gamma - 0.5, -gamma - mu, -2.0 * gamma, (c + eps) / zeta),
        (Component::Minus, true) => (gamma - 0.5, gamma - mu, 2.0 * gamma, (c - eps) / zeta),
        (Component::Minus, false) => (
            -gamma + 0.5,
            -gamma - mu + 1.0,
            -2.0 * gamma + 2.0,
            (c - eps) / zeta,
        ),
    }
}

/// Diagonal element with detuning knobs for the negative controls; neutral
/// values (0, 1) give the reference closed forms.
pub fn g_diag_coul_detuned(
    model: &CoulombModel,
    component: Component,
    index_shift: f64,
    prefactor_scale: f64,
    r: f64,
    r_prime: f64,
) -> Result<f64> {
    check_radii(r, r_prime)?;
    let (b, num, den, weight) = diag_parameters(model, component);
    let mu = model.mu() + index_shift;
    let zeta = model.zeta();
    let r_less = r.min(r_prime);
    let r_greater = r.max(r_prime);
    let m = whittaker_m_signed(WhittakerArgs {
        a: mu,
        b,
        x: zeta * r_less,
    })?;
    let w = whittaker_w_signed(WhittakerArgs {
        a: mu,
        b,
        x: zeta * r_greater,
    })?;
    ln_gamma_signed(num)?
        .div(ln_gamma_signed(den)?)
        .mul(SignedLogValue::from_value(weight * prefactor_scale))
        .mul(m)
        .mul(w)
        .to_f64_checked()
}

/// Diagonal Green's-matrix element G^{++} or G^{--} in closed form.
/// Bit-identical under r <-> r'.
pub fn g_diag_coul(
    model: &CoulombModel,
    component: Component,
    r: f64,
    r_prime: f64,
) -> Result<f64> {
    g_diag_coul_detuned(model, component, 0.0, 1.0, r, r_prime)
}

/// Theta-split term plus diagonal bracket at an ordered pair.
///
/// The coefficients are the exact first-order images of the diagonal
/// elements under the two branch operators, reduced with the ladder
/// relations (A3/A4 family):
///
///   -(lb Z / gamma) [ xi G^{++} + (xi - 1) (C+eps)/(C-eps) G^{--} ]
///   + (2 xi - 1) lb R [ w_< theta(r'-r) M_lo(zr) W_hi(zr')
///                     + w_> theta(r-r') M_hi(zr') W_lo(zr) ]
///
/// with weights w_< = 2 gamma + 1, w_> = -(gamma+mu)/2gamma for kappa > 0
/// (R = Gamma(gamma-mu+1)/Gamma(2 gamma+2)), and w_< = (gamma-mu)/2gamma,
/// w_> = 2 gamma - 1 for kappa < 0 (R = Gamma(-gamma-mu+1)/Gamma(-2 gamma+2)).
/// At xi = 1 only the plus-branch image survives.
fn offdiag_structure(model: &CoulombModel, xi: f64, r: f64, r_prime: f64) -> Result<f64> {
    let gamma = model.gamma();
    let mu = model.mu();
    let c = model.c();
    let eps = model.kin.epsilon;
    let zeta = model.zeta();
    let lb = model.kin.lambda_bar;
    let kappa_pos = model.kin.kappa > 0;

    let gpp = g_diag_coul(model, Component::Plus, r, r_prime)?;
    let gmm = g_diag_coul(model, Component::Minus, r, r_prime)?;
    let bracket = -(lb * model.z / gamma) * (xi * gpp + (xi - 1.0) * (c + eps) / (c - eps) * gmm);

    let (b_lo, b_hi, gamma_num, gamma_den, w_below, w_above) = if kappa_pos {
        (
            gamma - 0.5,
            gamma + 0.5,
            gamma - mu + 1.0,
            2.0 * gamma + 2.0,
            2.0 * gamma + 1.0,
            -(gamma + mu) / (2.0 * gamma),
        )
    } else {
        (
            -gamma + 0.5,
            -gamma - 0.5,
            -gamma - mu + 1.0,
            -2.0 * gamma + 2.0,
            (gamma - mu) / (2.0 * gamma),
            2.0 * gamma - 1.0,
        )
    };

    let ratio = ln_gamma_signed(gamma_num)?.div(ln_gamma_signed(gamma_den)?);
    let scale = ratio.mul(SignedLogValue::from_value(lb * (2.0 * xi - 1.0)));

    let below = |r_lo: f64, r_hi: f64| -> Result<SignedLogValue> {
        let m = whittaker_m_signed(WhittakerArgs {
            a: mu,
            b: b_lo,
            x: zeta * r_lo,
        })?;
        let w = whittaker_w_signed(WhittakerArgs {
            a: mu,
            b: b_hi,
            x: zeta * r_hi,
        })?;
        Ok(m.mul(w).mul(SignedLogValue::from_value(w_below)))
    };
    let above = |r_lo: f64, r_hi: f64| -> Result<SignedLogValue> {
        let m = whittaker_m_signed(WhittakerArgs {
            a: mu,
            b: b_hi,
            x: zeta * r_lo,
        })?;
        let w = whittaker_w_signed(WhittakerArgs {
            a: mu,
            b: b_lo,
            x: zeta * r_hi,
        })?;
        Ok(m.mul(w).mul(SignedLogValue::from_value(w_above)))
    };

    let split = if r < r_prime {
        below(r, r_prime)?
    } else if r > r_prime {
        above(r_prime, r)?
    } else {
        below(r, r)?
            .add(above(r, r)?)
            .mul(SignedLogValue::from_value(0.5))
    };
    Ok(bracket + scale.mul(split).to_f64_checked()?)
}

/// Off-diagonal elements (G^{+-}, G^{-+}) at (r, r'), xi != 1/2. At
/// xi = 1/2 the theta-split term is annihilated and only the bracket term
/// would survive; that degenerate combination is rejected.
pub fn g_offdiag_coul(model: &CoulombModel, xi: f64, r: f64, r_prime: f64) -> Result<(f64, f64)> {
    check_radii(r, r_prime)?;
    if (xi - 0.5).abs() <= DELTA_XI {
        return Err(Error::XiDegenerate { xi });
    }
    let gmp = offdiag_structure(model, xi, r, r_prime)?;
    let gpm = offdiag_structure(model, xi, r_prime, r)?;
    Ok((gpm, gmp))
}

/// Full 2x2 Green's matrix at one point pair.
pub fn green_matrix(model: &CoulombModel, xi: f64, r: f64, r_prime: f64) -> Result<GreenMatrix> {
    let gpp = g_diag_coul(model, Component::Plus, r, r_prime)?;
    let gmm = g_diag_coul(model, Component::Minus, r, r_prime)?;
    let (gpm, gmp) = g_offdiag_coul(model, xi, r, r_prime)?;
    Ok(GreenMatrix {
        r,
        r_prime,
        gpp,
        gpm,
        gmp,
        gmm,
    })
}

pub use crate::oscillator::BoundEnergy;

/// Located pole ladder plus its physical status.
#[derive(Debug, Clone, PartialEq)]
pub struct CoulombSpectrum {
    pub entries: Vec<BoundEnergy>,
    /// True for the kappa < 0 ladder, computed from the Gamma(-gamma-mu)
    /// pole condition of the closed G^{++}, whose boundary behavior at the
    /// origin is non-square-integrable (see the origin adjudication
    /// reports); consumers must not present it as ground truth.
    pub exploratory: bool,
}

/// Bound energies from the poles of the G^{++} gamma prefactor, located by
/// root-finding on the reciprocal gamma function over epsilon in (0, 1).
///
/// kappa > 0: poles of Gamma(gamma - mu + 1) at mu = gamma + 1 + n, the
/// fine-structure ladder eps_n = N/sqrt(N^2 + lb^2 Z^2) with N = gamma+1+n.
/// kappa < 0: poles of Gamma(-gamma - mu) at mu = n - gamma,
/// returned with the exploratory flag set.
///
/// Repulsive coupling (Z eps > 0) has signed mu < 0 throughout (0, 1) and
/// yields an empty ladder.
pub fn coulomb_bound_energies(
    lambda_bar: f64,
    kappa: i32,
    z: f64,
    n_max: usize,
) -> Result<CoulombSpectrum> {
    if kappa == 0 {
        return Err(Error::Domain {
            what: "kappa must be nonzero",
            value: 0.0,
        });
    }
    let kappa_f = kappa as f64;
    let gamma = (kappa_f * kappa_f - lambda_bar * lambda_bar * z * z).sqrt();
    if !gamma.is_finite() || gamma <= 0.0 {
        return Err(Error::Domain {
            what: "kappa^2 must exceed (lambda_bar Z)^2",
            value: lambda_bar * z,
        });
    }
    let exploratory = kappa < 0;
    if z >= 0.0 {
        // repulsive: signed mu = -lb Z eps / sqrt(1-eps^2) <= 0 on (0,1)
        return Ok(CoulombSpectrum {
            entries: Vec::new(),
            exploratory,
        });
    }
    let lz = lambda_bar * z; // negative
    let mu_of_eps = |eps: f64| -lz * eps / (1.0 - eps * eps).sqrt();
    let eps_of_mu = |mu: f64| mu / (mu * mu + lz * lz).sqrt();
    let gamma_arg = |mu: f64| {
        if kappa > 0 {
            gamma - mu + 1.0
        } else {
            -gamma - mu
        }
    };
    let f = |eps: f64| recip_gamma(gamma_arg(mu_of_eps(eps)));

    let mut entries = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mu_pole = if kappa > 0 {
            gamma + 1.0 + n as f64
        } else {
            // first positive mu on the kappa<0 ladder mu = n' - gamma
            (gamma.floor() + 1.0) + n as f64 - gamma
        };
        let lo = eps_of_mu((mu_pole - 0.4).max(mu_pole * 0.2));
        let hi = eps_of_mu(mu_pole + 0.4);
        let root = crate::numeric::bisect(&f, lo, hi).ok_or(Error::NoPole { window: (lo, hi) })?;
        entries.push(BoundEnergy {
            n,
            epsilon: root,
            residual: f(root).abs(),
        });
    }
    Ok(CoulombSpectrum {
        entries,
        exploratory,
    })
}

/// The G^{--} gamma prefactor for kappa > 0 also vanishes its reciprocal at
/// mu = gamma; this returns the corresponding epsilon = gamma/|kappa| so the
/// verification layer can measure the residue there (the (C - eps) weight
/// vanishes at exactly that point).
pub fn gmm_pole_candidate_epsilon(lambda_bar: f64, kappa: i32, z: f64) -> f64 {
    let kappa_f = kappa as f64;
    let gamma = (kappa_f * kappa_f - lambda_bar * lambda_bar * z * z).sqrt();
    gamma / kappa_f.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const ALPHA: f64 = 0.0072973525693;

    fn midgap_epsilon(lambda_bar: f64, e_eff: f64) -> f64 {
        (1.0 + 2.0 * lambda_bar * lambda_bar * e_eff).sqrt()
    }

    fn model(lambda_bar: f64, kappa: i32, z: f64, e_eff: f64) -> CoulombModel {
        let eps = midgap_epsilon(lambda_bar, e_eff);
        CoulombModel::new(Kinematics::new(lambda_bar, eps, kappa).unwrap(), z).unwrap()
    }

    #[test]
    fn construction_identities() {
        let m = model(ALPHA, 1, -1.0, -0.3);
        let s = m.s();
        let c = m.c();
        assert!((s * s + c * c - 1.0).abs() < 1e-12);
        assert!((m.gamma() - c * m.kin.kappa as f64).abs() < 1e-12);
        assert!(m.mu() > 0.0, "attractive coupling must give signed mu > 0");
        assert_relative_eq!(
            m.zeta(),
            2.0 / ALPHA * (1.0 - m.kin.epsilon * m.kin.epsilon).sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn rejects_overcritical_and_continuum() {
        let kin = Kinematics::new(0.9, 0.5, 1).unwrap();
        assert!(CoulombModel::new(kin, -1.2).is_err()); // gamma imaginary
        let kin2 = Kinematics::new(ALPHA, 1.2, 1).unwrap();
        assert!(CoulombModel::new(kin2, -1.0).is_err()); // above continuum
    }

    #[test]
    fn map_examples() {
        let eps = midgap_epsilon(ALPHA, -0.3);
        let kin = Kinematics::new(ALPHA, eps, 1).unwrap();
        let plus = map_coulomb(Component::Plus, kin, -1e-6).unwrap();
        assert_relative_eq!(plus.l_eff, 1.0, max_relative = 1e-9); // gamma -> |kappa|
        let kin2 = Kinematics::new(ALPHA, eps, 2).unwrap();
        let minus = map_coulomb(Component::Minus, kin2, -1.0).unwrap();
        let gamma2 = (4.0 - ALPHA * ALPHA).sqrt();
        assert_relative_eq!(minus.l_eff, gamma2 - 1.0, max_relative = 1e-14);
        assert_relative_eq!(
            minus.prefactor,
            0.5 * (gamma2 / 2.0 - eps),
            max_relative = 1e-12
        );
        assert_relative_eq!(
            plus.e_eff,
            (eps * eps - 1.0) / (2.0 * ALPHA * ALPHA),
            max_relative = 1e-12
        );
    }

    #[test]
    fn nonrel_kernel_symmetry_and_pole_ladder() {
        let g1 = g_nonrel_coulomb(0.0, -1.0, -0.6, 0.7, 1.9).unwrap();
        let g2 = g_nonrel_coulomb(0.0, -1.0, -0.6, 1.9, 0.7).unwrap();
        assert_eq!(g1.to_bits(), g2.to_bits());
        // attractive: poles at E = -Z^2/2(n+l+1)^2
        assert!(matches!(
            g_nonrel_coulomb(0.0, -1.0, -0.5, 0.7, 1.9),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            g_nonrel_coulomb(1.0, -1.0, -0.125, 0.7, 1.9),
            Err(Error::Pole { .. })
        ));
        // repulsive: no poles anywhere below zero
        for &e in &[-0.5, -0.125, -0.02] {
            assert!(g_nonrel_coulomb(0.0, 1.0, e, 0.7, 1.9).is_ok());
        }
    }

    #[test]
    fn repulsive_gamma_prefactor_has_no_sign_change() {
        // scan of the reciprocal gamma prefactor over E < 0: signed tau < 0
        // keeps Gamma(l+1-tau) finite and of one sign
        let mut last = f64::NAN;
        let mut e = -2.0;
        while e < -0.01 {
            let k = (-2.0 * e as f64).sqrt();
            let tau = -1.0 / k; // Z = +1
            let v = recip_gamma(1.0 - tau);
            if last.is_finite() {
                assert!(v * last > 0.0, "sign change at E = {e}");
            }
            last = v;
            e += 0.013;
        }
    }

    #[test]
    fn diag_swap_bit_identical_and_composition_route() {
        for &kappa in &[1, -1, 2, -2] {
            let m = model(ALPHA, kappa, -1.0, -0.3);
            for comp in [Component::Plus, Component::Minus] {
                let a = g_diag_coul(&m, comp, 0.6, 2.3).unwrap();
                let b = g_diag_coul(&m, comp, 2.3, 0.6).unwrap();
                assert_eq!(a.to_bits(), b.to_bits());
                // independent route: prefactor * g_l(mapped)
                let map = map_coulomb_unchecked(comp, &m);
                let composed = map.prefactor
                    * g_nonrel_coulomb(map.l_eff, map.z_eff, map.e_eff, 0.6, 2.3).unwrap();
                assert_relative_eq!(a, composed, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn offdiag_exchange_law_and_xi_degeneracy() {
        let m = model(ALPHA, 1, -1.0, -0.3);
        let (gpm, gmp) = g_offdiag_coul(&m, 1.0, 0.9, 2.1).unwrap();
        let (gpm_sw, gmp_sw) = g_offdiag_coul(&m, 1.0, 2.1, 0.9).unwrap();
        assert_eq!(gpm.to_bits(), gmp_sw.to_bits());
        assert_eq!(gmp.to_bits(), gpm_sw.to_bits());
        assert!(matches!(
            g_offdiag_coul(&m, 0.5, 0.9, 2.1),
            Err(Error::XiDegenerate { .. })
        ));
    }

    #[test]
    fn sommerfeld_ladder_kappa_one() {
        let spec = coulomb_bound_energies(ALPHA, 1, -1.0, 5).unwrap();
        assert!(!spec.exploratory);
        let gamma = (1.0 - ALPHA * ALPHA).sqrt();
        for be in &spec.entries {
            let n_big = gamma + 1.0 + be.n as f64;
            let exact = n_big / (n_big * n_big + ALPHA * ALPHA).sqrt();
            assert_relative_eq!(be.epsilon, exact, max_relative = 1e-12);
            // the residual floor is set by ulp granularity of epsilon: the
            // gamma argument moves ~N^3/(lb Z)^2 per unit epsilon here
            assert!(be.residual < 1e-4, "residual {}", be.residual);
        }
    }

    #[test]
    fn bohr_ladder_recovered_as_coupling_vanishes() {
        // eps_n -> 1 - lb^2 Z^2 / 2 (n_r + kappa)^2 + O(lb^4)
        for &lb in &[1e-2, 1e-3] {
            let spec = coulomb_bound_energies(lb, 1, -1.0, 2).unwrap();
            for be in &spec.entries {
                let n0 = be.n as f64 + 2.0; // n_r = n+1, kappa = 1
                let bohr = 1.0 - lb * lb / (2.0 * n0 * n0);
                let err = (be.epsilon - bohr).abs();
                assert!(
                    err < 5.0 * lb.powi(4),
                    "lb={lb} n={}: err {err} vs {}",
                    be.n,
                    5.0 * lb.powi(4)
                );
            }
        }
    }

    #[test]
    fn repulsive_spectrum_is_empty() {
        let spec = coulomb_bound_energies(ALPHA, 1, 1.0, 3).unwrap();
        assert!(spec.entries.is_empty());
    }

    #[test]
    fn kappa_negative_ladder_is_exploratory() {
        let spec = coulomb_bound_energies(ALPHA, -1, -1.0, 1).unwrap();
        assert!(spec.exploratory);
        // pole condition mu = n - gamma: tiny epsilon roots
        let gamma = (1.0 - ALPHA * ALPHA).sqrt();
        let mu0 = 1.0 - gamma;
        let expected = mu0 / (mu0 * mu0 + ALPHA * ALPHA).sqrt();
        assert_relative_eq!(spec.entries[0].epsilon, expected, max_relative = 1e-9);
    }

    #[test]
    fn near_integer_two_gamma_guard_trips_only_under_stress() {
        // generic coupling: 2 gamma irrational, far from integers
        let m = model(ALPHA, -1, -1.0, -0.3);
        assert!(g_diag_coul(&m, Component::Plus, 0.5, 1.5).is_ok());
        // engineered stress: lb Z tuned so 2 gamma sits within 1e-6 of an
        // integer; the first-kind function index guard must trip
        let delta = 5e-7_f64;
        let lbz = (1.0 - (1.0 - 0.5 * delta) * (1.0 - 0.5 * delta)).sqrt();
        let eps = (1.0 + 2.0 * lbz * lbz * (-0.3)).sqrt();
        let kin = Kinematics::new(lbz, eps, -1).unwrap();
        let stressed = CoulombModel::new(kin, -1.0).unwrap();
        assert!((2.0 * stressed.gamma() - 2.0).abs() < 1e-6);
        assert!(matches!(
            g_diag_coul(&stressed, Component::Plus, 0.5, 1.5),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn gmm_candidate_sits_at_c() {
        let eps_cand = gmm_pole_candidate_epsilon(ALPHA, 1, -1.0);
        assert_relative_eq!(eps_cand, (1.0 - ALPHA * ALPHA).sqrt(), max_relative = 1e-15);
    }
}
