//! Property-based invariants over randomized inputs.

use dirac_green::kinematics::{Component, Kinematics};
use dirac_green::oscillator::{g_diag_osc, g_offdiag_osc, OscillatorModel};
use dirac_green::specfun::{kummer_m, ln_gamma_signed, whittaker_m, whittaker_w, WhittakerArgs};
use proptest::prelude::*;

fn dist_nonpos_int(x: f64) -> f64 {
    if x > 0.0 {
        x
    } else {
        (x - x.round()).abs()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gamma_recurrence_log_sign(x in -4.9_f64..19.0) {
        prop_assume!(dist_nonpos_int(x) > 1e-3 && dist_nonpos_int(x + 1.0) > 1e-3);
        let g1 = ln_gamma_signed(x + 1.0).unwrap();
        let g0 = ln_gamma_signed(x).unwrap();
        let log_expected = g0.log_abs + x.abs().ln();
        prop_assert!((g1.log_abs - log_expected).abs() < 1e-12 * (1.0 + log_expected.abs()));
        prop_assert_eq!(g1.sign, g0.sign * x.signum());
    }

    #[test]
    fn whittaker_m_defining_kummer_expression(
        a in -3.0_f64..3.0,
        b in 0.3_f64..3.0,
        x in 0.05_f64..20.0,
    ) {
        prop_assume!(dist_nonpos_int(2.0 * b + 1.0) > 1e-3);
        let direct = whittaker_m(WhittakerArgs { a, b, x }).unwrap();
        let via_kummer =
            (-0.5 * x).exp() * x.powf(b + 0.5) * kummer_m(b - a + 0.5, 2.0 * b + 1.0, x).unwrap();
        prop_assert!(
            ((direct - via_kummer) / via_kummer).abs() < 1e-10,
            "{} vs {}",
            direct,
            via_kummer
        );
    }

    #[test]
    fn whittaker_w_b_reflection(
        a in -2.0_f64..2.0,
        b in 0.3_f64..2.5,
        x in 0.1_f64..15.0,
    ) {
        let plus = whittaker_w(WhittakerArgs { a, b, x }).unwrap();
        let minus = whittaker_w(WhittakerArgs { a, b: -b, x }).unwrap();
        prop_assert!(((plus - minus) / plus).abs() < 1e-10);
    }

    #[test]
    fn oscillator_diag_depends_on_ordered_pair_only(
        r in 0.1_f64..4.0,
        rp in 0.1_f64..4.0,
        kappa in prop::sample::select(vec![1i32, -1, 2, -2]),
    ) {
        let mu_mid = if kappa > 0 { kappa as f64 + 1.0 } else { 1.5 };
        let eps = (1.0 + 0.04 * mu_mid).sqrt();
        let model =
            OscillatorModel::new(Kinematics::new(0.1, eps, kappa).unwrap(), 1.0).unwrap();
        for comp in [Component::Plus, Component::Minus] {
            let g = g_diag_osc(&model, comp, r, rp).unwrap();
            let h = g_diag_osc(&model, comp, rp, r).unwrap();
            prop_assert_eq!(g.to_bits(), h.to_bits());
        }
        let (gpm, gmp) = g_offdiag_osc(&model, 1.0, r, rp).unwrap();
        let (gpm_sw, gmp_sw) = g_offdiag_osc(&model, 1.0, rp, r).unwrap();
        prop_assert_eq!(gpm.to_bits(), gmp_sw.to_bits());
        prop_assert_eq!(gmp.to_bits(), gpm_sw.to_bits());
    }

    #[test]
    fn kummer_m_series_recurrence_consistency(
        a in -2.5_f64..2.5,
        b in 0.4_f64..3.0,
        x in 0.0_f64..25.0,
    ) {
        // contiguous relation: (b - a) M(a-1, b, x) + (2a - b + x) M(a, b, x)
        //                      - a M(a+1, b, x) = 0
        let m0 = kummer_m(a, b, x).unwrap();
        let mm = kummer_m(a - 1.0, b, x).unwrap();
        let mp = kummer_m(a + 1.0, b, x).unwrap();
        let resid = (b - a) * mm + (2.0 * a - b + x) * m0 - a * mp;
        let scale = ((b - a) * mm).abs() + ((2.0 * a - b + x) * m0).abs() + (a * mp).abs();
        prop_assert!(resid.abs() <= 1e-11 * scale.max(1e-300), "resid {} scale {}", resid, scale);
    }
}
