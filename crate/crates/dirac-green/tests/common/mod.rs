//! Shared test oracles, independent of the library's evaluation paths:
//! truncated eigenfunction / Sturmian expansions of the nonrelativistic
//! kernels, summed term by term with stable recurrences.

/// Kahan-compensated accumulator.
#[derive(Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// ln Gamma for positive arguments (Stirling with correction series),
/// independent of the library's Lanczos path.
pub fn ln_gamma_positive(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < 12.0 {
        shift -= x.ln();
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0;
    shift + 0.5 * ((2.0 * std::f64::consts::PI).ln() - x.ln()) + x * (x.ln() - 1.0) + series
}

/// Truncated eigenfunction expansion of the isotropic-oscillator radial
/// kernel (potential omega^4 r^2, spectrum E_n = omega^2 (2n + l + 3/2)):
///
///   g_l(r, r') = sum_n u_n(r) u_n(r') / (E_n - E)
///
/// with normalized reduced radial eigenfunctions
/// u_n = N_n r^{l+1} e^{-w r^2/2} L_n^{l+1/2}(w r^2),
/// N_n^2 = 2 w^{l+3/2} n! / Gamma(n + l + 3/2), w = omega^2.
pub fn oscillator_spectral_sum(
    l: f64,
    omega: f64,
    energy: f64,
    r: f64,
    r_prime: f64,
    terms: usize,
) -> f64 {
    let w = omega * omega;
    let alpha = l + 0.5;
    let x = w * r * r;
    let xp = w * r_prime * r_prime;
    let prefactor = (r * r_prime).powf(l + 1.0) * (-0.5 * (x + xp)).exp();

    // Laguerre recurrences
    let (mut la0, mut la1) = (1.0_f64, 1.0 + alpha - x);
    let (mut lb0, mut lb1) = (1.0_f64, 1.0 + alpha - xp);
    // normalization ratio chain: N_n^2, starting at n = 0
    let mut norm2 = 2.0 * w.powf(l + 1.5) * (-ln_gamma_positive(l + 1.5)).exp();

    // the truncated tail oscillates in n; averaging the partial sums over a
    // window much longer than the oscillation period suppresses it by
    // orders of magnitude
    let window = (terms / 8).max(1);
    let mut acc = Kahan::default();
    let mut tail = Kahan::default();
    for n in 0..terms {
        let nf = n as f64;
        let (la, lb) = if n == 0 { (la0, lb0) } else { (la1, lb1) };
        let e_n = w * (2.0 * nf + l + 1.5);
        acc.add(norm2 * prefactor * la * lb / (e_n - energy));
        if n >= 1 {
            let next_a = ((2.0 * nf + 1.0 + alpha - x) * la1 - (nf + alpha) * la0) / (nf + 1.0);
            let next_b = ((2.0 * nf + 1.0 + alpha - xp) * lb1 - (nf + alpha) * lb0) / (nf + 1.0);
            la0 = la1;
            la1 = next_a;
            lb0 = lb1;
            lb1 = next_b;
        }
        norm2 *= (nf + 1.0) / (nf + l + 1.5);
        if n + window >= terms {
            tail.add(acc.value());
        }
    }
    tail.value() / window as f64
}

/// Truncated Sturmian expansion of the Coulomb radial kernel for E < 0
/// (complete discrete basis below threshold, unlike the bound spectrum):
///
///   g_l(r, r') = sum_n [n! / Gamma(n + 2l + 2)]
///                Phi_n(r) Phi_n(r') / (k (n + l + 1) + Z)
///
/// with Phi_n = (2kr)^{l+1} e^{-kr} L_n^{2l+1}(2kr) and k = sqrt(-2E);
/// poles sit exactly at k (n + l + 1) = -Z, the attractive ladder.
pub fn coulomb_sturmian_sum(
    l: f64,
    z: f64,
    energy: f64,
    r: f64,
    r_prime: f64,
    terms: usize,
) -> f64 {
    assert!(energy < 0.0);
    let k = (-2.0 * energy).sqrt();
    let alpha = 2.0 * l + 1.0;
    let x = 2.0 * k * r;
    let xp = 2.0 * k * r_prime;
    let prefactor = (x * xp).powf(l + 1.0) * (-0.5 * (x + xp)).exp();

    let (mut la0, mut la1) = (1.0_f64, 1.0 + alpha - x);
    let (mut lb0, mut lb1) = (1.0_f64, 1.0 + alpha - xp);
    let mut weight = (-ln_gamma_positive(2.0 * l + 2.0)).exp(); // n!/Gamma(n+2l+2) at n=0

    let window = (terms / 8).max(1);
    let mut acc = Kahan::default();
    let mut tail = Kahan::default();
    for n in 0..terms {
        let nf = n as f64;
        let (la, lb) = if n == 0 { (la0, lb0) } else { (la1, lb1) };
        acc.add(weight * prefactor * la * lb / (k * (nf + l + 1.0) + z));
        if n >= 1 {
            let next_a = ((2.0 * nf + 1.0 + alpha - x) * la1 - (nf + alpha) * la0) / (nf + 1.0);
            let next_b = ((2.0 * nf + 1.0 + alpha - xp) * lb1 - (nf + alpha) * lb0) / (nf + 1.0);
            la0 = la1;
            la1 = next_a;
            lb0 = lb1;
            lb1 = next_b;
        }
        weight *= (nf + 1.0) / (nf + 2.0 * l + 2.0);
        if n + window >= terms {
            tail.add(acc.value());
        }
    }
    tail.value() / window as f64
}
