//! Hurwitz zeta for complex s != 1 and a in (0, 1], evaluated by truncated
//! summation with Euler–Maclaurin tail corrections, plus its closed-form
//! Fourier coefficients in the half-plane Re s < 1.
//!
//! The truncation point adapts to |Im s|: the bare two-term tail rule
//! converges too slowly once |Im s| grows past a few tens, so the series
//! is cut at N = max(truncation_n, ceil(2 |Im s|)) and Bernoulli
//! corrections are appended until they drop below the target tolerance.

use crate::error::{Error, Result};
use crate::special::{cpow, ensure_finite, log_gamma, signed_power_2pi_ik_log, LogScaled, POLE_RADIUS};
use crate::sum::KahanSum;
use crate::Complex;

/// B_{2k} / (2k)! for k = 1..=8 (through B_16).
const BERNOULLI_OVER_FACTORIAL: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
];

/// Truncation and tolerance knobs for [`hurwitz_zeta`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HurwitzParams {
    /// Base series length; the effective length grows with |Im s|.
    pub truncation_n: usize,
    /// Number of Euler–Maclaurin correction terms to allow (B_2 .. B_16).
    pub em_correction_terms: usize,
    /// Stop appending corrections once a term falls below this.
    pub target_tol: f64,
}

impl Default for HurwitzParams {
    fn default() -> Self {
        HurwitzParams {
            truncation_n: 50,
            em_correction_terms: 8,
            target_tol: 1e-12,
        }
    }
}

impl HurwitzParams {
    pub fn validate(&self) -> Result<()> {
        if self.truncation_n < 10 {
            return Err(Error::Domain(format!(
                "truncation_n must be >= 10, got {}",
                self.truncation_n
            )));
        }
        if self.em_correction_terms > BERNOULLI_OVER_FACTORIAL.len() {
            return Err(Error::Domain(format!(
                "em_correction_terms must be <= {}, got {}",
                BERNOULLI_OVER_FACTORIAL.len(),
                self.em_correction_terms
            )));
        }
        if !(self.target_tol >= 1e-13) {
            return Err(Error::Domain(format!(
                "target_tol must be >= 1e-13, got {:e}",
                self.target_tol
            )));
        }
        Ok(())
    }
}

/// Hurwitz zeta(s, a) for s != 1, a in (0, 1].
pub fn hurwitz_zeta(s: Complex, a: f64, params: &HurwitzParams) -> Result<Complex> {
    params.validate()?;
    ensure_finite(s, "s")?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta: a must lie in (0, 1], got {a}"
        )));
    }
    if (s - 1.0).norm() < POLE_RADIUS {
        return Err(Error::Pole(format!(
            "hurwitz_zeta: s = {s} is within {POLE_RADIUS:e} of the pole at 1"
        )));
    }
    Ok(hurwitz_zeta_unchecked(s, a, params))
}

pub(crate) fn hurwitz_zeta_unchecked(s: Complex, a: f64, params: &HurwitzParams) -> Complex {
    let n = params
        .truncation_n
        .max((2.0 * s.im.abs()).ceil() as usize);

    let mut head = KahanSum::default();
    for m in 0..n {
        head.add(cpow(m as f64 + a, -s));
    }

    let w = n as f64 + a;
    let w_pow_neg_s = cpow(w, -s);
    let mut total = head.value() + w_pow_neg_s * w / (s - 1.0) + 0.5 * w_pow_neg_s;

    // Euler–Maclaurin tail: sum_k B_{2k}/(2k)! * s(s+1)..(s+2k-2) * w^{-s-2k+1}
    let mut rising = s;
    let mut w_pow = w_pow_neg_s / w;
    let w2 = w * w;
    for k in 1..=params.em_correction_terms {
        let term = BERNOULLI_OVER_FACTORIAL[k - 1] * rising * w_pow;
        total += term;
        if term.norm() < params.target_tol {
            break;
        }
        rising = rising * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        w_pow /= w2;
    }
    total
}

/// Closed-form Fourier coefficient of a -> zeta(s, a) for Re s < 1:
/// zero at k = 0, Gamma(1-s) (2 pi i k)^{s-1} otherwise.
pub fn hurwitz_fourier_coeff(s: Complex, k: i64) -> Result<Complex> {
    ensure_finite(s, "s")?;
    if s.re >= 1.0 {
        return Err(Error::Domain(format!(
            "hurwitz_fourier_coeff: requires Re s < 1, got {}",
            s.re
        )));
    }
    if k == 0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    // Re(1-s) > 0, so Gamma(1-s) has no pole here.
    let gamma = log_gamma(Complex::new(1.0, 0.0) - s)?;
    let gamma = LogScaled::from_log_polar(gamma.re, gamma.im);
    Ok((gamma * signed_power_2pi_ik_log(k, s)?).to_complex())
}
