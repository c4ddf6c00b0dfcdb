//! Explicit sums over zero ordinates: the Landau resonance sum
//! sum_{t_n <= T} x^{-s_n}, its Fujii-normalized form, the von Mangoldt
//! weight that predicts the resonances, and the star discrepancy of
//! (alpha t_n) mod 1.

use crate::error::{Error, Result};
use crate::par::map_indexed;
use crate::sum::KahanSum;
use crate::zeros::ZeroTable;
use crate::Complex;

/// Von Mangoldt function: log p when m = p^k for a prime p, else 0.
pub fn von_mangoldt(m: u64) -> Result<f64> {
    if m < 1 {
        return Err(Error::Domain("von_mangoldt: m must be >= 1".into()));
    }
    if m == 1 {
        return Ok(0.0);
    }
    let p = smallest_prime_factor(m);
    let mut rest = m;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    if rest == 1 {
        Ok((p as f64).ln())
    } else {
        Ok(0.0)
    }
}

fn smallest_prime_factor(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        return 2;
    }
    if m.is_multiple_of(3) {
        return 3;
    }
    let mut d = 5;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return d;
        }
        if m.is_multiple_of(d + 2) {
            return d + 2;
        }
        d += 6;
    }
    m
}

/// Von Mangoldt weight of a real x: nonzero only when x is exactly an
/// integral prime power.
pub fn von_mangoldt_real(x: f64) -> f64 {
    if x < 1.0 || x.fract() != 0.0 || x > (1u64 << 53) as f64 {
        return 0.0;
    }
    von_mangoldt(x as u64).unwrap_or(0.0)
}

/// One row of the resonance experiment.
#[derive(Clone, Copy, Debug)]
pub struct LandauReport {
    pub x: f64,
    pub t_max: f64,
    /// sum_{t_n <= T} x^{-1/2 - i t_n}
    pub sum: Complex,
    /// -(T / 2 pi) Lambda(x) / x, real, embedded in the complex field.
    pub prediction: Complex,
    /// sum / prediction at prime powers; |sum| otherwise.
    pub ratio: Complex,
}

/// The resonance sum sum_{t_n <= T} x^{-s_n} with s_n = 1/2 + i t_n.
pub fn landau_sum(table: &ZeroTable, x: f64, t_max: f64) -> Result<LandauReport> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("landau_sum: x must exceed 1, got {x}")));
    }
    let count = table.count_up_to(t_max)?;
    let sum = phase_sum(table, count, 0.5, x);
    let lambda = von_mangoldt_real(x);
    let prediction = Complex::new(
        -t_max / (2.0 * std::f64::consts::PI) * lambda / x,
        0.0,
    );
    let ratio = if prediction.re != 0.0 {
        sum / prediction
    } else {
        Complex::new(sum.norm(), 0.0)
    };
    Ok(LandauReport {
        x,
        t_max,
        sum,
        prediction,
        ratio,
    })
}

/// sum_{n <= count} x^{-sigma - i t_n}, reduced in index order.
fn phase_sum(table: &ZeroTable, count: usize, sigma: f64, x: f64) -> Complex {
    let lx = x.ln();
    let amp = x.powf(-sigma);
    let terms = map_indexed(count, |i| {
        let theta = -table.ordinates()[i] * lx;
        Complex::new(amp * theta.cos(), amp * theta.sin())
    });
    let mut acc = KahanSum::default();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

/// The quantity the Fujii bound asserts is bounded:
/// |(1/N(T)) sum_{t_n <= T} x^{-sigma - i t_n}| log T / (x^{1/2 - sigma} log x).
pub fn fujii_normalized(table: &ZeroTable, x: f64, sigma: f64, t_max: f64) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "fujii_normalized: x must exceed 1, got {x}"
        )));
    }
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!(
            "fujii_normalized: sigma must be positive, got {sigma}"
        )));
    }
    let count = table.count_up_to(t_max)?;
    if count == 0 {
        return Err(Error::Range(format!(
            "fujii_normalized: no zeros at or below T = {t_max}"
        )));
    }
    let mean = phase_sum(table, count, sigma, x) / count as f64;
    Ok(mean.norm() * t_max.ln() / (x.powf(0.5 - sigma) * x.ln()))
}

/// Star discrepancy D*_N of the fractional parts (alpha t_n) mod 1,
/// n = 1..=N, by the sorted-sample formula.
pub fn discrepancy(table: &ZeroTable, alpha: f64, n: usize) -> Result<f64> {
    if alpha == 0.0 || !alpha.is_finite() {
        return Err(Error::Domain("discrepancy: alpha must be nonzero".into()));
    }
    if n == 0 || n > table.len() {
        return Err(Error::Range(format!(
            "discrepancy: N = {n} outside table of length {}",
            table.len()
        )));
    }
    let mut u: Vec<f64> = table.ordinates()[..n]
        .iter()
        .map(|t| (alpha * t).rem_euclid(1.0))
        .collect();
    u.sort_unstable_by(f64::total_cmp);
    let nf = n as f64;
    let mut d: f64 = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        d = d.max((i as f64 + 1.0) / nf - ui).max(ui - i as f64 / nf);
    }
    Ok(d)
}
