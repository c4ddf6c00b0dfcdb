//! The periodized zeta function F_s(a) = sum_{k>=1} e^{2 pi i k a} k^{-s}.
//!
//! Two evaluation paths cover the plane: the defining Dirichlet series
//! where it converges comfortably (Re s >= `direct_series_sigma_min`),
//! and the Hurwitz-formula continuation
//!
//! ```text
//! F_s(a) = i (2 pi)^{s-1} e^{-i pi s / 2} Gamma(1-s)
//!          { zeta(1-s, a) - e^{i pi s} zeta(1-s, 1-a) }
//! ```
//!
//! elsewhere. The prefactor is assembled in log-scaled form: at s = 1/2 + it
//! the factors e^{pi t / 2} and |Gamma(1-s)| ~ e^{-pi t / 2} individually
//! overflow/underflow `f64` near t ~ 1400 while their product stays O(1).
//! The e^{i pi s} term has magnitude e^{-pi t} and is dropped once that
//! exponent falls below the configured threshold.
//!
//! All sampling uses the midpoint grid a_j = (j - 1/2)/J, which avoids the
//! a -> 0 singularity and the a = 1 endpoint.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_zeta_unchecked, HurwitzParams};
use crate::par::map_indexed;
use crate::special::{complex_pow, cpow, ensure_finite, log_gamma, LogScaled, POLE_RADIUS};
use crate::sum::KahanSum;
use crate::Complex;

const TAU: f64 = 2.0 * PI;

/// Tolerances, truncation lengths, and cutoffs governing every evaluator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalPolicy {
    /// Dispatch boundary: at or above this Re s the direct series is used.
    pub direct_series_sigma_min: f64,
    /// Series length for the direct path.
    pub direct_terms: usize,
    /// The e^{i pi s} term of the Hurwitz formula is dropped when
    /// -pi Im s falls below this exponent (default -690, the f64
    /// underflow margin).
    pub negligible_exp_threshold: f64,
    /// Knobs for the Hurwitz-zeta evaluations on the continuation path.
    pub hurwitz_params: HurwitzParams,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        EvalPolicy {
            direct_series_sigma_min: 1.25,
            direct_terms: 1_000_000,
            negligible_exp_threshold: -690.0,
            hurwitz_params: HurwitzParams::default(),
        }
    }
}

impl EvalPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.direct_series_sigma_min > 1.0) {
            return Err(Error::Domain(format!(
                "direct_series_sigma_min must exceed 1, got {}",
                self.direct_series_sigma_min
            )));
        }
        if self.direct_terms < 1000 {
            return Err(Error::Domain(format!(
                "direct_terms must be >= 1000, got {}",
                self.direct_terms
            )));
        }
        if !(self.negligible_exp_threshold < 0.0) {
            return Err(Error::Domain(
                "negligible_exp_threshold must be negative".into(),
            ));
        }
        self.hurwitz_params.validate()
    }
}

/// Midpoint node a_j = (j + 1/2)/J for 0-based j.
#[inline]
pub fn midpoint_node(j: usize, grid_size: usize) -> f64 {
    (j as f64 + 0.5) / grid_size as f64
}

#[inline]
fn cis(theta: f64) -> Complex {
    Complex::new(theta.cos(), theta.sin())
}

fn check_a_open(a: f64) -> Result<()> {
    if a > 0.0 && a < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("a must lie in (0, 1), got {a}")))
    }
}

/// Direct Dirichlet-series evaluation; requires Re s > 1, a in (0, 1].
///
/// Returns the `direct_terms`-term partial sum. The absolute tail is
/// below [`f_direct_tail_bound`]; away from the endpoints the oscillatory
/// tail is smaller still, roughly M^{-sigma} / |sin pi a|.
pub fn f_direct(s: Complex, a: f64, policy: &EvalPolicy) -> Result<Complex> {
    policy.validate()?;
    ensure_finite(s, "s")?;
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!(
            "f_direct: requires Re s > 1, got {}",
            s.re
        )));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "f_direct: a must lie in (0, 1], got {a}"
        )));
    }
    let mut acc = KahanSum::default();
    for k in 1..=policy.direct_terms {
        let phase = TAU * (k as f64 * a).fract();
        acc.add(cpow(k as f64, -s) * cis(phase));
    }
    Ok(acc.value())
}

/// Integral bound on the tail dropped by [`f_direct`]:
/// sum_{k > M} k^{-sigma} <= M^{1-sigma} / (sigma - 1).
pub fn f_direct_tail_bound(s: Complex, policy: &EvalPolicy) -> f64 {
    let m = policy.direct_terms as f64;
    m.powf(1.0 - s.re) / (s.re - 1.0)
}

/// Hurwitz-formula evaluation, valid for any s (except the pole at 1 and
/// the Gamma(1-s) poles at integer s >= 2) and a strictly inside (0, 1).
pub fn f_hurwitz(s: Complex, a: f64, policy: &EvalPolicy) -> Result<Complex> {
    policy.validate()?;
    ensure_finite(s, "s")?;
    check_a_open(a)?;
    if (s - 1.0).norm() < POLE_RADIUS {
        return Err(Error::Pole(format!(
            "f_hurwitz: s = {s} is within {POLE_RADIUS:e} of the pole at 1"
        )));
    }
    let one_minus_s = Complex::new(1.0, 0.0) - s;
    // Integer s >= 2 lands on a Gamma pole (the formula's singularity there
    // is removable but not evaluable); log_gamma reports it.
    let gamma = log_gamma(one_minus_s).map_err(|e| match e {
        Error::Pole(_) => Error::Pole(format!(
            "f_hurwitz: Gamma(1-s) pole at s = {s}; use the direct series for integer Re s > 1"
        )),
        other => other,
    })?;

    let z1 = hurwitz_zeta_unchecked(one_minus_s, a, &policy.hurwitz_params);

    // i * (2 pi)^{s-1} * e^{-i pi s/2} * Gamma(1-s), in log-polar form
    let prefactor = LogScaled::from_log_polar(
        (s.re - 1.0) * TAU.ln() + 0.5 * PI * s.im + gamma.re,
        0.5 * PI + s.im * TAU.ln() - 0.5 * PI * s.re + gamma.im,
    );

    let first = (prefactor * LogScaled::from_complex(z1)).to_complex();
    if PI * s.im > -policy.negligible_exp_threshold {
        // |e^{i pi s}| = e^{-pi t} is below the underflow margin.
        return Ok(first);
    }
    let z2 = hurwitz_zeta_unchecked(one_minus_s, 1.0 - a, &policy.hurwitz_params);
    let oscillation = LogScaled::from_log_polar(-PI * s.im, PI * s.re); // e^{i pi s}
    let second = (prefactor * oscillation * LogScaled::from_complex(z2)).to_complex();
    Ok(first - second)
}

/// F_s(a) with automatic path dispatch on Re s.
pub fn f_eval(s: Complex, a: f64, policy: &EvalPolicy) -> Result<Complex> {
    policy.validate()?;
    ensure_finite(s, "s")?;
    if s.re >= policy.direct_series_sigma_min {
        f_direct(s, a, policy)
    } else {
        f_hurwitz(s, a, policy)
    }
}

/// F_s sampled on the midpoint grid, dispatching like [`f_eval`].
///
/// On the direct path the series is accumulated into residue classes
/// mod 2J first (e^{2 pi i k a_j} depends only on k mod 2J), which turns
/// J x M work into M + J x 2J. Output order is fixed by the grid.
pub fn f_eval_grid(s: Complex, grid_size: usize, policy: &EvalPolicy) -> Result<Vec<Complex>> {
    policy.validate()?;
    ensure_finite(s, "s")?;
    if grid_size == 0 {
        return Err(Error::Domain("grid_size must be positive".into()));
    }
    if s.re >= policy.direct_series_sigma_min {
        if policy.direct_terms >= 4 * grid_size {
            return Ok(f_direct_grid_bucketed(s, grid_size, policy));
        }
        return (0..grid_size)
            .map(|j| f_direct(s, midpoint_node(j, grid_size), policy))
            .collect();
    }
    let results = map_indexed(grid_size, |j| {
        f_hurwitz(s, midpoint_node(j, grid_size), policy)
    });
    results.into_iter().collect()
}

fn f_direct_grid_bucketed(s: Complex, grid_size: usize, policy: &EvalPolicy) -> Vec<Complex> {
    let l = 2 * grid_size;
    let mut buckets = vec![KahanSum::default(); l];
    for k in 1..=policy.direct_terms {
        buckets[k % l].add(cpow(k as f64, -s));
    }
    let coeffs: Vec<Complex> = buckets.iter().map(|b| b.value()).collect();

    map_indexed(grid_size, |j| {
        // omega = e^{2 pi i a_j} = e^{i pi (2j+1)/J}; resync the running
        // power periodically to cap multiplicative drift.
        let m = 2 * j + 1;
        let omega = cis(PI * m as f64 / grid_size as f64);
        let mut acc = KahanSum::default();
        let mut power = Complex::new(1.0, 0.0);
        for (r, c) in coeffs.iter().enumerate() {
            if r > 0 {
                if r % 256 == 0 {
                    let red = (m as u64 * r as u64) % (2 * grid_size as u64);
                    power = cis(PI * red as f64 / grid_size as f64);
                } else {
                    power *= omega;
                }
            }
            acc.add(c * power);
        }
        acc.value()
    })
}

/// Closed-form Fourier coefficient of F_s: k^{-s} for k >= 1 and zero for
/// k <= 0, valid for Re s > 0.
pub fn f_fourier_coeff(s: Complex, k: i64) -> Result<Complex> {
    ensure_finite(s, "s")?;
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!(
            "f_fourier_coeff: requires Re s > 0 (the closed form fails for Re s < 0), got {}",
            s.re
        )));
    }
    if k <= 0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    complex_pow(k as f64, -s)
}

fn check_quadrature_grid(grid_size: usize) -> Result<()> {
    if grid_size < 4096 || !grid_size.is_power_of_two() {
        return Err(Error::Domain(format!(
            "quadrature grid must be a power of two >= 4096, got {grid_size}"
        )));
    }
    Ok(())
}

/// Midpoint-quadrature estimate of the k-th Fourier coefficient of F_s.
///
/// The midpoint placement keeps the nodes away from the a -> 0 edge where
/// F_s is merely L_p-integrable. On a power-of-two grid the quadrature
/// phases reduce exactly.
pub fn f_fourier_coeff_numeric(
    s: Complex,
    k: i64,
    grid_size: usize,
    policy: &EvalPolicy,
) -> Result<Complex> {
    ensure_finite(s, "s")?;
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!(
            "f_fourier_coeff_numeric: requires Re s > 0, got {}",
            s.re
        )));
    }
    check_quadrature_grid(grid_size)?;
    let samples = f_eval_grid(s, grid_size, policy)?;
    Ok(quadrature_mode(&samples, k, grid_size))
}

fn quadrature_mode(samples: &[Complex], k: i64, grid_size: usize) -> Complex {
    let two_j = 2 * grid_size as i64;
    let mut acc = KahanSum::default();
    for (j, v) in samples.iter().enumerate() {
        // e^{-2 pi i k a_j}: the angle is -pi (k (2j+1) mod 2J) / J
        let m = (k * (2 * j as i64 + 1)).rem_euclid(two_j);
        acc.add(v * cis(-PI * m as f64 / grid_size as f64));
    }
    acc.value() / grid_size as f64
}

/// Closed-form versus quadrature coefficients for a list of modes,
/// sharing one grid evaluation of F_s.
pub fn fourier_coeff_table(
    s: Complex,
    ks: &[i64],
    grid_size: usize,
    policy: &EvalPolicy,
) -> Result<Vec<(i64, Complex, Complex)>> {
    ensure_finite(s, "s")?;
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!(
            "fourier_coeff_table: requires Re s > 0, got {}",
            s.re
        )));
    }
    check_quadrature_grid(grid_size)?;
    let samples = f_eval_grid(s, grid_size, policy)?;
    ks.iter()
        .map(|&k| {
            let closed = f_fourier_coeff(s, k)?;
            Ok((k, closed, quadrature_mode(&samples, k, grid_size)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn policy() -> EvalPolicy {
        EvalPolicy::default()
    }

    #[test]
    fn direct_reduces_to_zeta_at_a_one() {
        let v = f_direct(c(2.0, 0.0), 1.0, &policy()).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 2e-6, "{v}");
        assert!(v.im.abs() < 1e-9);
    }

    #[test]
    fn direct_alternating_value() {
        // F_2(1/2) = sum (-1)^k / k^2 = -pi^2/12; alternating tails cancel
        // far below the generic integral bound.
        let v = f_direct(c(2.0, 0.0), 0.5, &policy()).unwrap();
        assert!((v.re + PI * PI / 12.0).abs() < 1e-8, "{v}");
        assert!(v.im.abs() < 1e-8);
    }

    #[test]
    fn direct_matches_deep_partial_sum() {
        // Oracle: 10^8-term direct summation at a = 1/4 (the phases cycle
        // through i^k), pinned against an independent 30-digit value.
        let mut acc = KahanSum::default();
        for k in 1..=100_000_000usize {
            let kf = k as f64;
            let p = 1.0 / (kf * kf * kf);
            let term = match k % 4 {
                1 => Complex::new(0.0, p),
                2 => Complex::new(-p, 0.0),
                3 => Complex::new(0.0, -p),
                _ => Complex::new(p, 0.0),
            };
            acc.add(term);
        }
        let brute = acc.value();
        let frozen = c(-0.11269283467121196, 0.96894614625936938);
        assert!((brute - frozen).norm() < 1e-12, "oracle drift: {brute}");

        let v = f_direct(c(3.0, 0.0), 0.25, &policy()).unwrap();
        assert!((v - frozen).norm() < 1e-10, "{v}");
    }

    #[test]
    fn direct_domain_errors() {
        assert!(matches!(
            f_direct(c(1.0, 5.0), 0.3, &policy()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_direct(c(0.99, 0.0), 0.3, &policy()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_direct(c(2.0, 0.0), 0.0, &policy()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_direct(c(2.0, 0.0), 1.5, &policy()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn hurwitz_path_reference_points() {
        // mpmath z * lerchphi(z, s, 1), z = e^{2 pi i a}, at 30 digits.
        let cases = [
            (
                c(0.5, 14.134725142),
                0.25,
                c(-1.2037127751103463, 1.8754600398051618),
            ),
            (
                c(0.75, 20.0),
                0.7,
                c(-1.1328238839772159, -0.38080946298031985),
            ),
            (
                c(0.5, 30.0),
                0.7,
                c(0.62303533646057799, -1.9868997445273255),
            ),
            (
                c(2.0, 0.01),
                0.3,
                c(-0.42881886968275316, 0.78535273738151585),
            ),
            (
                c(1.5, 0.0),
                0.9,
                c(0.66654836583564484, -1.0704071002132261),
            ),
        ];
        for (s, a, want) in cases {
            let got = f_hurwitz(s, a, &policy()).unwrap();
            assert!(
                (got - want).norm() < 1e-9,
                "F({s}, {a}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn hurwitz_vanishes_at_half_on_a_zero() {
        // F_s(1/2) is minus the alternating zeta, which vanishes at the
        // nontrivial zeros; the 9-decimal ordinate keeps it below 1e-8.
        let v = f_hurwitz(c(0.5, 14.134725142), 0.5, &policy()).unwrap();
        assert!(v.norm() < 1e-8, "{v}");
    }

    #[test]
    fn hurwitz_errors() {
        assert!(matches!(
            f_hurwitz(c(0.5, 14.0), 0.0, &policy()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_hurwitz(c(0.5, 14.0), 1.0, &policy()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_hurwitz(c(1.0, 0.0), 0.3, &policy()),
            Err(Error::Pole(_))
        ));
        // Gamma(1-s) pole at integer s >= 2: surfaced, not silently wrong.
        assert!(matches!(
            f_hurwitz(c(2.0, 0.0), 0.3, &policy()),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn path_consistency_near_two() {
        let s = c(2.0, 0.01);
        let a = 0.3;
        let d = f_direct(s, a, &policy()).unwrap();
        let h = f_hurwitz(s, a, &policy()).unwrap();
        assert!((d - h).norm() < 1e-8, "{d} vs {h}");
    }

    #[test]
    fn path_consistency_in_overlap() {
        let s = c(1.5, 0.0);
        let a = 0.9;
        let d = f_direct(s, a, &policy()).unwrap();
        let h = f_hurwitz(s, a, &policy()).unwrap();
        assert!((d - h).norm() < 1e-7, "{d} vs {h}");
    }

    #[test]
    fn eval_dispatch_rules() {
        let p = policy();
        let s = c(3.0, 0.0);
        assert_eq!(f_eval(s, 0.7, &p).unwrap(), f_direct(s, 0.7, &p).unwrap());
        let s = c(0.5, 30.0);
        assert_eq!(f_eval(s, 0.7, &p).unwrap(), f_hurwitz(s, 0.7, &p).unwrap());
        // a = 1 reaches the direct path but not the continuation path.
        assert!(f_eval(c(2.0, 0.0), 1.0, &p).is_ok());
        assert!(matches!(f_eval(c(0.5, 14.0), 1.0, &p), Err(Error::Domain(_))));
        assert!(matches!(f_eval(c(0.5, 14.0), 0.0, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn grid_matches_pointwise_on_both_paths() {
        let p = policy();
        for s in [c(1.5, 3.0), c(0.6, 12.0)] {
            let grid = f_eval_grid(s, 16, &p).unwrap();
            for (j, &g) in grid.iter().enumerate() {
                let v = f_eval(s, midpoint_node(j, 16), &p).unwrap();
                assert!(
                    (g - v).norm() < 1e-9 * (1.0 + v.norm()),
                    "s={s} j={j}: {g} vs {v}"
                );
            }
        }
    }

    #[test]
    fn coeff_closed_form() {
        assert_eq!(
            f_fourier_coeff(c(0.6, 25.0), 1).unwrap(),
            Complex::new(1.0, 0.0)
        );
        assert_eq!(f_fourier_coeff(c(0.6, 25.0), 0).unwrap(), c(0.0, 0.0));
        assert_eq!(f_fourier_coeff(c(0.6, 25.0), -5).unwrap(), c(0.0, 0.0));
        let v = f_fourier_coeff(c(0.75, 25.0), 4).unwrap();
        assert!((v.norm() - 4.0f64.powf(-0.75)).abs() < 1e-14);
        assert!(matches!(f_fourier_coeff(c(0.0, 5.0), 2), Err(Error::Domain(_))));
        assert!(matches!(
            f_fourier_coeff(c(-0.5, 5.0), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn coeff_numeric_absolutely_convergent_case() {
        let v = f_fourier_coeff_numeric(c(2.0, 0.0), 2, 4096, &policy()).unwrap();
        assert!((v - c(0.25, 0.0)).norm() < 1e-6, "{v}");
    }

    #[test]
    fn coeff_numeric_strip_case() {
        let s = c(0.5, 14.134725142);
        let v = f_fourier_coeff_numeric(s, 1, 4096, &policy()).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-4, "{v}");
    }

    #[test]
    fn coeff_numeric_grid_validation() {
        let p = policy();
        assert!(matches!(
            f_fourier_coeff_numeric(c(2.0, 0.0), 1, 5000, &p),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f_fourier_coeff_numeric(c(2.0, 0.0), 1, 2048, &p),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn semigroup_of_coefficients() {
        // F_s * F_s' = F_{s+s'} in coefficient space: k^{-s} k^{-s'} = k^{-(s+s')}
        let mut state = 0xfeed_face_cafe_beefu64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            let s1 = c(0.1 + 2.0 * rng(), 60.0 * rng() - 30.0);
            let s2 = c(0.1 + 2.0 * rng(), 60.0 * rng() - 30.0);
            let k = 1 + (rng() * 40.0) as i64;
            let lhs = f_fourier_coeff(s1, k).unwrap() * f_fourier_coeff(s2, k).unwrap();
            let rhs = f_fourier_coeff(s1 + s2, k).unwrap();
            assert!(
                (lhs - rhs).norm() <= 1e-12 * rhs.norm(),
                "k={k} s1={s1} s2={s2}"
            );
        }
    }

    #[test]
    fn conjugation_symmetry() {
        // f_eval(conj s, a) = conj(f_eval(s, 1-a)), termwise from the series.
        let p = policy();
        for (s, a) in [
            (c(0.5, 21.0), 0.3),
            (c(0.75, 14.0), 0.62),
            (c(1.5, 3.0), 0.25),
            (c(2.5, -8.0), 0.8),
        ] {
            let lhs = f_eval(s.conj(), a, &p).unwrap();
            let rhs = f_eval(s, 1.0 - a, &p).unwrap().conj();
            assert!(
                (lhs - rhs).norm() < 1e-8 * (1.0 + rhs.norm()),
                "s={s} a={a}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn value_at_half_is_minus_alternating_zeta() {
        // F_s(1/2) = (2^{1-s} - 1) zeta(s), checked against the
        // alternating-series reference evaluator.
        let p = policy();
        for s in [c(0.3, 7.0), c(0.5, 21.0), c(0.9, 44.0), c(1.1, -13.0)] {
            let lhs = f_eval(s, 0.5, &p).unwrap();
            let zeta = crate::reference::zeta_alternating(s);
            let rhs = (complex_pow(2.0, Complex::new(1.0, 0.0) - s).unwrap() - 1.0) * zeta;
            assert!((lhs - rhs).norm() < 1e-6, "s={s}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn policy_validation() {
        let mut p = policy();
        p.direct_series_sigma_min = 1.0;
        assert!(p.validate().is_err());
        let mut p = policy();
        p.direct_terms = 100;
        assert!(p.validate().is_err());
        let mut p = policy();
        p.negligible_exp_threshold = 1.0;
        assert!(p.validate().is_err());
        assert!(policy().validate().is_ok());
    }
}
