//! Broadband encryption of band-limited periodic signals.
//!
//! Encrypting replaces each harmonic e^{2 pi i m a} with the dilated
//! waveform F_{sigma + i t_n}(m a). Because the dilated waveform carries
//! coefficient k^{-s} at index m k and nothing elsewhere, the whole
//! operation is a Dirichlet convolution in coefficient space:
//!
//! ```text
//! c(j) = sum_{m | j, m <= M, j/m <= K} f(m) (j/m)^{-s}      (j > 0)
//! ```
//!
//! mirrored with conjugated exponents on the negative side so that real
//! signals stay real. Working spectrally avoids sampling F_s near its
//! a -> 0 singularity at dilated arguments; spatial synthesis is provided
//! for exporting waveforms only.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::par::map_indexed;
use crate::periodized::midpoint_node;
use crate::special::cpow;
use crate::sum::KahanSum;
use crate::zeros::ZeroTable;
use crate::Complex;

/// Residual tolerance for [`decrypt_exact`]: coefficients that the
/// recovered band cannot explain must stay below this.
pub const DECRYPT_RESIDUAL_TOL: f64 = 1e-8;

/// A finite two-sided set of Fourier coefficients with zero mean
/// (no coefficient at index 0).
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    band_limit: usize,
    coeffs: BTreeMap<i64, Complex>,
}

impl Spectrum {
    pub fn new(band_limit: usize, coeffs: BTreeMap<i64, Complex>) -> Result<Self> {
        if band_limit < 1 {
            return Err(Error::Domain("band_limit must be >= 1".into()));
        }
        for (&m, v) in &coeffs {
            if m == 0 {
                return Err(Error::Domain(
                    "spectra are zero-mean: index 0 must be absent".into(),
                ));
            }
            if m.unsigned_abs() as usize > band_limit {
                return Err(Error::Domain(format!(
                    "coefficient index {m} outside band [-{band_limit}, {band_limit}]"
                )));
            }
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::Domain(format!("non-finite coefficient at {m}")));
            }
        }
        Ok(Spectrum { band_limit, coeffs })
    }

    /// Builds a spectrum whose band is the largest index present.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex)>) -> Result<Self> {
        let coeffs: BTreeMap<i64, Complex> = pairs.into_iter().collect();
        let band = coeffs
            .keys()
            .map(|m| m.unsigned_abs() as usize)
            .max()
            .ok_or_else(|| Error::Domain("empty spectrum".into()))?;
        Spectrum::new(band, coeffs)
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    /// Coefficient at index m (zero when absent).
    pub fn coeff(&self, m: i64) -> Complex {
        self.coeffs.get(&m).copied().unwrap_or(Complex::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex)> + '_ {
        self.coeffs.iter().map(|(&m, &v)| (m, v))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of coefficient magnitudes (finite by construction).
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.values().map(|v| v.norm()).sum()
    }

    /// Reads rows `m,re,im` (ascending m, `#` comments allowed).
    pub fn read(reader: impl Read) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        let mut last: Option<i64> = None;
        for (idx, line) in BufReader::new(reader).lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = trimmed.split(',');
            let parse_err = |what: &str| Error::Parse {
                line: line_no,
                message: format!("{what} in {trimmed:?}"),
            };
            let m: i64 = fields
                .next()
                .ok_or_else(|| parse_err("missing index"))?
                .trim()
                .parse()
                .map_err(|_| parse_err("bad index"))?;
            let re: f64 = fields
                .next()
                .ok_or_else(|| parse_err("missing re"))?
                .trim()
                .parse()
                .map_err(|_| parse_err("bad re"))?;
            let im: f64 = fields
                .next()
                .ok_or_else(|| parse_err("missing im"))?
                .trim()
                .parse()
                .map_err(|_| parse_err("bad im"))?;
            if fields.next().is_some() {
                return Err(parse_err("too many fields"));
            }
            if let Some(prev) = last {
                if m <= prev {
                    return Err(Error::Order {
                        line: line_no,
                        message: format!("index {m} after {prev}"),
                    });
                }
            }
            last = Some(m);
            coeffs.insert(m, Complex::new(re, im));
        }
        if coeffs.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty spectrum".into(),
            });
        }
        Spectrum::from_pairs(coeffs)
    }

    /// Writes rows `m,re,im` with shortest round-trip floats.
    pub fn write(&self, mut w: impl Write) -> Result<()> {
        for (m, v) in &self.coeffs {
            writeln!(w, "{},{},{}", m, v.re, v.im)?;
        }
        Ok(())
    }
}

/// Key for one broadband encryption: the half-plane abscissa, the index
/// of the zero supplying the ordinate, and the per-mode cutoff.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EncryptionKey {
    pub sigma: f64,
    pub zero_index: usize,
    pub cutoff_k: usize,
}

impl EncryptionKey {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0) || !self.sigma.is_finite() {
            return Err(Error::Domain(format!(
                "key sigma must be positive, got {}",
                self.sigma
            )));
        }
        if self.zero_index < 1 {
            return Err(Error::Domain("key zero_index must be >= 1".into()));
        }
        if self.cutoff_k < 1 {
            return Err(Error::Domain("key cutoff_k must be >= 1".into()));
        }
        Ok(())
    }

    fn exponent(&self, table: &ZeroTable) -> Result<Complex> {
        Ok(Complex::new(self.sigma, table.ordinate(self.zero_index)?))
    }
}

/// Per-coefficient truncation bound: dropping dilation indices beyond K
/// discards at most sum_{k > K} k^{-sigma} of each unit-coefficient mode.
pub fn cutoff_tail_bound(sigma: f64, cutoff_k: usize) -> f64 {
    if sigma > 1.0 {
        (cutoff_k as f64).powf(1.0 - sigma) / (sigma - 1.0)
    } else {
        f64::INFINITY
    }
}

/// Dirichlet-convolution encryption of `f`, truncated at |j| <= M K.
pub fn encrypt_spectrum(f: &Spectrum, key: &EncryptionKey, table: &ZeroTable) -> Result<Spectrum> {
    key.validate()?;
    let s = key.exponent(table)?;
    let s_conj = s.conj();
    let m_band = f.band_limit;
    let k_cut = key.cutoff_k;
    let out_band = m_band
        .checked_mul(k_cut)
        .ok_or_else(|| Error::Domain("encrypted band overflows".into()))?;

    let pos: Vec<(i64, Complex)> = f.iter().filter(|(m, _)| *m > 0).collect();
    let neg: Vec<(i64, Complex)> = f
        .iter()
        .filter(|(m, _)| *m < 0)
        .map(|(m, v)| (-m, v))
        .collect();

    // Divisor scan per output index; the (m, k) product enumeration in
    // `reference::convolve_dilated` is the independent route.
    let side = |support: &[(i64, Complex)], exponent: Complex| -> Vec<(usize, Complex)> {
        let rows = map_indexed(out_band, |idx| {
            let j = (idx + 1) as i64;
            let mut acc = None;
            for &(m, fm) in support {
                if j % m == 0 {
                    let q = (j / m) as usize;
                    if q <= k_cut {
                        let term = fm * cpow(q as f64, -exponent);
                        acc = Some(acc.map_or(term, |a: Complex| a + term));
                    }
                }
            }
            (idx + 1, acc)
        });
        rows.into_iter()
            .filter_map(|(j, v)| v.map(|v| (j, v)))
            .collect()
    };

    let mut coeffs = BTreeMap::new();
    for (j, v) in side(&pos, s) {
        coeffs.insert(j as i64, v);
    }
    for (j, v) in side(&neg, s_conj) {
        coeffs.insert(-(j as i64), v);
    }
    Spectrum::new(out_band, coeffs)
}

/// Exact single-key decryption by ascending triangular inversion.
///
/// The divisor m = j contributes f(j) * 1^{-s} = f(j), so coefficients
/// inside the original band are recovered in ascending order; everything
/// the recovered band cannot explain must vanish to
/// [`DECRYPT_RESIDUAL_TOL`], otherwise the ciphertext is inconsistent
/// with the key.
pub fn decrypt_exact(c: &Spectrum, key: &EncryptionKey, table: &ZeroTable) -> Result<Spectrum> {
    key.validate()?;
    let s = key.exponent(table)?;
    let k_cut = key.cutoff_k;
    if !c.band_limit.is_multiple_of(k_cut) {
        return Err(Error::Inconsistency(format!(
            "encrypted band {} is not a multiple of the cutoff {}",
            c.band_limit, k_cut
        )));
    }
    let m_band = c.band_limit / k_cut;

    let side = |exponent: Complex, sign: i64| -> Result<Vec<(i64, Complex)>> {
        let mut recovered: Vec<(i64, Complex)> = Vec::new();
        for j in 1..=c.band_limit as i64 {
            let mut pred = Complex::new(0.0, 0.0);
            for &(m, fm) in &recovered {
                if j % m == 0 {
                    let q = j / m;
                    if q <= k_cut as i64 && q > 1 {
                        pred += fm * cpow(q as f64, -exponent);
                    }
                }
            }
            let cj = c.coeff(sign * j);
            if j <= m_band as i64 {
                recovered.push((j, cj - pred));
            } else {
                let residual = (cj - pred).norm();
                if residual > DECRYPT_RESIDUAL_TOL {
                    return Err(Error::Inconsistency(format!(
                        "residual {residual:.3e} at index {} exceeds {DECRYPT_RESIDUAL_TOL:e}",
                        sign * j
                    )));
                }
            }
        }
        Ok(recovered)
    };

    let mut coeffs = BTreeMap::new();
    for (j, v) in side(s, 1)? {
        if v != Complex::new(0.0, 0.0) {
            coeffs.insert(j, v);
        }
    }
    for (j, v) in side(s.conj(), -1)? {
        if v != Complex::new(0.0, 0.0) {
            coeffs.insert(-j, v);
        }
    }
    Spectrum::new(m_band, coeffs)
}

fn check_common_keys(encryptions: &[(Spectrum, EncryptionKey)]) -> Result<(usize, usize)> {
    let (first_spec, first_key) = encryptions
        .first()
        .ok_or_else(|| Error::Inconsistency("no encryptions to average".into()))?;
    for (spec, key) in encryptions {
        if key.sigma != first_key.sigma || key.cutoff_k != first_key.cutoff_k {
            return Err(Error::Inconsistency(format!(
                "mismatched keys: sigma {} cutoff {} vs sigma {} cutoff {}",
                key.sigma, key.cutoff_k, first_key.sigma, first_key.cutoff_k
            )));
        }
        if spec.band_limit != first_spec.band_limit {
            return Err(Error::Inconsistency(format!(
                "mismatched encrypted bands: {} vs {}",
                spec.band_limit, first_spec.band_limit
            )));
        }
    }
    if !first_spec.band_limit.is_multiple_of(first_key.cutoff_k) {
        return Err(Error::Inconsistency(format!(
            "encrypted band {} is not a multiple of the cutoff {}",
            first_spec.band_limit, first_key.cutoff_k
        )));
    }
    Ok((
        first_spec.band_limit,
        first_spec.band_limit / first_key.cutoff_k,
    ))
}

fn mean_coefficients(encryptions: &[(Spectrum, EncryptionKey)]) -> BTreeMap<i64, Complex> {
    let mut support: std::collections::BTreeSet<i64> = std::collections::BTreeSet::new();
    for (spec, _) in encryptions {
        support.extend(spec.coeffs.keys());
    }
    let n = encryptions.len() as f64;
    support
        .into_iter()
        .map(|j| {
            let mut acc = KahanSum::default();
            for (spec, _) in encryptions {
                acc.add(spec.coeff(j));
            }
            (j, acc.value() / n)
        })
        .collect()
}

/// Multi-key recovery: coefficient-wise mean of the encryptions,
/// restricted to the original band.
pub fn decrypt_average(encryptions: &[(Spectrum, EncryptionKey)]) -> Result<Spectrum> {
    let (_, m_band) = check_common_keys(encryptions)?;
    let mean = mean_coefficients(encryptions);
    let coeffs: BTreeMap<i64, Complex> = mean
        .into_iter()
        .filter(|(j, _)| j.unsigned_abs() as usize <= m_band)
        .collect();
    Spectrum::new(m_band, coeffs)
}

/// Energy of the averaged encryptions outside the original band:
/// sum_{|j| > M} |mean c(j)|^2. Averaging over more zeros drives it down.
pub fn averaging_leakage(encryptions: &[(Spectrum, EncryptionKey)]) -> Result<f64> {
    let (_, m_band) = check_common_keys(encryptions)?;
    let mean = mean_coefficients(encryptions);
    Ok(mean
        .into_iter()
        .filter(|(j, _)| j.unsigned_abs() as usize > m_band)
        .map(|(_, v)| v.norm_sqr())
        .sum())
}

/// Trigonometric synthesis of a spectrum on the midpoint grid.
pub fn synthesize(spec: &Spectrum, grid_size: usize) -> Result<Vec<Complex>> {
    if grid_size <= 2 * spec.band_limit {
        return Err(Error::Alias(format!(
            "grid of {grid_size} cannot carry band {} (need > {})",
            spec.band_limit,
            2 * spec.band_limit
        )));
    }
    let entries: Vec<(i64, Complex)> = spec.iter().collect();
    Ok(map_indexed(grid_size, |j| {
        let a = midpoint_node(j, grid_size);
        let mut acc = KahanSum::default();
        for &(m, v) in &entries {
            let theta = 2.0 * std::f64::consts::PI * (m as f64 * a);
            acc.add(v * Complex::new(theta.cos(), theta.sin()));
        }
        acc.value()
    }))
}

/// Trigonometric analysis back to a spectrum with the given band limit.
pub fn analyze(samples: &[Complex], band_limit: usize) -> Result<Spectrum> {
    if band_limit < 1 {
        return Err(Error::Domain("band_limit must be >= 1".into()));
    }
    let grid_size = samples.len();
    if grid_size <= 2 * band_limit {
        return Err(Error::Alias(format!(
            "grid of {grid_size} cannot resolve band {band_limit} (need > {})",
            2 * band_limit
        )));
    }
    let modes: Vec<i64> = (-(band_limit as i64)..=band_limit as i64)
        .filter(|&m| m != 0)
        .collect();
    let values = map_indexed(modes.len(), |i| {
        let m = modes[i];
        let mut acc = KahanSum::default();
        for (j, v) in samples.iter().enumerate() {
            let theta = -2.0 * std::f64::consts::PI * (m as f64 * midpoint_node(j, grid_size));
            acc.add(v * Complex::new(theta.cos(), theta.sin()));
        }
        (m, acc.value() / grid_size as f64)
    });
    Spectrum::new(band_limit, values.into_iter().collect())
}
