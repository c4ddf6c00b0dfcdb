//! Cesàro means of F_{s_n} over zero ordinates: the averaged signal on the
//! midpoint grid, per-mode averages, and the tabular export behind the
//! headline convergence figure.

use std::io::Write;

use crate::error::{Error, Result};
use crate::format::{sig12, ExportFormat};
use crate::par::map_indexed;
use crate::periodized::{f_eval, f_eval_grid, midpoint_node, EvalPolicy};
use crate::special::{cos_pi, cpow, sin_pi};
use crate::sum::KahanSum;
use crate::zeros::ZeroTable;
use crate::Complex;

/// Complex samples of a periodic function on the midpoint grid of (0, 1).
#[derive(Clone, Debug, PartialEq)]
pub struct SampledSignal {
    grid_size: usize,
    values: Vec<Complex>,
}

impl SampledSignal {
    pub const MIN_GRID: usize = 8;

    pub fn new(values: Vec<Complex>) -> Result<Self> {
        if values.len() < Self::MIN_GRID {
            return Err(Error::Domain(format!(
                "sampled signal needs at least {} grid points, got {}",
                Self::MIN_GRID,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite sample {v}")));
        }
        Ok(SampledSignal {
            grid_size: values.len(),
            values,
        })
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn values(&self) -> &[Complex] {
        &self.values
    }

    /// Grid node for the j-th sample (0-based).
    pub fn node(&self, j: usize) -> f64 {
        midpoint_node(j, self.grid_size)
    }
}

/// Midpoint-quadrature Fourier coefficient of a sampled signal.
pub fn signal_fourier_coeff(signal: &SampledSignal, k: i64) -> Complex {
    let j = signal.grid_size as i64;
    let mut acc = KahanSum::default();
    for (idx, v) in signal.values.iter().enumerate() {
        let m = (k * (2 * idx as i64 + 1)).rem_euclid(2 * j);
        let theta = -std::f64::consts::PI * m as f64 / j as f64;
        acc.add(v * Complex::new(theta.cos(), theta.sin()));
    }
    acc.value() / signal.grid_size as f64
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma > 0.0 && sigma.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("sigma must be positive, got {sigma}")))
    }
}

fn check_zero_range(table: &ZeroTable, first: usize, last: usize) -> Result<()> {
    if first == 0 || first > last {
        return Err(Error::Range(format!(
            "invalid zero range {first}..={last}"
        )));
    }
    if last > table.len() {
        return Err(Error::Range(format!(
            "zero range {first}..={last} exceeds table of length {}",
            table.len()
        )));
    }
    Ok(())
}

/// Pointwise mean of F_{1/2 + i t_n}(a_j) over a 1-based inclusive range
/// of zero indices; the reduction order is fixed by the range.
fn cesaro_values(
    table: &ZeroTable,
    first: usize,
    last: usize,
    sigma: f64,
    grid_size: usize,
    policy: &EvalPolicy,
) -> Result<Vec<Complex>> {
    check_sigma(sigma)?;
    check_zero_range(table, first, last)?;
    policy.validate()?;
    if grid_size == 0 {
        return Err(Error::Domain("grid_size must be positive".into()));
    }
    let mut acc = vec![KahanSum::default(); grid_size];
    for n in first..=last {
        let s = Complex::new(sigma, table.ordinate(n)?);
        let samples = f_eval_grid(s, grid_size, policy)?;
        for (slot, v) in acc.iter_mut().zip(samples) {
            slot.add(v);
        }
    }
    let count = (last - first + 1) as f64;
    Ok(acc.into_iter().map(|k| k.value() / count).collect())
}

/// Cesàro mean over the first `n_zeros` zeros, sampled on the midpoint grid.
pub fn cesaro_average(
    table: &ZeroTable,
    n_zeros: usize,
    sigma: f64,
    grid_size: usize,
    policy: &EvalPolicy,
) -> Result<SampledSignal> {
    SampledSignal::new(cesaro_values(table, 1, n_zeros, sigma, grid_size, policy)?)
}

/// Mean over an arbitrary 1-based inclusive index range, for prefix
/// decompositions and convergence studies.
pub fn cesaro_average_range(
    table: &ZeroTable,
    first: usize,
    last: usize,
    sigma: f64,
    grid_size: usize,
    policy: &EvalPolicy,
) -> Result<SampledSignal> {
    SampledSignal::new(cesaro_values(table, first, last, sigma, grid_size, policy)?)
}

/// Cesàro mean at a single point a.
pub fn cesaro_average_at(
    table: &ZeroTable,
    n_zeros: usize,
    sigma: f64,
    a: f64,
    policy: &EvalPolicy,
) -> Result<Complex> {
    check_sigma(sigma)?;
    check_zero_range(table, 1, n_zeros)?;
    let values = map_indexed(n_zeros, |i| {
        f_eval(Complex::new(sigma, table.ordinates()[i]), a, policy)
    });
    let mut acc = KahanSum::default();
    for v in values {
        acc.add(v?);
    }
    Ok(acc.value() / n_zeros as f64)
}

/// Mean of the k-th Fourier coefficient over the first `n_zeros` zeros:
/// (1/N) sum_n k^{-sigma - i t_n}. Needs no function sampling.
pub fn mode_average(table: &ZeroTable, n_zeros: usize, sigma: f64, k: i64) -> Result<Complex> {
    check_sigma(sigma)?;
    check_zero_range(table, 1, n_zeros)?;
    if k < 1 {
        return Err(Error::Domain(format!("mode index must be >= 1, got {k}")));
    }
    let mut acc = KahanSum::default();
    for n in 1..=n_zeros {
        let s = Complex::new(sigma, table.ordinate(n)?);
        acc.add(cpow(k as f64, -s));
    }
    Ok(acc.value() / n_zeros as f64)
}

/// Writes the averaged signal next to the first harmonic:
/// rows (a, Re avg, Im avg, cos 2 pi a, sin 2 pi a).
///
/// The grid here may be arbitrarily small (down to a single row); the
/// `SampledSignal` minimum applies only to signals meant for further
/// processing.
pub fn fig1_export(
    table: &ZeroTable,
    n_zeros: usize,
    sigma: f64,
    grid_size: usize,
    policy: &EvalPolicy,
    mut out: impl Write,
    format: ExportFormat,
) -> Result<()> {
    let values = cesaro_values(table, 1, n_zeros, sigma, grid_size, policy)?;
    write_fig1_rows(&values, grid_size, &mut out, format)
}

fn write_fig1_rows(
    values: &[Complex],
    grid_size: usize,
    out: &mut impl Write,
    format: ExportFormat,
) -> Result<()> {
    match format {
        ExportFormat::Csv => {
            writeln!(out, "a,re_avg,im_avg,cos,sin")?;
            for (j, v) in values.iter().enumerate() {
                let a = midpoint_node(j, grid_size);
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    sig12(a),
                    sig12(v.re),
                    sig12(v.im),
                    sig12(cos_pi(2.0 * a)),
                    sig12(sin_pi(2.0 * a))
                )?;
            }
        }
        ExportFormat::Json => {
            writeln!(out, "[")?;
            for (j, v) in values.iter().enumerate() {
                let a = midpoint_node(j, grid_size);
                let sep = if j + 1 == values.len() { "" } else { "," };
                writeln!(
                    out,
                    "  {{\"a\": {}, \"re_avg\": {}, \"im_avg\": {}, \"cos\": {}, \"sin\": {}}}{}",
                    sig12(a),
                    sig12(v.re),
                    sig12(v.im),
                    sig12(cos_pi(2.0 * a)),
                    sig12(sin_pi(2.0 * a)),
                    sep
                )?;
            }
            writeln!(out, "]")?;
        }
    }
    Ok(())
}
