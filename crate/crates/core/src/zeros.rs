//! Validated tables of nontrivial-zero ordinates t_n and the zero-counting
//! function.
//!
//! Tables store ordinates only; the corresponding zeros are materialized
//! as s_n = 1/2 + i t_n throughout (the averaging experiments and the
//! Fujii bound are stated under that hypothesis, so no off-line
//! configuration is offered).

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::Complex;

/// First ordinate, to the accuracy used by the ingest sanity check.
const FIRST_ORDINATE: f64 = 14.1347;
const FIRST_ORDINATE_TOL: f64 = 1e-3;

/// An ascending table of zero ordinates 0 < t_1 <= t_2 <= ...
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source_label: String,
}

impl ZeroTable {
    /// Validates and wraps a list of ordinates.
    pub fn from_ordinates(ordinates: Vec<f64>, source_label: impl Into<String>) -> Result<Self> {
        let lines: Vec<(usize, f64)> = ordinates.iter().copied().enumerate()
            .map(|(i, t)| (i + 1, t))
            .collect();
        Self::validate(&lines)?;
        Ok(ZeroTable {
            ordinates,
            source_label: source_label.into(),
        })
    }

    /// Loads a plain-text table: one decimal ordinate per line, ascending;
    /// blank lines and `#` comments are ignored.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path)?;
        Self::read(BufReader::new(file), path.display().to_string())
    }

    /// Parses a table from any reader; `source_label` records provenance.
    pub fn read(reader: impl Read, source_label: impl Into<String>) -> Result<Self> {
        let mut parsed: Vec<(usize, f64)> = Vec::new();
        for (idx, line) in BufReader::new(reader).lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let t: f64 = trimmed.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("not a decimal ordinate: {trimmed:?}"),
            })?;
            parsed.push((line_no, t));
        }
        Self::validate(&parsed)?;
        Ok(ZeroTable {
            ordinates: parsed.into_iter().map(|(_, t)| t).collect(),
            source_label: source_label.into(),
        })
    }

    fn validate(lines: &[(usize, f64)]) -> Result<()> {
        if lines.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty table".into(),
            });
        }
        for &(line, t) in lines {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::Range(format!(
                    "ordinate at line {line} must be positive and finite, got {t}"
                )));
            }
        }
        for pair in lines.windows(2) {
            if pair[1].1 < pair[0].1 {
                return Err(Error::Order {
                    line: pair[1].0,
                    message: format!("{} after {}", pair[1].1, pair[0].1),
                });
            }
        }
        let t1 = lines[0].1;
        if (t1 - FIRST_ORDINATE).abs() > FIRST_ORDINATE_TOL {
            return Err(Error::Range(format!(
                "first ordinate {t1} is not within {FIRST_ORDINATE_TOL} of {FIRST_ORDINATE}; \
                 the table must start at the first zero"
            )));
        }
        Ok(())
    }

    /// Writes the table in the same text format, one ordinate per line,
    /// using the shortest representation that round-trips bit-for-bit.
    pub fn write(&self, mut w: impl Write) -> Result<()> {
        writeln!(w, "# {}", self.source_label)?;
        for t in &self.ordinates {
            writeln!(w, "{t}")?;
        }
        Ok(())
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// t_n, 1-based.
    pub fn ordinate(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.ordinates.len() {
            return Err(Error::Range(format!(
                "zero index {n} outside table of length {}",
                self.ordinates.len()
            )));
        }
        Ok(self.ordinates[n - 1])
    }

    /// s_n = 1/2 + i t_n, 1-based.
    pub fn zero(&self, n: usize) -> Result<Complex> {
        Ok(Complex::new(0.5, self.ordinate(n)?))
    }

    /// #{n : t_n <= t_max}. The table must cover t_max.
    pub fn count_up_to(&self, t_max: f64) -> Result<usize> {
        if !(t_max > 0.0) {
            return Err(Error::Domain(format!("t_max must be positive, got {t_max}")));
        }
        let last = *self.ordinates.last().expect("table is nonempty");
        if t_max > last {
            return Err(Error::Range(format!(
                "t_max = {t_max} exceeds table coverage (largest ordinate {last})"
            )));
        }
        Ok(self.ordinates.partition_point(|&t| t <= t_max))
    }
}

/// Leading term of the zero-counting asymptotics:
/// (T / 2 pi) log(T / (2 pi e)), valid for T > 2 pi e.
pub fn n_asymptotic(t_max: f64) -> Result<f64> {
    let two_pi_e = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    if !(t_max > two_pi_e) {
        return Err(Error::Domain(format!(
            "n_asymptotic: requires T > 2 pi e ~ {two_pi_e:.4}, got {t_max}"
        )));
    }
    Ok(t_max / (2.0 * std::f64::consts::PI) * (t_max / two_pi_e).ln())
}
