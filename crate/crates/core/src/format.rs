//! Fixed-width numeric formatting shared by the CSV/JSON exporters.

/// Formats with 12 significant digits in scientific notation; the token is
/// valid in both CSV and JSON. Negative zero is normalized away so that
/// exports are byte-stable functions of the value.
pub fn sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

/// Output encodings for tabular exports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.25), "2.50000000000e-1");
        assert_eq!(sig12(-1.0 / 3.0), "-3.33333333333e-1");
        assert_eq!(sig12(0.0), "0.00000000000e0");
        assert_eq!(sig12(-0.0), "0.00000000000e0");
    }
}
