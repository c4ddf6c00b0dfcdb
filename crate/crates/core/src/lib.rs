#![forbid(unsafe_code)]
// Frozen reference values keep every digit they were computed with, and
// the `!(x > 0.0)`-style guards intentionally reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

//! Numerics for the periodized zeta function F_s(a) = sum_k e^{2 pi i k a} k^{-s}
//! and the experiments built on top of it: Cesàro averaging of F over
//! nontrivial-zero ordinates, Fourier-coefficient verification by
//! quadrature, Landau/Fujii explicit sums, equidistribution diagnostics,
//! and broadband encryption of band-limited periodic signals.
//!
//! Module map:
//! - [`special`]: complex log-gamma, branch-resolved powers, log-scaled
//!   products
//! - [`hurwitz`]: Hurwitz zeta with Euler–Maclaurin tail corrections
//! - [`periodized`]: F_s evaluation (direct series / continuation
//!   formula), closed-form and quadrature Fourier coefficients
//! - [`zeros`]: validated ordinate tables and the zero-counting function
//! - [`cesaro`]: averaged signals over zeros, per-mode means, exports
//! - [`landau`]: resonance sums, the Fujii-normalized statistic, star
//!   discrepancy
//! - [`codec`]: spectrum-domain broadband encryption and decryption
//! - [`reference`]: independent oracle evaluators for the test suites
//!
//! Everything is pure and `Send + Sync`-friendly; batch entry points fan
//! out on rayon when the `parallel` feature (default) is enabled, and the
//! fixed reduction order makes outputs identical across thread counts.

pub mod cesaro;
pub mod codec;
pub mod error;
pub mod format;
pub mod hurwitz;
pub mod landau;
mod par;
pub mod periodized;
pub mod reference;
pub mod special;
mod sum;
pub mod zeros;

/// The crate-wide complex scalar (double precision).
pub type Complex = num_complex::Complex64;

pub use cesaro::{
    cesaro_average, cesaro_average_at, cesaro_average_range, fig1_export, mode_average,
    signal_fourier_coeff, SampledSignal,
};
pub use codec::{
    analyze, averaging_leakage, decrypt_average, decrypt_exact, encrypt_spectrum, synthesize,
    EncryptionKey, Spectrum,
};
pub use error::{Error, Result};
pub use format::{sig12, ExportFormat};
pub use hurwitz::{hurwitz_fourier_coeff, hurwitz_zeta, HurwitzParams};
pub use landau::{discrepancy, fujii_normalized, landau_sum, von_mangoldt, LandauReport};
pub use periodized::{
    f_direct, f_eval, f_eval_grid, f_fourier_coeff, f_fourier_coeff_numeric, f_hurwitz,
    fourier_coeff_table, midpoint_node, EvalPolicy,
};
pub use special::{complex_pow, log_gamma, signed_power_2pi_ik, LogScaled};
pub use zeros::{n_asymptotic, ZeroTable};
