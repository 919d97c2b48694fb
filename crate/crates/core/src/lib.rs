//! The family of t-scaled hypercomplex rings `H_t` and their 2x2 complex
//! realizations.
//!
//! * [`ring`]: the ring arithmetic, determinant and inverse.
//! * [`realization`]: the map into `M_2(C)` and the matrix oracle.
//! * [`spectral`]: spectra, spectral forms, similarity for `t < 0` and the
//!   spectral mapping theorem for real polynomials.
//! * [`free_probability`]: traces, star-word moments and operator classes.
//! * [`text`] and [`expr`]: literal syntax, rendering and the `eval` grammar.
//! * [`verify`]: the randomized invariant suite behind `shc verify`.

pub mod error;
pub mod expr;
pub mod free_probability;
pub mod realization;
pub mod ring;
pub mod spectral;
pub mod text;
pub mod verify;

pub use num_complex::Complex64 as Complex;

pub use error::{Error, Result};
pub use free_probability::{
    classify_operator, moment_sequence, normalized_trace, polar_decompose, trace,
    word_moment_closed, word_moment_oracle, Letter, OperatorClass, PolarForm, StarWord,
};
pub use realization::{
    adjoint_in_ring, mat_add, mat_adjoint, mat_det, mat_inverse, mat_mul, mat_trace, membership,
    realize, unrealize, Matrix2C, MembershipReport,
};
pub use ring::{
    add, classify_algebraic, det, inverse, mul, AlgebraicClass, Hypercomplex, Regime, Scale,
    DEFAULT_TOL,
};
pub use spectral::{
    char_poly, classify_spectral, conjugator, poly_eval_matrix, similarity_residual,
    spectral_form, spectral_mapping, spectral_related, spectralize, spectrum, RealPoly,
    SpectralClass, SpectralValue,
};
