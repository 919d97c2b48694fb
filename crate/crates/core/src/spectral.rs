//! Spectra of realizations.
//!
//! For `x = (a, b)` with `a = x + yi`, the characteristic polynomial of
//! `[x]_t` is `z^2 - 2 Re(a) z + det_t(x)` and its roots are
//! `Re(a) ± i sqrt(R)` with the real radicand `R = Im(a)^2 - t|b|^2`.
//!
//! A [`SpectralValue`] keeps `(x, R)` rather than an evaluated complex
//! number. The "conjugate" of a spectral value is symbolic: it is the
//! ordinary conjugate when `R >= 0` but `x + sqrt|R|` when `R < 0`, so the
//! value and its symbolic conjugate are always the two eigenvalues.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::realization::{mat_inverse, mat_mul, realize, Matrix2C};
use crate::ring::{det, Hypercomplex, Regime, Scale};
use crate::Complex;

/// `σ_t(x)` stored as `(x, R)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralValue {
    x: f64,
    radicand: f64,
    /// Set only for `b = 0` with `Im(a) < 0`, where the value is `a` itself
    /// rather than `x + i sqrt(R)`.
    flipped: bool,
}

impl SpectralValue {
    pub fn new(x: f64, radicand: f64) -> Self {
        SpectralValue {
            x,
            radicand,
            flipped: false,
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// The radicand `R`.
    pub fn radicand(&self) -> f64 {
        self.radicand
    }

    pub fn value(&self) -> Complex {
        let r = self.radicand;
        if r >= 0.0 {
            let im = r.sqrt();
            Complex::new(self.x, if self.flipped { -im } else { im })
        } else {
            Complex::new(self.x - (-r).sqrt(), 0.0)
        }
    }

    pub fn symbolic_conjugate(&self) -> Complex {
        let r = self.radicand;
        if r >= 0.0 {
            self.value().conj()
        } else {
            Complex::new(self.x + (-r).sqrt(), 0.0)
        }
    }
}

impl Serialize for SpectralValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.value();
        let c = self.symbolic_conjugate();
        let mut st = s.serialize_struct("SpectralValue", 4)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("R", &self.radicand)?;
        st.serialize_field("value", &[v.re, v.im])?;
        st.serialize_field("conjugate", &[c.re, c.im])?;
        st.end()
    }
}

/// Whether the spectrum is non-real (`Plus`) or real (`MinusZero`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpectralClass {
    Plus,
    MinusZero,
}

impl fmt::Display for SpectralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectralClass::Plus => "Plus",
            SpectralClass::MinusZero => "MinusZero",
        })
    }
}

/// A polynomial with real coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Default, Serialize)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(RealPoly { coeffs })
        } else {
            Err(Error::NonFinite("polynomial coefficient"))
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Horner's scheme with `A^0 = I`.
    pub fn eval_matrix(&self, m: &Matrix2C) -> Matrix2C {
        self.coeffs.iter().rev().fold(Matrix2C::ZERO, |acc, &c| {
            mat_mul(&acc, m) + Matrix2C::IDENTITY.scale(Complex::new(c, 0.0))
        })
    }
}

/// Coefficients `(c0, c1)` of the monic `z^2 + c1 z + c0`.
pub fn char_poly(t: Scale, x: Hypercomplex) -> (f64, f64) {
    (det(t, x), -2.0 * x.a().re)
}

pub fn spectralize(t: Scale, x: Hypercomplex) -> SpectralValue {
    let a = x.a();
    if x.b() == Complex::new(0.0, 0.0) {
        SpectralValue {
            x: a.re,
            radicand: a.im * a.im,
            flipped: a.im < 0.0,
        }
    } else {
        SpectralValue::new(a.re, a.im * a.im - t.value() * x.b().norm_sqr())
    }
}

/// The spectrum as `(σ_t(x), symbolic conjugate)`.
pub fn spectrum(t: Scale, x: Hypercomplex) -> (Complex, Complex) {
    let w = spectralize(t, x);
    (w.value(), w.symbolic_conjugate())
}

/// `diag(w, w̄)` with the symbolic conjugate.
pub fn spectral_form(t: Scale, x: Hypercomplex) -> Matrix2C {
    let w = spectralize(t, x);
    let zero = Complex::new(0.0, 0.0);
    Matrix2C::raw(w.value(), zero, zero, w.symbolic_conjugate())
}

fn radicand_scale(t: Scale, x: Hypercomplex) -> f64 {
    let a = x.a();
    a.im * a.im + t.value().abs() * x.b().norm_sqr()
}

pub fn classify_spectral(t: Scale, x: Hypercomplex, tol: f64) -> SpectralClass {
    let r = spectralize(t, x).radicand;
    if r > tol * radicand_scale(t, x) {
        SpectralClass::Plus
    } else {
        SpectralClass::MinusZero
    }
}

/// `σ_t(x) = σ_t(y)`, compared on the stored `(x, R)` data.
pub fn spectral_related(t: Scale, x: Hypercomplex, y: Hypercomplex, tol: f64) -> bool {
    let (u, v) = (spectralize(t, x), spectralize(t, y));
    let scale = 1f64
        .max(u.x.abs())
        .max(v.x.abs())
        .max(u.radicand.abs())
        .max(v.radicand.abs());
    if (u.x - v.x).abs() > tol * scale || (u.radicand - v.radicand).abs() > tol * scale {
        return false;
    }
    // the branch only matters when the square root is nonzero
    u.flipped == v.flipped || u.radicand.max(v.radicand) <= tol * scale
}

/// `Q_h = [(1, conj((w - a) / (t b)))]_t`, which satisfies
/// `Q_h Σ_t(h) = [h]_t Q_h` for `t < 0`, `b != 0`.
pub fn conjugator(t: Scale, h: Hypercomplex) -> Result<Matrix2C> {
    conjugator_element(t, h).map(|q| realize(t, q))
}

/// The ring element whose realization is [`conjugator`].
pub fn conjugator_element(t: Scale, h: Hypercomplex) -> Result<Hypercomplex> {
    if t.regime() != Regime::Negative {
        return Err(Error::BadScale { t: t.value() });
    }
    if h.b() == Complex::new(0.0, 0.0) {
        return Err(Error::ZeroB);
    }
    let w = spectralize(t, h).value();
    let c = (w - h.a()) / (h.b() * t.value());
    Hypercomplex::new(Complex::new(1.0, 0.0), c.conj())
}

/// `max |Σ_t(h) - Q_h^{-1} [h]_t Q_h|`, or `max |Σ_t(h) - [h]_t|` when `b = 0`.
pub fn similarity_residual(t: Scale, h: Hypercomplex) -> Result<f64> {
    if t.regime() != Regime::Negative {
        return Err(Error::BadScale { t: t.value() });
    }
    let sigma = spectral_form(t, h);
    let m = realize(t, h);
    if h.b() == Complex::new(0.0, 0.0) {
        return Ok(sigma.max_diff(&m));
    }
    let q = conjugator(t, h)?;
    let q_inv = mat_inverse(&q)?;
    let conj = mat_mul(&mat_mul(&q_inv, &m), &q);
    Ok(sigma.max_diff(&conj))
}

/// `(g(w), g(w̄))` for the spectral value `w`; for `R >= 0` the second entry
/// is `conj(g(w))`. These are the eigenvalues of `g([x]_t)`.
pub fn spectral_mapping(t: Scale, g: &RealPoly, x: Hypercomplex) -> (Complex, Complex) {
    let w = spectralize(t, x);
    (g.eval(w.value()), g.eval(w.symbolic_conjugate()))
}

pub fn poly_eval_matrix(g: &RealPoly, m: &Matrix2C) -> Matrix2C {
    g.eval_matrix(m)
}
