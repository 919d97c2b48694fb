//! Arithmetic in the t-scaled hypercomplex ring `H_t = (C^2, +, ·_t)`.
//!
//! Elements are pairs `(a, b)` of complex numbers. The scale `t` is never
//! stored in a value; every scaled operation takes it explicitly, so one
//! element can be examined across the whole family `{H_t}`.
//!
//! The product is
//!
//! ```text
//! (a1, b1) ·_t (a2, b2) = (a1 a2 + t b1 conj(b2),  a1 b2 + b1 conj(a2))
//! ```
//!
//! which is the quaternion product at `t = -1` and the bicomplex product at
//! `t = 1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Complex;

/// Default tolerance for every classification predicate.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) fn finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A real scale parameter `t`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Scale(f64);

/// The sign of a scale. Exactly one regime holds for every finite `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Negative,
    Zero,
    Positive,
}

impl Scale {
    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() {
            Ok(Scale(t))
        } else {
            Err(Error::NonFinite("scale"))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn regime(self) -> Regime {
        if self.0 < 0.0 {
            Regime::Negative
        } else if self.0 > 0.0 {
            Regime::Positive
        } else {
            Regime::Zero
        }
    }
}

impl TryFrom<f64> for Scale {
    type Error = Error;

    fn try_from(t: f64) -> Result<Self> {
        Scale::new(t)
    }
}

impl<'de> Deserialize<'de> for Scale {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = f64::deserialize(d)?;
        Scale::new(t).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element `(a, b)` of `H_t`. Both components are finite.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Hypercomplex {
    a: Complex,
    b: Complex,
}

impl Hypercomplex {
    pub const ZERO: Hypercomplex = Hypercomplex {
        a: Complex::new(0.0, 0.0),
        b: Complex::new(0.0, 0.0),
    };

    /// The multiplicative identity `(1, 0)` of every `H_t`.
    pub const ONE: Hypercomplex = Hypercomplex {
        a: Complex::new(1.0, 0.0),
        b: Complex::new(0.0, 0.0),
    };

    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        if finite(a) && finite(b) {
            Ok(Hypercomplex { a, b })
        } else {
            Err(Error::NonFinite("hypercomplex component"))
        }
    }

    /// Builds `(a_re + a_im i, b_re + b_im i)`.
    pub fn from_parts(a_re: f64, a_im: f64, b_re: f64, b_im: f64) -> Result<Self> {
        Self::new(Complex::new(a_re, a_im), Complex::new(b_re, b_im))
    }

    /// Skips the finiteness check. Callers must only pass values derived
    /// from finite operands.
    pub(crate) const fn raw(a: Complex, b: Complex) -> Self {
        Hypercomplex { a, b }
    }

    #[inline]
    pub fn a(&self) -> Complex {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Complex {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == Complex::new(0.0, 0.0) && self.b == Complex::new(0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        finite(self.a) && finite(self.b)
    }

    /// Fails with `NonFinite` if an operation overflowed.
    pub fn ensure_finite(self) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite("result"))
        }
    }

    /// Largest absolute value among the four real coordinates.
    pub fn max_abs(&self) -> f64 {
        self.a
            .re
            .abs()
            .max(self.a.im.abs())
            .max(self.b.re.abs())
            .max(self.b.im.abs())
    }
}

impl Add for Hypercomplex {
    type Output = Hypercomplex;

    fn add(self, rhs: Hypercomplex) -> Hypercomplex {
        add(self, rhs)
    }
}

impl Sub for Hypercomplex {
    type Output = Hypercomplex;

    fn sub(self, rhs: Hypercomplex) -> Hypercomplex {
        add(self, -rhs)
    }
}

impl Neg for Hypercomplex {
    type Output = Hypercomplex;

    fn neg(self) -> Hypercomplex {
        Hypercomplex::raw(-self.a, -self.b)
    }
}

#[derive(Serialize, Deserialize)]
struct HypercomplexRepr {
    a: [f64; 2],
    b: [f64; 2],
}

impl Serialize for Hypercomplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypercomplexRepr {
            a: [self.a.re, self.a.im],
            b: [self.b.re, self.b.im],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypercomplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = HypercomplexRepr::deserialize(d)?;
        Hypercomplex::from_parts(r.a[0], r.a[1], r.b[0], r.b[1]).map_err(serde::de::Error::custom)
    }
}

/// Group-part / semigroup-part decomposition of `H_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraicClass {
    Invertible,
    Singular,
    Zero,
}

impl fmt::Display for AlgebraicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraicClass::Invertible => "Invertible",
            AlgebraicClass::Singular => "Singular",
            AlgebraicClass::Zero => "Zero",
        })
    }
}

pub fn add(x: Hypercomplex, y: Hypercomplex) -> Hypercomplex {
    Hypercomplex::raw(x.a + y.a, x.b + y.b)
}

/// The scaled product `x ·_t y`.
pub fn mul(t: Scale, x: Hypercomplex, y: Hypercomplex) -> Hypercomplex {
    let t = t.value();
    Hypercomplex::raw(
        x.a * y.a + x.b * y.b.conj() * t,
        x.a * y.b + x.b * y.a.conj(),
    )
}

/// `|a|^2 - t|b|^2`, the determinant of the realization.
pub fn det(t: Scale, x: Hypercomplex) -> f64 {
    x.a.norm_sqr() - t.value() * x.b.norm_sqr()
}

/// Magnitude against which `det` is compared when deciding singularity.
fn det_scale(t: Scale, x: Hypercomplex) -> f64 {
    x.a.norm_sqr() + t.value().abs() * x.b.norm_sqr()
}

pub fn classify_algebraic(t: Scale, x: Hypercomplex, tol: f64) -> AlgebraicClass {
    if x.is_zero() {
        return AlgebraicClass::Zero;
    }
    // For t < 0 the determinant is a sum of squares: every nonzero element
    // is a unit.
    if t.regime() == Regime::Negative {
        return AlgebraicClass::Invertible;
    }
    if det(t, x).abs() > tol * det_scale(t, x) {
        AlgebraicClass::Invertible
    } else {
        AlgebraicClass::Singular
    }
}

/// `(conj(a), -b) / (|a|^2 - t|b|^2)`.
pub fn inverse(t: Scale, x: Hypercomplex) -> Result<Hypercomplex> {
    inverse_with_tol(t, x, DEFAULT_TOL)
}

pub fn inverse_with_tol(t: Scale, x: Hypercomplex, tol: f64) -> Result<Hypercomplex> {
    let d = det(t, x);
    match classify_algebraic(t, x, tol) {
        AlgebraicClass::Zero => Err(Error::Zero),
        AlgebraicClass::Singular => Err(Error::Singular { det: d }),
        AlgebraicClass::Invertible => Hypercomplex::raw(x.a.conj() / d, -x.b / d).ensure_finite(),
    }
}
