//! The realization `pi_t : H_t -> M_2(C)`,
//!
//! ```text
//! [(a, b)]_t = | a        t b     |
//!              | conj(b)  conj(a) |
//! ```
//!
//! together with plain 2x2 complex matrix algebra. The matrix side is
//! deliberately independent of `ring`: it is the brute-force oracle that the
//! closed forms elsewhere in the crate are checked against.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{finite, Hypercomplex, Scale};
use crate::Complex;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// A 2x2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2C {
    m: [[Complex; 2]; 2],
}

impl Matrix2C {
    pub const IDENTITY: Matrix2C = Matrix2C {
        m: [[ONE, ZERO], [ZERO, ONE]],
    };
    pub const ZERO: Matrix2C = Matrix2C {
        m: [[ZERO, ZERO], [ZERO, ZERO]],
    };

    pub fn new(m11: Complex, m12: Complex, m21: Complex, m22: Complex) -> Result<Self> {
        let m = Matrix2C::raw(m11, m12, m21, m22);
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    pub(crate) const fn raw(m11: Complex, m12: Complex, m21: Complex, m22: Complex) -> Self {
        Matrix2C {
            m: [[m11, m12], [m21, m22]],
        }
    }

    pub fn diag(d1: Complex, d2: Complex) -> Result<Self> {
        Matrix2C::new(d1, ZERO, ZERO, d2)
    }

    /// Entry at zero-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.m[row][col]
    }

    pub fn rows(&self) -> [[Complex; 2]; 2] {
        self.m
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| finite(*z))
    }

    /// `max |m_ij|`.
    pub fn max_norm(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |m_ij - n_ij|`.
    pub fn max_diff(&self, other: &Matrix2C) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn scale(&self, k: Complex) -> Matrix2C {
        let m = self.m;
        Matrix2C::raw(m[0][0] * k, m[0][1] * k, m[1][0] * k, m[1][1] * k)
    }
}

impl Add for Matrix2C {
    type Output = Matrix2C;

    fn add(self, rhs: Matrix2C) -> Matrix2C {
        mat_add(&self, &rhs)
    }
}

impl Sub for Matrix2C {
    type Output = Matrix2C;

    fn sub(self, rhs: Matrix2C) -> Matrix2C {
        let (p, q) = (self.m, rhs.m);
        Matrix2C::raw(
            p[0][0] - q[0][0],
            p[0][1] - q[0][1],
            p[1][0] - q[1][0],
            p[1][1] - q[1][1],
        )
    }
}

impl Mul for Matrix2C {
    type Output = Matrix2C;

    fn mul(self, rhs: Matrix2C) -> Matrix2C {
        mat_mul(&self, &rhs)
    }
}

impl Serialize for Matrix2C {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let enc = |z: Complex| [z.re, z.im];
        let rows = [
            [enc(self.m[0][0]), enc(self.m[0][1])],
            [enc(self.m[1][0]), enc(self.m[1][1])],
        ];
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix2C {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[[f64; 2]; 2]; 2]>::deserialize(d)?;
        let dec = |p: [f64; 2]| Complex::new(p[0], p[1]);
        Matrix2C::new(
            dec(rows[0][0]),
            dec(rows[0][1]),
            dec(rows[1][0]),
            dec(rows[1][1]),
        )
        .map_err(serde::de::Error::custom)
    }
}

pub fn mat_add(a: &Matrix2C, b: &Matrix2C) -> Matrix2C {
    let (p, q) = (a.m, b.m);
    Matrix2C::raw(
        p[0][0] + q[0][0],
        p[0][1] + q[0][1],
        p[1][0] + q[1][0],
        p[1][1] + q[1][1],
    )
}

pub fn mat_mul(a: &Matrix2C, b: &Matrix2C) -> Matrix2C {
    let (p, q) = (a.m, b.m);
    Matrix2C::raw(
        p[0][0] * q[0][0] + p[0][1] * q[1][0],
        p[0][0] * q[0][1] + p[0][1] * q[1][1],
        p[1][0] * q[0][0] + p[1][1] * q[1][0],
        p[1][0] * q[0][1] + p[1][1] * q[1][1],
    )
}

/// Conjugate transpose.
pub fn mat_adjoint(a: &Matrix2C) -> Matrix2C {
    let p = a.m;
    Matrix2C::raw(
        p[0][0].conj(),
        p[1][0].conj(),
        p[0][1].conj(),
        p[1][1].conj(),
    )
}

pub fn mat_trace(a: &Matrix2C) -> Complex {
    a.m[0][0] + a.m[1][1]
}

pub fn mat_det(a: &Matrix2C) -> Complex {
    a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]
}

/// Adjugate inverse. Singular when `|det| <= 1e-12 (1 + max|m_ij|^2)`.
pub fn mat_inverse(a: &Matrix2C) -> Result<Matrix2C> {
    let d = mat_det(a);
    let norm = a.max_norm();
    if d.norm() <= 1e-12 * (1.0 + norm * norm) {
        return Err(Error::Singular { det: d.norm() });
    }
    let p = a.m;
    let inv = Matrix2C::raw(p[1][1] / d, -p[0][1] / d, -p[1][0] / d, p[0][0] / d);
    if inv.is_finite() {
        Ok(inv)
    } else {
        Err(Error::NonFinite("matrix inverse"))
    }
}

/// `[(a, b)]_t`.
pub fn realize(t: Scale, x: Hypercomplex) -> Matrix2C {
    let (a, b) = (x.a(), x.b());
    Matrix2C::raw(a, b * t.value(), b.conj(), a.conj())
}

/// Defect of `m` against the realization template: `m22 = conj(m11)` and
/// `m12 = t conj(m21)`.
pub fn realization_residual(t: Scale, m: &Matrix2C) -> f64 {
    let p = m.m;
    let d1 = (p[1][1] - p[0][0].conj()).norm();
    let d2 = (p[0][1] - p[1][0].conj() * t.value()).norm();
    d1.max(d2)
}

/// Defect of `m` against the adjoint ("star") template
/// `[[conj a, b], [t conj b, a]]`: `m22 = conj(m11)` and `m21 = t conj(m12)`.
pub fn star_residual(t: Scale, m: &Matrix2C) -> f64 {
    let p = m.m;
    let d1 = (p[1][1] - p[0][0].conj()).norm();
    let d2 = (p[1][0] - p[0][1].conj() * t.value()).norm();
    d1.max(d2)
}

/// Inverse of [`realize`] on its image. `b` is read from the `(2,1)` entry
/// so this also works at `t = 0`.
pub fn unrealize(t: Scale, m: &Matrix2C, tol: f64) -> Result<Hypercomplex> {
    let residual = realization_residual(t, m);
    if residual > tol {
        return Err(Error::NotInRealization { residual });
    }
    Hypercomplex::new(m.m[0][0], m.m[1][0].conj())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub in_realization: bool,
    pub in_star_set: bool,
    /// Smaller of the two template residuals.
    pub residual: f64,
}

pub fn membership(t: Scale, m: &Matrix2C, tol: f64) -> MembershipReport {
    let r = realization_residual(t, m);
    let s = star_residual(t, m);
    MembershipReport {
        in_realization: r <= tol,
        in_star_set: s <= tol,
        residual: r.min(s),
    }
}

/// The element whose realization is the adjoint of `[x]_t`, when one exists.
///
/// The realization set is closed under adjoints only for `t = ±1`, where the
/// answer is `(conj(a), b / t)`. For other scales only `b = 0` elements have
/// adjoints inside the set.
pub fn adjoint_in_ring(t: Scale, x: Hypercomplex) -> Result<Hypercomplex> {
    let tv = t.value();
    let b = x.b();
    if b == ZERO {
        return Hypercomplex::new(x.a().conj(), ZERO);
    }
    if tv * tv != 1.0 {
        return Err(Error::NotClosed { t: tv });
    }
    Hypercomplex::new(x.a().conj(), b / tv)
}
