//! Free-probabilistic data of realizations under the trace `tr` and the
//! normalized trace `τ = tr / 2`.
//!
//! Joint moments `τ(T^{r1} ... T^{rn})` with `r_l ∈ {1, *}` are computed two
//! ways: directly from matrix products ([`word_moment_oracle`]) and from the
//! polar form of the spectral value ([`word_moment_closed`]). The second is
//! only valid when the realization is similar to its spectral form through a
//! conjugator that also intertwines the adjoints.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realization::{mat_adjoint, mat_mul, mat_trace, realize, Matrix2C};
use crate::ring::{Hypercomplex, Scale};
use crate::spectral::spectralize;
use crate::Complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    Plain,
    Star,
}

impl Letter {
    pub fn exponent(self) -> i32 {
        match self {
            Letter::Plain => 1,
            Letter::Star => -1,
        }
    }
}

/// A nonempty word over `{1, *}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarWord(Vec<Letter>);

impl StarWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            Err(Error::parse(0, "empty star word"))
        } else {
            Ok(StarWord(letters))
        }
    }

    /// `n` copies of the plain letter, i.e. the word of `T^n`.
    pub fn power(n: usize) -> Result<Self> {
        StarWord::new(vec![Letter::Plain; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ e_l` with `e = +1` for `1` and `-1` for `*`.
    pub fn exponent_sum(&self) -> i32 {
        self.0.iter().map(|l| l.exponent()).sum()
    }

    /// True when both letters occur.
    pub fn is_mixed(&self) -> bool {
        let first = self.0[0];
        self.0.iter().any(|&l| l != first)
    }

    /// Every word of length `1..=max_len`, shortest first, `1` before `*`.
    pub fn all_up_to(max_len: usize) -> Vec<StarWord> {
        let mut out = Vec::new();
        for n in 1..=max_len {
            for bits in 0u64..(1 << n) {
                let letters = (0..n)
                    .map(|k| {
                        if bits >> (n - 1 - k) & 1 == 0 {
                            Letter::Plain
                        } else {
                            Letter::Star
                        }
                    })
                    .collect();
                out.push(StarWord(letters));
            }
        }
        out
    }
}

impl FromStr for StarWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .char_indices()
            .map(|(pos, ch)| match ch {
                '1' => Ok(Letter::Plain),
                '*' => Ok(Letter::Star),
                _ => Err(Error::parse(pos, format!("unexpected {ch:?} in star word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        StarWord::new(letters)
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::Plain => "1",
                Letter::Star => "*",
            })?;
        }
        Ok(())
    }
}

/// `z = r w_o` with `r = |z|` and `|w_o| = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PolarForm {
    pub r: f64,
    pub w_o: Complex,
}

pub fn polar_decompose(z: Complex) -> Result<PolarForm> {
    let r = z.norm();
    if r == 0.0 {
        return Err(Error::ZeroInput);
    }
    if !r.is_finite() {
        return Err(Error::NonFinite("polar input"));
    }
    Ok(PolarForm { r, w_o: z / r })
}

pub fn trace(m: &Matrix2C) -> Complex {
    mat_trace(m)
}

pub fn normalized_trace(m: &Matrix2C) -> Complex {
    mat_trace(m) * 0.5
}

/// The product `T^{r1} ... T^{rn}` with `T = [x]_t`.
pub fn word_product(t: Scale, x: Hypercomplex, w: &StarWord) -> Matrix2C {
    let m = realize(t, x);
    let m_star = mat_adjoint(&m);
    w.letters()
        .iter()
        .fold(Matrix2C::IDENTITY, |acc, l| match l {
            Letter::Plain => mat_mul(&acc, &m),
            Letter::Star => mat_mul(&acc, &m_star),
        })
}

/// `τ(T^{r1} ... T^{rn})` by direct multiplication.
pub fn word_moment_oracle(t: Scale, x: Hypercomplex, w: &StarWord) -> Complex {
    normalized_trace(&word_product(t, x, w))
}

/// `τ(T^{r1} ... T^{rn}) = r^n Re(w_o^{Σ e_l})` where `r w_o` is the polar
/// form of the spectral value. Double it for `tr`.
///
/// The similarity `[x]_t ~ Σ_t(x)` is only known for `t < 0` or `b = 0`, so
/// other inputs are refused. For mixed words the adjoint must be carried by
/// the same conjugator, which happens for `t = -1` (the conjugator is a
/// multiple of a unitary) and for `b = 0` (the realization is diagonal), but
/// not for other negative scales.
pub fn word_moment_closed(t: Scale, x: Hypercomplex, w: &StarWord) -> Result<f64> {
    let b_zero = x.b() == Complex::new(0.0, 0.0);
    if !b_zero {
        if t.value() >= 0.0 {
            return Err(Error::SimilarityNotEstablished { t: t.value() });
        }
        if t.value() != -1.0 && w.is_mixed() {
            return Err(Error::AdjointNotIntertwined { t: t.value() });
        }
    }
    let value = spectralize(t, x).value();
    if value.norm() == 0.0 {
        return Ok(0.0);
    }
    let polar = polar_decompose(value)?;
    let n = w.len() as i32;
    Ok(polar.r.powi(n) * polar.w_o.powi(w.exponent_sum()).re)
}

/// `τ(A1 A2*) = Re(a1 conj(a2)) + (t^2 b1 conj(b2) + conj(b1) b2) / 2`.
pub fn tau_plain_star(t: Scale, x1: Hypercomplex, x2: Hypercomplex) -> Complex {
    let t = t.value();
    let (a1, b1, a2, b2) = (x1.a(), x1.b(), x2.a(), x2.b());
    Complex::new((a1 * a2.conj()).re, 0.0) + (b1 * b2.conj() * (t * t) + b1.conj() * b2) * 0.5
}

/// `τ(A1* A2) = Re(conj(a1) a2) + (t^2 conj(b1) b2 + b1 conj(b2)) / 2`.
pub fn tau_star_plain(t: Scale, x1: Hypercomplex, x2: Hypercomplex) -> Complex {
    let t = t.value();
    let (a1, b1, a2, b2) = (x1.a(), x1.b(), x2.a(), x2.b());
    Complex::new((a1.conj() * a2).re, 0.0) + (b1.conj() * b2 * (t * t) + b1 * b2.conj()) * 0.5
}

/// `(τ(T^k))` for `k = 1..=n_max`, by repeated multiplication.
pub fn moment_sequence(t: Scale, x: Hypercomplex, n_max: usize) -> Vec<Complex> {
    let m = realize(t, x);
    let mut p = Matrix2C::IDENTITY;
    (0..n_max)
        .map(|_| {
            p = mat_mul(&p, &m);
            normalized_trace(&p)
        })
        .collect()
}

/// Self-adjoint / projection / normal / unitary flags of `[x]_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct OperatorClass {
    pub self_adjoint: bool,
    pub projection: bool,
    pub normal: bool,
    pub unitary: bool,
}

impl OperatorClass {
    fn first_difference(&self, other: &OperatorClass) -> Option<&'static str> {
        if self.self_adjoint != other.self_adjoint {
            Some("self_adjoint")
        } else if self.projection != other.projection {
            Some("projection")
        } else if self.normal != other.normal {
            Some("normal")
        } else if self.unitary != other.unitary {
            Some("unitary")
        } else {
            None
        }
    }
}

/// Flags from the closed-form characterizations in `(a, b, t)`.
pub fn operator_class_closed(t: Scale, x: Hypercomplex, tol: f64) -> OperatorClass {
    let tv = t.value();
    let (a, b) = (x.a(), x.b());
    let sc = 1.0 + a.norm() + b.norm();
    let near = |u: f64, v: f64| (u - v).abs() <= tol * sc;

    let t_one = (tv - 1.0).abs() <= tol;
    let t_minus_one = (tv + 1.0).abs() <= tol;
    let a_real = near(a.im, 0.0);
    let b_zero = near(b.norm(), 0.0);
    let a_is = |v: f64| a_real && near(a.re, v);

    let self_adjoint = if t_one { a_real } else { a_real && b_zero };
    let trivial_projection = b_zero && (a_is(0.0) || a_is(1.0));
    let projection = self_adjoint
        && (trivial_projection || (t_one && a_is(0.5) && near(b.norm_sqr(), 0.25)));
    let normal = if t_minus_one {
        true
    } else if t_one {
        a_real || b_zero
    } else {
        b_zero
    };
    let unit_a = b_zero && near(a.norm(), 1.0);
    let unitary = if t_minus_one {
        near(a.norm_sqr() + b.norm_sqr(), 1.0)
    } else if t_one {
        unit_a || (near(a.norm(), 0.0) && near(b.norm(), 1.0))
    } else {
        unit_a
    };
    OperatorClass {
        self_adjoint,
        projection,
        normal,
        unitary,
    }
}

/// Flags from the defining matrix identities, evaluated on `[x]_t`.
pub fn operator_class_matrix(t: Scale, x: Hypercomplex, tol: f64) -> OperatorClass {
    let m = realize(t, x);
    let m_star = mat_adjoint(&m);
    let n = m.max_norm();
    let lin = tol * (1.0 + n);
    let quad = tol * (1.0 + n * n);

    let self_adjoint = m_star.max_diff(&m) <= lin;
    let projection = self_adjoint && mat_mul(&m, &m).max_diff(&m) <= quad;
    let ss = mat_mul(&m_star, &m);
    let tt = mat_mul(&m, &m_star);
    let normal = ss.max_diff(&tt) <= quad;
    let unitary =
        ss.max_diff(&Matrix2C::IDENTITY) <= quad && tt.max_diff(&Matrix2C::IDENTITY) <= quad;
    OperatorClass {
        self_adjoint,
        projection,
        normal,
        unitary,
    }
}

/// Closed-form flags, cross-checked against the matrix predicates.
pub fn classify_operator(t: Scale, x: Hypercomplex, tol: f64) -> Result<OperatorClass> {
    let closed = operator_class_closed(t, x, tol);
    let brute = operator_class_matrix(t, x, tol);
    match closed.first_difference(&brute) {
        None => Ok(closed),
        Some(flag) => Err(Error::ClassificationDisagreement { flag }),
    }
}
