//! Randomized invariant suite.
//!
//! Every check compares a library result with an independent route (matrix
//! products, the quadratic formula, brute-force predicates) on seeded random
//! samples. A check passes when every sample's residual is within its bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::free_probability::{
    classify_operator, moment_sequence, normalized_trace, tau_plain_star, tau_star_plain,
    word_moment_closed, word_moment_oracle, StarWord,
};
use crate::realization::{
    mat_adjoint, mat_det, mat_inverse, mat_mul, mat_trace, membership, realize, star_residual,
    unrealize, Matrix2C,
};
use crate::ring::{
    add, classify_algebraic, det, inverse, AlgebraicClass, Hypercomplex, Scale, DEFAULT_TOL,
};
use crate::spectral::{
    char_poly, classify_spectral, conjugator, similarity_residual, spectral_form,
    spectral_mapping, spectral_related, spectralize, spectrum, RealPoly, SpectralClass,
};
use crate::Complex;

pub type MulFn = fn(Scale, Hypercomplex, Hypercomplex) -> Hypercomplex;

/// Deliberate defects for exercising the suite itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flips the sign of the `b1 conj(a2)` term of the product.
    MulSign,
}

impl Fault {
    fn mul(self) -> MulFn {
        match self {
            Fault::MulSign => |t, x, y| {
                let (a1, b1, a2, b2) = (x.a(), x.b(), y.a(), y.b());
                Hypercomplex::new(
                    a1 * a2 + b1 * b2.conj() * t.value(),
                    a1 * b2 - b1 * a2.conj(),
                )
                .unwrap_or(Hypercomplex::ZERO)
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 42,
            samples: 10_000,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// Largest raw residual seen.
    pub max_residual: f64,
    /// Largest residual / bound; at most 1 for a passing check.
    pub worst_ratio: f64,
}

impl InvariantResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub invariants: Vec<InvariantResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.invariants.iter().all(InvariantResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InvariantResult> {
        self.invariants.iter().filter(|r| !r.passed())
    }

    pub fn get(&self, name: &str) -> Option<&InvariantResult> {
        self.invariants.iter().find(|r| r.name == name)
    }
}

struct Check(InvariantResult);

impl Check {
    fn new(name: &'static str) -> Self {
        Check(InvariantResult {
            name,
            checked: 0,
            failures: 0,
            max_residual: 0.0,
            worst_ratio: 0.0,
        })
    }

    fn within(&mut self, residual: f64, bound: f64) {
        let r = &mut self.0;
        r.checked += 1;
        if residual.is_nan() || residual > bound {
            r.failures += 1;
        }
        let residual = if residual.is_nan() { f64::INFINITY } else { residual };
        r.max_residual = r.max_residual.max(residual);
        let ratio = if bound > 0.0 {
            residual / bound
        } else if residual == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        r.worst_ratio = r.worst_ratio.max(ratio);
    }

    fn holds(&mut self, ok: bool) {
        self.within(if ok { 0.0 } else { 1.0 }, 0.0);
    }
}

/// Random inputs shared by the verify suite and the test suites.
pub mod sample {
    use super::*;

    pub fn scale(rng: &mut impl Rng, lo: f64, hi: f64) -> Scale {
        Scale::new(rng.gen_range(lo..hi)).expect("finite")
    }

    pub fn complex(rng: &mut impl Rng, mag: f64) -> Complex {
        Complex::new(rng.gen_range(-mag..mag), rng.gen_range(-mag..mag))
    }

    pub fn unimodular(rng: &mut impl Rng) -> Complex {
        Complex::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
    }

    /// Components uniform in `[-mag, mag]^2`.
    pub fn hyper(rng: &mut impl Rng, mag: f64) -> Hypercomplex {
        Hypercomplex::new(complex(rng, mag), complex(rng, mag)).expect("finite")
    }

    pub fn nonzero_b(rng: &mut impl Rng, mag: f64) -> Hypercomplex {
        loop {
            let x = hyper(rng, mag);
            if x.b().norm() > 1e-3 {
                return x;
            }
        }
    }

    pub fn poly(rng: &mut impl Rng, max_degree: usize) -> RealPoly {
        let deg = rng.gen_range(0..=max_degree);
        RealPoly::new((0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect()).expect("finite")
    }

    pub fn matrix(rng: &mut impl Rng, mag: f64) -> Matrix2C {
        Matrix2C::new(
            complex(rng, mag),
            complex(rng, mag),
            complex(rng, mag),
            complex(rng, mag),
        )
        .expect("finite")
    }

    /// An element with `Im(a)^2 = t|b|^2` exactly, so `R = 0`.
    pub fn zero_radicand(rng: &mut impl Rng) -> (Scale, Hypercomplex) {
        let m = rng.gen_range(1..=4) as f64;
        let u = rng.gen_range(-6..=6) as f64;
        let x = rng.gen_range(-9..=9) as f64;
        let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let h = Hypercomplex::from_parts(x, sign * m * u, u, 0.0).expect("finite");
        (Scale::new(m * m).expect("finite"), h)
    }

    /// Structured inputs that reach the boundary cases of the operator
    /// classification, mixed with plain random ones.
    pub fn operator_case(rng: &mut impl Rng) -> (Scale, Hypercomplex) {
        let t = match rng.gen_range(0..4) {
            0 => -1.0,
            1 => 1.0,
            2 => [-3.0, -0.5, 0.0, 0.5, 2.0][rng.gen_range(0..5)],
            _ => rng.gen_range(-10.0..10.0),
        };
        let zero = Complex::new(0.0, 0.0);
        let (a, b) = match rng.gen_range(0..8) {
            0 => (Complex::new(rng.gen_range(-3.0..3.0), 0.0), zero),
            1 => (unimodular(rng), zero),
            2 => (zero, unimodular(rng)),
            3 => (Complex::new(0.5, 0.0), unimodular(rng) * 0.5),
            4 => (Complex::new(rng.gen_range(-3.0..3.0), 0.0), complex(rng, 3.0)),
            5 => {
                let (a, b) = (complex(rng, 1.0), complex(rng, 1.0));
                let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
                (a / n, b / n)
            }
            6 => ([zero, Complex::new(1.0, 0.0)][rng.gen_range(0..2)], zero),
            _ => (complex(rng, 5.0), complex(rng, 5.0)),
        };
        (
            Scale::new(t).expect("finite"),
            Hypercomplex::new(a, b).expect("finite"),
        )
    }
}

/// Roots of the monic `z^2 + c1 z + c0` by the quadratic formula.
pub fn quadratic_roots(c0: Complex, c1: Complex) -> (Complex, Complex) {
    let half = -c1 * 0.5;
    let disc = (half * half - c0).sqrt();
    (half + disc, half - disc)
}

/// Eigenvalues of a 2x2 matrix from its trace and determinant.
pub fn eigenvalues(m: &Matrix2C) -> (Complex, Complex) {
    quadratic_roots(mat_det(m), -mat_trace(m))
}

/// Distance between two unordered pairs.
pub fn pair_distance(p: (Complex, Complex), q: (Complex, Complex)) -> f64 {
    let straight = (p.0 - q.0).norm().max((p.1 - q.1).norm());
    let crossed = (p.0 - q.1).norm().max((p.1 - q.0).norm());
    straight.min(crossed)
}

fn maxmag(xs: &[Hypercomplex]) -> f64 {
    xs.iter().map(|x| x.max_abs()).fold(0.0, f64::max)
}

fn det_scale(t: Scale, x: Hypercomplex) -> f64 {
    x.a().norm_sqr() + t.value().abs() * x.b().norm_sqr()
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = opts.samples.max(1);
    let mul: MulFn = opts.fault.map_or(crate::ring::mul as MulFn, Fault::mul);
    let mut out = Vec::new();

    ring_checks(&mut rng, n, mul, &mut out);
    realization_checks(&mut rng, n, &mut out);
    spectral_checks(&mut rng, n, &mut out);
    free_checks(&mut rng, n, &mut out);

    VerifyReport {
        seed: opts.seed,
        samples: n,
        invariants: out.into_iter().map(|c| c.0).collect(),
    }
}

fn ring_checks(rng: &mut ChaCha8Rng, n: usize, mul: MulFn, out: &mut Vec<Check>) {
    let mut assoc = Check::new("associativity");
    let mut distrib = Check::new("distributivity");
    let mut ident = Check::new("identity");
    let mut det_mul = Check::new("det_multiplicativity");
    for _ in 0..n {
        let t = sample::scale(rng, -10.0, 10.0);
        let (x, y, z) = (
            sample::hyper(rng, 5.0),
            sample::hyper(rng, 5.0),
            sample::hyper(rng, 5.0),
        );
        let bound = 1e-10 * (1.0 + maxmag(&[x, y, z])).powi(3);
        let lhs = mul(t, mul(t, x, y), z);
        let rhs = mul(t, x, mul(t, y, z));
        assoc.within((lhs - rhs).max_abs(), bound);

        let left = mul(t, x, add(y, z)) - add(mul(t, x, y), mul(t, x, z));
        let right = mul(t, add(x, y), z) - add(mul(t, x, z), mul(t, y, z));
        distrib.within(left.max_abs().max(right.max_abs()), bound);

        let e1 = (mul(t, Hypercomplex::ONE, x) - x).max_abs();
        let e2 = (mul(t, x, Hypercomplex::ONE) - x).max_abs();
        ident.within(e1.max(e2), 1e-14);

        let prod = det(t, x) * det(t, y);
        let gap = (det(t, mul(t, x, y)) - prod).abs();
        det_mul.within(gap, 1e-10 * (1.0 + det_scale(t, x) * det_scale(t, y)));
    }

    let mut inv = Check::new("inverse_consistency");
    let mut regime = Check::new("regime_law");
    for k in 0..n {
        let t = sample::scale(rng, -10.0, 0.0);
        let x = sample::hyper(rng, 5.0);
        if !x.is_zero() {
            let i = inverse(t, x);
            regime.holds(classify_algebraic(t, x, DEFAULT_TOL) == AlgebraicClass::Invertible);
            match i {
                Ok(i) => {
                    let e = (mul(t, x, i) - Hypercomplex::ONE).max_abs();
                    let e2 = (mul(t, i, x) - Hypercomplex::ONE).max_abs();
                    let m = mat_inverse(&realize(t, x))
                        .map(|mi| realize(t, i).max_diff(&mi))
                        .unwrap_or(f64::INFINITY);
                    inv.within(e.max(e2).max(m), 1e-9);
                }
                Err(_) => inv.holds(false),
            }
        }
        // t = 0: exactly the a != 0 elements invert
        let t0 = Scale::new(0.0).expect("finite");
        let x0 = if k % 3 == 0 {
            Hypercomplex::new(Complex::new(0.0, 0.0), sample::complex(rng, 5.0)).expect("finite")
        } else {
            sample::hyper(rng, 5.0)
        };
        regime.holds(inverse(t0, x0).is_ok() == (x0.a().norm() > 0.0));
        // t > 0: invertibility follows the sign of |a|^2 - t|b|^2
        let tp = sample::scale(rng, 0.01, 10.0);
        let xp = sample::hyper(rng, 5.0);
        let d = det(tp, xp);
        if d.abs() > 1e-6 * det_scale(tp, xp) {
            regime.holds(
                classify_algebraic(tp, xp, DEFAULT_TOL) == AlgebraicClass::Invertible
                    && inverse(tp, xp).is_ok(),
            );
        }
    }
    for x in [(2.0, 1.0, 4.0), (1.0, 1.0, 1.0), (3.0, 1.5, 4.0)] {
        let h = Hypercomplex::from_parts(x.0, 0.0, x.1, 0.0).expect("finite");
        regime.holds(
            classify_algebraic(Scale::new(x.2).expect("finite"), h, DEFAULT_TOL)
                == AlgebraicClass::Singular,
        );
    }
    out.extend([assoc, distrib, ident, det_mul, inv, regime]);
}

fn realization_checks(rng: &mut ChaCha8Rng, n: usize, out: &mut Vec<Check>) {
    let mut hom_add = Check::new("homomorphism_add");
    let mut hom_mul = Check::new("homomorphism_mul");
    let mut round = Check::new("round_trip");
    let mut det_agree = Check::new("det_agreement");
    for _ in 0..n {
        let t = sample::scale(rng, -10.0, 10.0);
        let (x, y) = (sample::hyper(rng, 5.0), sample::hyper(rng, 5.0));
        let sum = realize(t, add(x, y));
        hom_add.within(
            sum.max_diff(&(realize(t, x) + realize(t, y))),
            1e-14 * (1.0 + sum.max_norm()),
        );
        let prod = realize(t, crate::ring::mul(t, x, y));
        hom_mul.within(
            prod.max_diff(&mat_mul(&realize(t, x), &realize(t, y))),
            1e-12 * (1.0 + prod.max_norm()),
        );
        match unrealize(t, &realize(t, x), 0.0) {
            Ok(back) => round.within((back - x).max_abs(), 0.0),
            Err(_) => round.holds(false),
        }
        let md = mat_det(&realize(t, x));
        let gap = (md.re - det(t, x)).abs().max(md.im.abs());
        det_agree.within(gap, 1e-12 * (1.0 + det_scale(t, x)));
    }

    let mut closure = Check::new("adjoint_closure");
    let mut monoid = Check::new("star_monoid_closure");
    for k in 0..n {
        let t = Scale::new(if k % 2 == 0 { 1.0 } else { -1.0 }).expect("finite");
        let x = sample::hyper(rng, 5.0);
        let adj = mat_adjoint(&realize(t, x));
        closure.holds(membership(t, &adj, 1e-12).in_realization);
        let ring_adj = crate::realization::adjoint_in_ring(t, x)
            .map(|r| realize(t, r).max_diff(&adj))
            .unwrap_or(f64::INFINITY);
        closure.within(ring_adj, 1e-14);

        let ts = sample::scale(rng, -10.0, 10.0);
        if (ts.value() * ts.value() - 1.0).abs() > 1e-3 {
            let witness = mat_adjoint(&realize(ts, Hypercomplex::from_parts(0., 0., 1., 0.).expect("finite")));
            closure.holds(!membership(ts, &witness, 1e-9).in_realization);
        }

        let star = |x: Hypercomplex| mat_adjoint(&realize(ts, x));
        let p = mat_mul(&star(sample::hyper(rng, 5.0)), &star(sample::hyper(rng, 5.0)));
        monoid.within(star_residual(ts, &p), 1e-12 * (1.0 + p.max_norm()));
    }
    out.extend([hom_add, hom_mul, round, det_agree, closure, monoid]);
}

fn spectral_checks(rng: &mut ChaCha8Rng, n: usize, out: &mut Vec<Check>) {
    let mut roots = Check::new("root_consistency");
    let mut split = Check::new("case_split");
    let mut class = Check::new("classification_equivalence");
    for k in 0..n {
        let (t, x) = if k % 10 == 0 {
            sample::zero_radicand(rng)
        } else {
            (sample::scale(rng, -10.0, 10.0), sample::hyper(rng, 5.0))
        };
        let (c0, c1) = char_poly(t, x);
        let oracle = quadratic_roots(Complex::new(c0, 0.0), Complex::new(c1, 0.0));
        let got = spectrum(t, x);
        roots.within(pair_distance(got, oracle), 1e-9 * (1.0 + c0.abs() + c1.abs()));

        let w = spectralize(t, x);
        let r = w.radicand();
        let ok = if r > 0.0 {
            got.0.im != 0.0 && got.1 == got.0.conj()
        } else if r < 0.0 {
            got.0.im == 0.0 && got.1.im == 0.0 && got.0.re < got.1.re
        } else {
            got.0 == got.1 && got.0.im == 0.0
        };
        split.holds(ok);

        let sc = x.a().im * x.a().im + t.value().abs() * x.b().norm_sqr();
        let nonreal = oracle.0.im.powi(2) > DEFAULT_TOL * sc && oracle.1.im.powi(2) > DEFAULT_TOL * sc;
        class.holds((classify_spectral(t, x, DEFAULT_TOL) == SpectralClass::Plus) == nonreal);
    }

    let mut equiv = Check::new("spectral_equivalence_relation");
    for _ in 0..(n / 10).max(1) {
        let t = sample::scale(rng, -5.0, 5.0);
        let x = sample::nonzero_b(rng, 3.0);
        let (a, b) = (x.a(), x.b());
        let twin = Hypercomplex::new(a.conj(), b * sample::unimodular(rng)).expect("finite");
        let other = Hypercomplex::new(Complex::new(a.re, -a.im), -b).expect("finite");
        let set = [x, twin, other, sample::hyper(rng, 3.0), sample::nonzero_b(rng, 3.0)];
        let rel = |p, q| spectral_related(t, p, q, DEFAULT_TOL);
        for &p in &set {
            equiv.holds(rel(p, p));
            for &q in &set {
                equiv.holds(rel(p, q) == rel(q, p));
                for &r in &set {
                    equiv.holds(!(rel(p, q) && rel(q, r)) || rel(p, r));
                }
            }
        }
        equiv.holds(rel(x, twin) && rel(x, other));
    }

    let mut inter = Check::new("intertwining");
    let mut simil = Check::new("similarity_residual");
    let mut trdet = Check::new("similarity_trace_det");
    let mut sf_det = Check::new("spectral_form_det");
    for _ in 0..n {
        let t = sample::scale(rng, -10.0, 0.0);
        let h = sample::nonzero_b(rng, 5.0);
        let m = realize(t, h);
        let sigma = spectral_form(t, h);
        match conjugator(t, h) {
            Ok(q) => {
                let lhs = mat_mul(&q, &sigma);
                let rhs = mat_mul(&m, &q);
                inter.within(lhs.max_diff(&rhs), 1e-10 * (1.0 + q.max_norm() * m.max_norm()));
                inter.holds(mat_det(&q).re >= 1.0 - 1e-12);
            }
            Err(_) => inter.holds(false),
        }
        simil.within(similarity_residual(t, h).unwrap_or(f64::INFINITY), 1e-9);
        let sc = 1.0 + det_scale(t, h);
        trdet.within((mat_trace(&sigma) - mat_trace(&m)).norm(), 1e-10 * sc);
        trdet.within((mat_det(&sigma) - mat_det(&m)).norm(), 1e-10 * sc);

        // every scale: the symbolic spectral form has the same determinant
        let tp = sample::scale(rng, -10.0, 10.0);
        let hp = sample::hyper(rng, 5.0);
        let gap = (mat_det(&spectral_form(tp, hp)) - mat_det(&realize(tp, hp))).norm();
        sf_det.within(gap, 1e-10 * (1.0 + det_scale(tp, hp)));
    }

    let mut mapping = Check::new("spectral_mapping");
    let mut conj = Check::new("conjugate_commutation");
    for _ in 0..(n / 10).max(1) {
        let t = sample::scale(rng, -3.0, 3.0);
        let x = sample::hyper(rng, 2.0);
        let g = sample::poly(rng, 5);
        let gm = g.eval_matrix(&realize(t, x));
        let got = spectral_mapping(t, &g, x);
        mapping.within(pair_distance(got, eigenvalues(&gm)), 1e-8 * (1.0 + gm.max_norm()));

        let z = sample::complex(rng, 5.0);
        let gz = g.eval(z);
        conj.within((g.eval(z.conj()) - gz.conj()).norm(), 1e-12 * (1.0 + gz.norm()));
    }

    out.extend([
        roots, split, class, equiv, inter, simil, trdet, sf_det, mapping, conj,
    ]);
}

fn free_checks(rng: &mut ChaCha8Rng, n: usize, out: &mut Vec<Check>) {
    let words = StarWord::all_up_to(6);

    let mut agree = Check::new("closed_form_agreement");
    let mut domain = Check::new("closed_form_domain");
    let per_scale = (n / 100).clamp(1, 100);
    for t in [-0.5, -1.0, -2.0, -5.0] {
        let t = Scale::new(t).expect("finite");
        for k in 0..per_scale {
            let x = if k % 5 == 0 {
                Hypercomplex::new(sample::complex(rng, 3.0), Complex::new(0.0, 0.0))
                    .expect("finite")
            } else {
                sample::hyper(rng, 3.0)
            };
            let r = spectralize(t, x).value().norm();
            for w in &words {
                let oracle = word_moment_oracle(t, x, w);
                let bound = 1.0 + r.powi(w.len() as i32);
                match word_moment_closed(t, x, w) {
                    Ok(v) => {
                        agree.within((v - oracle.re).abs(), 1e-8 * bound);
                        agree.within(oracle.im.abs(), 1e-10 * bound);
                    }
                    Err(Error::AdjointNotIntertwined { .. }) => {
                        domain.holds(w.is_mixed() && t.value() != -1.0 && x.b().norm() > 0.0)
                    }
                    Err(_) => domain.holds(false),
                }
            }
        }
    }
    for _ in 0..per_scale {
        let t = sample::scale(rng, 0.0, 10.0);
        let x = sample::nonzero_b(rng, 3.0);
        domain.holds(matches!(
            word_moment_closed(t, x, &words[0]),
            Err(Error::SimilarityNotEstablished { .. })
        ));
    }

    let mut tr_conj = Check::new("trace_conjugation");
    let mut power = Check::new("power_trace_law");
    let mut mixed = Check::new("mixed_moment_closed_form");
    for _ in 0..n {
        let m = sample::matrix(rng, 5.0);
        let gap = normalized_trace(&mat_adjoint(&m)) - normalized_trace(&m).conj();
        tr_conj.within(gap.norm(), 0.0);

        let t = sample::scale(rng, -10.0, 0.0);
        let x = sample::hyper(rng, 3.0);
        let w = spectralize(t, x).value();
        let tm = realize(t, x);
        let mut p = Matrix2C::IDENTITY;
        for k in 1..=8 {
            p = mat_mul(&p, &tm);
            let bound = 1e-8 * (1.0 + w.norm().powi(k));
            power.within((mat_trace(&p) - 2.0 * w.powi(k).re).norm(), bound);
        }

        let ts = sample::scale(rng, -10.0, 10.0);
        let (x1, x2) = (sample::hyper(rng, 3.0), sample::hyper(rng, 3.0));
        let (a1, a2) = (realize(ts, x1), realize(ts, x2));
        let sc = 1.0 + a1.max_norm() * a2.max_norm();
        let ps = normalized_trace(&mat_mul(&a1, &mat_adjoint(&a2)));
        mixed.within((ps - tau_plain_star(ts, x1, x2)).norm(), 1e-10 * sc);
        let sp = normalized_trace(&mat_mul(&mat_adjoint(&a1), &a2));
        mixed.within((sp - tau_star_plain(ts, x1, x2)).norm(), 1e-10 * sc);
    }

    let mut classes = Check::new("classification_consistency");
    for _ in 0..n {
        let (t, x) = sample::operator_case(rng);
        classes.holds(classify_operator(t, x, 1e-10).is_ok());
    }
    for (t, x) in operator_witnesses() {
        classes.holds(classify_operator(t, x, 1e-10).is_ok());
    }

    let mut unitary = Check::new("unitary_moment_formula");
    for _ in 0..(n / 100).max(1) {
        let t = loop {
            let t = sample::scale(rng, -10.0, 10.0);
            if (t.value().abs() - 1.0).abs() > 1e-6 {
                break t;
            }
        };
        let a = sample::unimodular(rng);
        let x = Hypercomplex::new(a, Complex::new(0.0, 0.0)).expect("finite");
        for w in &words {
            let expect = a.powi(w.exponent_sum()).re;
            unitary.within((word_moment_oracle(t, x, w).re - expect).abs(), 1e-10);
        }
    }

    let mut seqs = Check::new("moment_sequences");
    let s = |t: f64| Scale::new(t).expect("finite");
    let c = |v: f64| Complex::new(v, 0.0);
    let three = Hypercomplex::from_parts(3., 0., 0., 0.).expect("finite");
    let got = moment_sequence(s(-2.0), three, 4);
    for (g, e) in got.iter().zip([3., 9., 27., 81.]) {
        seqs.within((g - c(e)).norm(), 1e-12);
    }
    let j = Hypercomplex::from_parts(0., 0., 1., 0.).expect("finite");
    for (k, g) in moment_sequence(s(1.0), j, 6).iter().enumerate() {
        seqs.within((g - c(if k % 2 == 0 { 0.0 } else { 1.0 })).norm(), 1e-14);
    }
    for t in [-3.0, 0.0, 2.0] {
        for g in moment_sequence(s(t), Hypercomplex::ONE, 8) {
            seqs.within((g - c(1.0)).norm(), 1e-14);
        }
    }
    let half = Hypercomplex::from_parts(0.5, 0., 0.3, 0.4).expect("finite");
    for g in moment_sequence(s(1.0), half, 8) {
        seqs.within((g - c(0.5)).norm(), 1e-14);
    }

    out.extend([
        agree, domain, tr_conj, power, mixed, classes, unitary, seqs,
    ]);
}

/// Boundary elements of the operator classification.
pub fn operator_witnesses() -> Vec<(Scale, Hypercomplex)> {
    let s = |t: f64| Scale::new(t).expect("finite");
    let h = |ar, ai, br, bi| Hypercomplex::from_parts(ar, ai, br, bi).expect("finite");
    let mut out = Vec::new();
    for t in [-3.0, -1.0, -0.5, 0.0, 0.5, 2.0, 7.0] {
        out.push((s(t), h(-1.75, 0., 0., 0.)));
        out.push((s(t), Hypercomplex::ONE));
        out.push((s(t), Hypercomplex::ZERO));
        out.push((s(t), h(0.6, 0.8, 0., 0.)));
    }
    out.extend([
        (s(1.0), h(0.5, 0., 0.5, 0.)),
        (s(1.0), h(0.5, 0., 0., 0.5)),
        (s(1.0), h(0.5, 0., 0.3, -0.4)),
        (s(-1.0), h(0.6, 0., 0., 0.8)),
        (s(-1.0), h(1.3, -2., 0.7, 4.)),
        (s(1.0), h(0., 0., 1., 0.)),
        (s(1.0), h(0., 0., -1., 0.)),
        (s(1.0), h(2., 0., 1., 3.)),
        (s(3.0), h(5., 0., 0.2, 0.)),
    ]);
    out
}
