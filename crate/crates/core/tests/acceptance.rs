//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scaled_hypercomplex::free_probability::{tau_plain_star, tau_star_plain};
use scaled_hypercomplex::spectral::conjugator;
use scaled_hypercomplex::verify::{self, sample, VerifyOptions};
use scaled_hypercomplex::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn s(t: f64) -> Scale {
    Scale::new(t).unwrap()
}

fn h(ar: f64, ai: f64, br: f64, bi: f64) -> Hypercomplex {
    Hypercomplex::from_parts(ar, ai, br, bi).unwrap()
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Tracks the worst case over many checks of one criterion.
struct Tally {
    checked: usize,
    failed: usize,
    worst: f64,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failed: 0,
            worst: 0.0,
            first: None,
        }
    }

    fn within(&mut self, residual: f64, bound: f64, what: impl FnOnce() -> String) {
        self.checked += 1;
        if bound > 0.0 {
            self.worst = self.worst.max(residual / bound);
        }
        if !(residual <= bound) {
            self.fail(what);
        }
    }

    fn holds(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what);
        }
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.failed += 1;
        if self.first.is_none() {
            self.first = Some(what());
        }
    }

    fn ok(&self) -> bool {
        self.failed == 0
    }

    fn summary(&self) -> String {
        match &self.first {
            None => format!("{} checks, worst residual/bound {:.3e}", self.checked, self.worst),
            Some(f) => format!("{}/{} checks failed, first: {f}", self.failed, self.checked),
        }
    }
}

fn report(n: u32, title: &str, parts: &[(&str, bool, String)]) {
    let ok = parts.iter().all(|p| p.1);
    println!("{} criterion {n}: {title}", if ok { "PASS" } else { "FAIL" });
    for (name, pass, detail) in parts {
        println!("    [{}] {name}: {detail}", if *pass { "ok" } else { "FAIL" });
    }
    assert!(ok, "criterion {n} failed");
}

fn timed(limit: Duration, start: Instant) -> (&'static str, bool, String) {
    let el = start.elapsed();
    ("runtime", el < limit, format!("{el:.2?} (limit {limit:?})"))
}

/// Unordered eigenvalue pair of a 2x2 matrix via the quadratic formula on
/// its characteristic polynomial.
fn eigen_pair(m: &Matrix2C) -> (Complex, Complex) {
    let tr = m.get(0, 0) + m.get(1, 1);
    let dt = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
    let half = tr * 0.5;
    let root = (half * half - dt).sqrt();
    (half + root, half - root)
}

fn pair_gap(p: (Complex, Complex), q: (Complex, Complex)) -> f64 {
    let straight = (p.0 - q.0).norm().max((p.1 - q.1).norm());
    let crossed = (p.0 - q.1).norm().max((p.1 - q.0).norm());
    straight.min(crossed)
}

fn max_entry_gap(a: &Matrix2C, b: &Matrix2C) -> f64 {
    let mut g: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            g = g.max((a.get(i, j) - b.get(i, j)).norm());
        }
    }
    g
}

#[test]
fn criterion_01_ring_axioms() {
    let start = Instant::now();
    let mut r = rng(1);
    let mut assoc = Tally::new();
    let mut dist = Tally::new();
    for _ in 0..10_000 {
        let t = sample::scale(&mut r, -10.0, 10.0);
        let (x, y, z) = (
            sample::hyper(&mut r, 5.0),
            sample::hyper(&mut r, 5.0),
            sample::hyper(&mut r, 5.0),
        );
        let m = x.max_abs().max(y.max_abs()).max(z.max_abs());
        let bound = 1e-10 * (1.0 + m).powi(3);
        let lhs = mul(t, mul(t, x, y), z);
        let rhs = mul(t, x, mul(t, y, z));
        assoc.within((lhs - rhs).max_abs(), bound, || format!("t={} x={x:?}", t.value()));
        let l = mul(t, x, add(y, z));
        let r2 = add(mul(t, x, y), mul(t, x, z));
        dist.within((l - r2).max_abs(), bound, || format!("left t={}", t.value()));
        let l = mul(t, add(x, y), z);
        let r2 = add(mul(t, x, z), mul(t, y, z));
        dist.within((l - r2).max_abs(), bound, || format!("right t={}", t.value()));
    }
    report(
        1,
        "ring axioms",
        &[
            ("associativity", assoc.ok(), assoc.summary()),
            ("distributivity", dist.ok(), dist.summary()),
            timed(Duration::from_secs(2), start),
        ],
    );
}

#[test]
fn criterion_02_representation() {
    let mut r = rng(2);
    let mut hom = Tally::new();
    let mut round = Tally::new();
    for _ in 0..10_000 {
        let t = sample::scale(&mut r, -10.0, 10.0);
        let (x, y) = (sample::hyper(&mut r, 5.0), sample::hyper(&mut r, 5.0));
        let (mx, my) = (realize(t, x), realize(t, y));

        let sum = realize(t, add(x, y));
        let sc = 1.0 + mx.max_norm() + my.max_norm();
        hom.within(max_entry_gap(&sum, &mat_add(&mx, &my)), 1e-12 * sc, || "add".into());

        let prod = realize(t, mul(t, x, y));
        let sc = 1.0 + mx.max_norm() * my.max_norm();
        hom.within(max_entry_gap(&prod, &mat_mul(&mx, &my)), 1e-12 * sc, || {
            format!("mul t={}", t.value())
        });

        match unrealize(t, &mx, DEFAULT_TOL) {
            Ok(back) => round.holds(back == x, || format!("{back:?} != {x:?}")),
            Err(e) => round.holds(false, || e.to_string()),
        }
    }
    report(
        2,
        "realization is a ring homomorphism",
        &[
            ("homomorphism", hom.ok(), hom.summary()),
            ("unrealize after realize", round.ok(), round.summary()),
        ],
    );
}

#[test]
fn criterion_03_inverses() {
    let mut r = rng(3);
    let mut neg = Tally::new();
    let mut neg_mat = Tally::new();
    for _ in 0..10_000 {
        let t = sample::scale(&mut r, -10.0, -1e-3);
        let x = sample::hyper(&mut r, 5.0);
        if x.is_zero() {
            continue;
        }
        match inverse(t, x) {
            Ok(inv) => {
                let gap = (mul(t, x, inv) - Hypercomplex::ONE).max_abs();
                neg.within(gap, 1e-9, || format!("t={} x={x:?}", t.value()));
                let m = mat_inverse(&realize(t, x)).unwrap();
                let ri = realize(t, inv);
                neg_mat.within(max_entry_gap(&ri, &m), 1e-9 * (1.0 + m.max_norm()), || {
                    format!("t={}", t.value())
                });
            }
            Err(e) => neg.holds(false, || format!("t={} x={x:?}: {e}", t.value())),
        }
    }

    let mut zero = Tally::new();
    let t0 = s(0.0);
    for k in 0..10_000 {
        let mut x = sample::hyper(&mut r, 5.0);
        if k % 4 == 0 {
            x = Hypercomplex::new(c(0.0, 0.0), x.b()).unwrap();
        }
        let expect = x.a() != c(0.0, 0.0);
        zero.holds(inverse(t0, x).is_ok() == expect, || format!("{x:?}"));
    }

    // Exact boundary elements `|a|^2 = t|b|^2` with `t = m^2`, `a = m u`.
    let mut pos = Tally::new();
    for k in 0..10_000 {
        let (t, x) = if k % 4 == 0 {
            let m = r.gen_range(1..=5) as f64;
            let u = r.gen_range(1..=6) as f64;
            (s(m * m), h(m * u, 0.0, u, 0.0))
        } else {
            (sample::scale(&mut r, 1e-3, 10.0), sample::hyper(&mut r, 5.0))
        };
        let sign = x.a().norm_sqr() - t.value() * x.b().norm_sqr();
        pos.holds(inverse(t, x).is_ok() == (sign != 0.0), || {
            format!("t={} x={x:?} sign={sign}", t.value())
        });
    }
    report(
        3,
        "inverses",
        &[
            ("t<0 product is (1,0)", neg.ok(), neg.summary()),
            ("t<0 realization of inverse", neg_mat.ok(), neg_mat.summary()),
            ("t=0 invertible iff a!=0", zero.ok(), zero.summary()),
            ("t>0 invertible iff |a|^2 != t|b|^2", pos.ok(), pos.summary()),
        ],
    );
}

#[test]
fn criterion_04_spectrum() {
    let mut r = rng(4);
    let mut roots = Tally::new();
    let mut class = Tally::new();
    let mut regimes = [0usize; 3];
    for k in 0..10_000 {
        let (t, x) = if k % 10 == 0 {
            sample::zero_radicand(&mut r)
        } else {
            (sample::scale(&mut r, -10.0, 10.0), sample::hyper(&mut r, 5.0))
        };
        let rad = spectralize(t, x).radicand();
        regimes[if rad > 0.0 {
            0
        } else if rad < 0.0 {
            1
        } else {
            2
        }] += 1;

        let m = realize(t, x);
        let oracle = eigen_pair(&m);
        let got = spectrum(t, x);
        let sc = 1.0 + m.max_norm();
        roots.within(pair_gap(got, oracle), 1e-9 * sc, || {
            format!("t={} x={x:?}", t.value())
        });

        let real_roots = oracle.0.im.abs() <= 1e-6 * sc && oracle.1.im.abs() <= 1e-6 * sc;
        let expect = if real_roots {
            SpectralClass::MinusZero
        } else {
            SpectralClass::Plus
        };
        class.holds(classify_spectral(t, x, DEFAULT_TOL) == expect, || {
            format!("t={} x={x:?}", t.value())
        });
    }
    let spans = regimes.iter().all(|&n| n > 0);
    report(
        4,
        "spectrum",
        &[
            ("matches eigenvalue oracle", roots.ok(), roots.summary()),
            ("class agrees with root realness", class.ok(), class.summary()),
            (
                "sign regimes of R covered",
                spans,
                format!("R>0: {}, R<0: {}, R=0: {}", regimes[0], regimes[1], regimes[2]),
            ),
        ],
    );
}

#[test]
fn criterion_05_worked_examples() {
    let w = spectralize(s(-1.0), h(1.0, 3.0, -1.0, 1.0));
    let v = w.value();
    let first = w.x() == 1.0
        && (w.radicand() - 11.0).abs() <= 1e-12
        && (v - c(1.0, 11f64.sqrt())).norm() <= 1e-12
        && (v.im - 3.3166247903554).abs() <= 1e-12;

    let sf = spectral_form(s(1.0), h(-2.0, -1.0, 1.0, 3.0));
    let target = Matrix2C::diag(c(-5.0, 0.0), c(1.0, 0.0)).unwrap();
    let gap = max_entry_gap(&sf, &target);
    // -2 ± sqrt(10 t - 1) at t = 1
    let (lo, hi) = (-2.0 - 3.0, -2.0 + 3.0);
    let second = gap <= 1e-12 && (sf.get(0, 0).re - lo).abs() <= 1e-12 && (sf.get(1, 1).re - hi).abs() <= 1e-12;
    report(
        5,
        "worked spectral examples",
        &[
            (
                "t=-1 (1+3i, -1+i)",
                first,
                format!("x={} R={} value={v}", w.x(), w.radicand()),
            ),
            ("t=1 (-2-i, 1+3i) form diag(-5, 1)", second, format!("gap {gap:.1e}")),
        ],
    );
}

#[test]
fn criterion_06_similarity() {
    let mut r = rng(6);
    let mut qdet = Tally::new();
    let mut resid = Tally::new();
    for _ in 0..10_000 {
        let t = sample::scale(&mut r, -10.0, -1e-3);
        let x = sample::nonzero_b(&mut r, 5.0);
        match conjugator(t, x) {
            Ok(q) => {
                let d = mat_det(&q);
                qdet.holds(d.re >= 1.0 - 1e-12 && d.im.abs() <= 1e-12, || {
                    format!("det(Q)={d} t={}", t.value())
                });
            }
            Err(e) => qdet.holds(false, || e.to_string()),
        }
        match similarity_residual(t, x) {
            Ok(g) => resid.within(g, 1e-9, || format!("t={} x={x:?}", t.value())),
            Err(e) => resid.holds(false, || e.to_string()),
        }
    }

    let mut witness = Tally::new();
    let mut done = 0;
    while done < 1_000 {
        let t = sample::scale(&mut r, 1e-3, 10.0);
        let x = sample::nonzero_b(&mut r, 5.0);
        if x.a().norm_sqr() >= t.value() * x.b().norm_sqr() {
            continue;
        }
        done += 1;
        let ds = mat_det(&spectral_form(t, x)).re;
        let dh = mat_det(&realize(t, x)).re;
        witness.holds(ds > 0.0 && 0.0 > dh, || {
            format!("det(form)={ds:.6} det([h])={dh:.6} at t={}", t.value())
        });
    }
    report(
        6,
        "similarity",
        &[
            ("det(Q_h) >= 1", qdet.ok(), qdet.summary()),
            ("form = Q^-1 [h] Q", resid.ok(), resid.summary()),
            ("t>0 determinant-sign witness", witness.ok(), witness.summary()),
        ],
    );
}

#[test]
fn criterion_07_spectral_mapping() {
    let mut r = rng(7);
    let mut map = Tally::new();
    for _ in 0..1_000 {
        let t = sample::scale(&mut r, -3.0, 3.0);
        let x = sample::hyper(&mut r, 2.0);
        let g = sample::poly(&mut r, 5);
        let gm = poly_eval_matrix(&g, &realize(t, x));
        let got = spectral_mapping(t, &g, x);
        map.within(pair_gap(got, eigen_pair(&gm)), 1e-8 * (1.0 + gm.max_norm()), || {
            format!("t={} x={x:?} g={:?}", t.value(), g.coeffs())
        });
    }
    report(
        7,
        "spectral mapping",
        &[("eigenvalues of g(T) are g(w), g(conj w)", map.ok(), map.summary())],
    );
}

#[test]
fn criterion_08_adjoint_closure() {
    let mut r = rng(8);
    let mut closed = Tally::new();
    let mut formula = Tally::new();
    for t in [-1.0, 1.0] {
        let t = s(t);
        for _ in 0..1_000 {
            let x = sample::hyper(&mut r, 5.0);
            let adj = mat_adjoint(&realize(t, x));
            closed.holds(membership(t, &adj, 1e-12).in_realization, || {
                format!("t={} x={x:?}", t.value())
            });
            match adjoint_in_ring(t, x) {
                Ok(y) => formula.within(max_entry_gap(&realize(t, y), &adj), 1e-14, || {
                    format!("t={} x={x:?}", t.value())
                }),
                Err(e) => formula.holds(false, || e.to_string()),
            }
        }
    }
    let mut witness = Tally::new();
    for t in [-0.5, 0.0, 0.5, 2.0] {
        let adj = mat_adjoint(&realize(s(t), h(0.0, 0.0, 1.0, 0.0)));
        witness.holds(!membership(s(t), &adj, 1e-12).in_realization, || format!("t={t}"));
    }
    report(
        8,
        "adjoint closure",
        &[
            ("t=±1 adjoints stay in the realization", closed.ok(), closed.summary()),
            ("(0,1) escapes for t in {-0.5,0,0.5,2}", witness.ok(), witness.summary()),
            ("adjoint_in_ring realizes the adjoint", formula.ok(), formula.summary()),
        ],
    );
}

/// `r^n Re(w_o^{Σe})` from the spectral value, applied to any word.
fn raw_closed_form(t: Scale, x: Hypercomplex, w: &StarWord) -> f64 {
    let v = spectralize(t, x).value();
    if v.norm() == 0.0 {
        return 0.0;
    }
    let p = polar_decompose(v).unwrap();
    p.r.powi(w.len() as i32) * p.w_o.powi(w.exponent_sum()).re
}

#[test]
fn criterion_09_free_moments() {
    let start = Instant::now();
    let words = StarWord::all_up_to(6);
    let mut r = rng(9);
    let mut per_scale = Vec::new();
    for t in [-0.5, -1.0, -2.0, -5.0] {
        let t = s(t);
        let mut tally = Tally::new();
        for _ in 0..100 {
            let x = sample::hyper(&mut r, 3.0);
            let rn = spectralize(t, x).value().norm();
            for w in &words {
                let bound = 1.0 + rn.powi(w.len() as i32);
                let oracle = word_moment_oracle(t, x, w);
                let closed = word_moment_closed(t, x, w);
                let value = match &closed {
                    Ok(v) => *v,
                    Err(_) => raw_closed_form(t, x, w),
                };
                let what = || {
                    format!(
                        "word {w} x={x:?}: closed {value:.6} vs oracle {:.6}{}",
                        oracle.re,
                        closed
                            .as_ref()
                            .err()
                            .map(|e| format!(" ({e})"))
                            .unwrap_or_default()
                    )
                };
                if closed.is_err() {
                    tally.holds(false, what);
                    continue;
                }
                tally.within((value - oracle.re).abs(), 1e-8 * bound, what);
                tally.within(oracle.im.abs(), 1e-10 * bound, || format!("Im, word {w}"));
            }
        }
        per_scale.push((t.value(), tally));
    }

    let mut pairs = Tally::new();
    for _ in 0..1_000 {
        let t = sample::scale(&mut r, -10.0, 10.0);
        let (x1, x2) = (sample::hyper(&mut r, 3.0), sample::hyper(&mut r, 3.0));
        let (a1, a2) = (realize(t, x1), realize(t, x2));
        let sc = 1.0 + a1.max_norm() * a2.max_norm();
        let ps = mat_trace(&mat_mul(&a1, &mat_adjoint(&a2))) * 0.5;
        let sp = mat_trace(&mat_mul(&mat_adjoint(&a1), &a2)) * 0.5;
        pairs.within((ps - tau_plain_star(t, x1, x2)).norm(), 1e-10 * sc, || "τ(A1 A2*)".into());
        pairs.within((sp - tau_star_plain(t, x1, x2)).norm(), 1e-10 * sc, || "τ(A1* A2)".into());
    }

    let labels: Vec<String> = per_scale
        .iter()
        .map(|(t, _)| format!("all 126 words, t={t}"))
        .collect();
    let mut parts: Vec<(&str, bool, String)> = per_scale
        .iter()
        .zip(&labels)
        .map(|((_, tally), l)| (l.as_str(), tally.ok(), tally.summary()))
        .collect();
    parts.push(("length-2 pair forms", pairs.ok(), pairs.summary()));
    parts.push(timed(Duration::from_secs(5), start));
    report(9, "free moments", &parts);
}

#[test]
fn criterion_10_classification() {
    let mut r = rng(10);
    let mut random = Tally::new();
    for _ in 0..10_000 {
        let (t, x) = sample::operator_case(&mut r);
        random.holds(classify_operator(t, x, DEFAULT_TOL).is_ok(), || {
            format!("t={} x={x:?}", t.value())
        });
    }

    let mut wit = Tally::new();
    let class = |t: f64, x: Hypercomplex| classify_operator(s(t), x, DEFAULT_TOL);
    let not_one = [-5.0, -1.0, -0.5, 0.0, 0.5, 2.0, 7.0];
    for &t in &not_one {
        for a in [-2.5, 0.0, 0.75, 3.0] {
            let ok = matches!(class(t, h(a, 0., 0., 0.)), Ok(k) if k.self_adjoint);
            wit.holds(ok, || format!("({a},0) self-adjoint at t={t}"));
        }
        let p0 = matches!(class(t, Hypercomplex::ZERO), Ok(k) if k.projection);
        let p1 = matches!(class(t, Hypercomplex::ONE), Ok(k) if k.projection);
        wit.holds(p0 && p1, || format!("I, O projections at t={t}"));
        for x in [h(0.5, 0., 0., 0.), h(2., 0., 0., 0.), h(0.5, 0., 0.5, 0.), h(1., 0., 1., 0.)] {
            let ok = matches!(class(t, x), Ok(k) if !k.projection);
            wit.holds(ok, || format!("{x:?} not a projection at t={t}"));
        }
    }
    for theta in [0.0, 0.7, 2.0, 4.5] {
        let b = Complex::from_polar(0.5, theta);
        let x = Hypercomplex::new(c(0.5, 0.0), b).unwrap();
        let ok = matches!(class(1.0, x), Ok(k) if k.projection);
        wit.holds(ok, || format!("(1/2, {b}) projection at t=1"));
    }
    for _ in 0..100 {
        let x = sample::hyper(&mut r, 5.0);
        let ok = matches!(class(-1.0, x), Ok(k) if k.normal);
        wit.holds(ok, || format!("{x:?} normal at t=-1"));
    }
    let ok = matches!(class(-1.0, h(0.6, 0., 0., 0.8)), Ok(k) if k.unitary);
    wit.holds(ok, || "(0.6, 0.8i) unitary at t=-1".into());
    for b in [1.0, -1.0] {
        let ok = matches!(class(1.0, h(0., 0., b, 0.)), Ok(k) if k.unitary);
        wit.holds(ok, || format!("(0,{b}) unitary at t=1"));
    }
    for (t, x) in verify::operator_witnesses() {
        wit.holds(classify_operator(t, x, DEFAULT_TOL).is_ok(), || {
            format!("boundary t={} x={x:?}", t.value())
        });
    }
    report(
        10,
        "operator classification",
        &[
            ("closed flags = matrix predicates", random.ok(), random.summary()),
            ("explicit witnesses", wit.ok(), wit.summary()),
        ],
    );
}

#[test]
fn criterion_11_moment_sequences() {
    let geo = moment_sequence(s(-2.0), h(3., 0., 0., 0.), 4);
    let mut g = Tally::new();
    for (k, (got, want)) in geo.iter().zip([3.0, 9.0, 27.0, 81.0]).enumerate() {
        g.within((got - c(want, 0.0)).norm(), 1e-12, || format!("k={}: {got}", k + 1));
    }

    let alt = moment_sequence(s(1.0), h(0., 0., 1., 0.), 6);
    let mut a = Tally::new();
    for (k, (got, want)) in alt.iter().zip([0.0, 1.0, 0.0, 1.0, 0.0, 1.0]).enumerate() {
        a.within((got - c(want, 0.0)).norm(), 1e-14, || format!("k={}: {got}", k + 1));
    }

    let mut p = Tally::new();
    for (t, x) in [
        (0.5, Hypercomplex::ONE),
        (-3.0, Hypercomplex::ONE),
        (1.0, h(0.5, 0., 0.3, -0.4)),
        (1.0, h(0.5, 0., 0., 0.5)),
    ] {
        let k = classify_operator(s(t), x, DEFAULT_TOL).unwrap();
        p.holds(k.projection, || format!("{x:?} projection at t={t}"));
        let tr = trace(&realize(s(t), x)).re;
        for (n, m) in moment_sequence(s(t), x, 8).iter().enumerate() {
            // τ(P^n) = τ(P) for a projection; full rank gives all ones
            let want = if tr > 1.5 { 1.0 } else { tr / 2.0 };
            p.within((m - c(want, 0.0)).norm(), 1e-12, || {
                format!("t={t} x={x:?} n={}: {m}", n + 1)
            });
        }
    }
    let ones = moment_sequence(s(0.5), Hypercomplex::ONE, 8)
        .iter()
        .all(|m| (m - c(1.0, 0.0)).norm() <= 1e-14);
    report(
        11,
        "moment sequences",
        &[
            ("t=-2 (3,0) -> 3,9,27,81", g.ok(), g.summary()),
            ("t=1 (0,1) -> 0,1,0,1,0,1", a.ok(), a.summary()),
            ("projection moments are constant", p.ok(), p.summary()),
            ("identity projection -> all ones", ones, "8 terms".into()),
        ],
    );
}

#[test]
fn criterion_12_verify_suite() {
    let start = Instant::now();
    let report_ = verify::run(&VerifyOptions {
        seed: 42,
        samples: 10_000,
        fault: None,
    });
    let failing: Vec<_> = report_.failures().map(|r| r.name).collect();
    report(
        12,
        "full verify suite, 10000 samples",
        &[
            (
                "all invariants hold",
                failing.is_empty(),
                if failing.is_empty() {
                    format!("{} invariants", report_.invariants.len())
                } else {
                    failing.join(", ")
                },
            ),
            timed(Duration::from_secs(10), start),
        ],
    );
}
