use std::io::Write;

use scaled_hypercomplex::expr;
use scaled_hypercomplex::free_probability::{
    classify_operator, word_moment_closed, word_moment_oracle, StarWord,
};
use scaled_hypercomplex::text::{
    format_complex, format_hypercomplex, format_real, json_complex, json_hypercomplex, round_sig,
};
use scaled_hypercomplex::verify::{self, Fault, VerifyOptions};
use scaled_hypercomplex::{
    classify_algebraic, classify_spectral, det, similarity_residual, spectralize, Error,
    Hypercomplex, Regime, Scale,
};
use serde_json::{json, Value};

use crate::table::{Cell, Table};
use crate::{Ctx, Failure, Format};

type Res = Result<(), Failure>;

fn io(e: std::io::Error) -> Failure {
    Failure::Domain(format!("write failed: {e}"))
}

fn emit_json(v: &Value, out: &mut dyn Write) -> Res {
    writeln!(out, "{v}").map_err(io)
}

pub fn eval(ctx: &Ctx, t: Scale, src: &str, out: &mut dyn Write) -> Res {
    let x = expr::eval(t, src, ctx.tol)?;
    let p = ctx.precision;
    match ctx.format {
        Format::Human => writeln!(out, "{}", format_hypercomplex(x, p)).map_err(io),
        Format::Json => emit_json(&json_hypercomplex(x, p), out),
        Format::Csv => {
            let mut tab = Table::new(&["a_re", "a_im", "b_re", "b_im"]);
            tab.push(
                [x.a().re, x.a().im, x.b().re, x.b().im]
                    .into_iter()
                    .map(Cell::Num)
                    .collect(),
            );
            tab.write(Format::Csv, p, out).map_err(io)
        }
    }
}

pub fn spectrum(ctx: &Ctx, t: Scale, x: Hypercomplex, out: &mut dyn Write) -> Res {
    let p = ctx.precision;
    let w = spectralize(t, x);
    let (value, conj) = (w.value(), w.symbolic_conjugate());
    let sclass = classify_spectral(t, x, ctx.tol);
    let aclass = classify_algebraic(t, x, ctx.tol);
    let d = det(t, x);
    let resid = match t.regime() {
        Regime::Negative => Some(similarity_residual(t, x)?),
        _ => None,
    };

    match ctx.format {
        Format::Human => {
            let rows = [
                ("t", format_real(t.value(), p)),
                ("x", format_hypercomplex(x, p)),
                ("radicand R", format_real(w.radicand(), p)),
                ("spectral value", format_complex(value, p)),
                ("symbolic conjugate", format_complex(conj, p)),
                ("spectral class", sclass.to_string()),
                ("algebraic class", aclass.to_string()),
                ("det", format_real(d, p)),
                (
                    "similarity residual",
                    resid.map_or_else(|| "n/a (t >= 0)".into(), |r| format_real(r, 3)),
                ),
            ];
            for (k, v) in rows {
                writeln!(out, "{k:<20} {v}").map_err(io)?;
            }
            Ok(())
        }
        Format::Json => emit_json(
            &json!({
                "t": t.value(),
                "x": json_hypercomplex(x, p),
                "spectral_value": {
                    "x": round_sig(w.x(), p),
                    "R": round_sig(w.radicand(), p),
                    "value": json_complex(value, p),
                    "conjugate": json_complex(conj, p),
                },
                "spectral_class": sclass,
                "algebraic_class": aclass,
                "det": round_sig(d, p),
                "similarity_residual": resid.map(|r| round_sig(r, 3)),
            }),
            out,
        ),
        Format::Csv => {
            let mut tab = Table::new(&[
                "t",
                "R",
                "value_re",
                "value_im",
                "conjugate_re",
                "conjugate_im",
                "spectral_class",
                "algebraic_class",
                "det",
                "similarity_residual",
            ]);
            tab.push(vec![
                Cell::Num(t.value()),
                Cell::Num(w.radicand()),
                Cell::Num(value.re),
                Cell::Num(value.im),
                Cell::Num(conj.re),
                Cell::Num(conj.im),
                Cell::Text(sclass.to_string()),
                Cell::Text(aclass.to_string()),
                Cell::Num(d),
                resid.map_or(Cell::Empty, |r| Cell::Num(round_sig(r, 3))),
            ]);
            tab.write(Format::Csv, p, out).map_err(io)
        }
    }
}

fn closed_diagnostic(e: &Error) -> String {
    match e {
        Error::SimilarityNotEstablished { .. } => "similarity not established".into(),
        Error::AdjointNotIntertwined { .. } => "adjoint not intertwined (mixed word, t != -1)".into(),
        other => other.to_string(),
    }
}

pub fn moments(ctx: &Ctx, t: Scale, x: Hypercomplex, words: &[StarWord], out: &mut dyn Write) -> Res {
    let mut tab = Table::new(&["word", "oracle_re", "oracle_im", "closed", "gap", "diagnostic"]);
    for w in words {
        let oracle = word_moment_oracle(t, x, w);
        let (closed, gap, diag) = match word_moment_closed(t, x, w) {
            Ok(v) => (Cell::Num(v), Cell::Num((v - oracle.re).abs()), Cell::Empty),
            Err(e) => (
                Cell::Empty,
                Cell::Empty,
                Cell::Text(format!("n/a ({})", closed_diagnostic(&e))),
            ),
        };
        tab.push(vec![
            Cell::Text(w.to_string()),
            Cell::Num(oracle.re),
            Cell::Num(oracle.im),
            closed,
            gap,
            diag,
        ]);
    }
    tab.write(ctx.format, ctx.precision, out).map_err(io)
}

pub fn sweep(ctx: &Ctx, x: Hypercomplex, from: f64, to: f64, step: f64, out: &mut dyn Write) -> Res {
    let mut tab = Table::new(&[
        "t",
        "det",
        "algebraic_class",
        "R",
        "spectral_class",
        "self_adjoint",
        "projection",
        "normal",
        "unitary",
        "diagnostic",
    ]);
    let count = ((to - from) / step + 1e-9).floor() as usize;
    for k in 0..=count {
        let t = Scale::new(round_sig(from + k as f64 * step, 15))?;
        let w = spectralize(t, x);
        let mut row = vec![
            Cell::Num(t.value()),
            Cell::Num(det(t, x)),
            Cell::Text(classify_algebraic(t, x, ctx.tol).to_string()),
            Cell::Num(w.radicand()),
            Cell::Text(classify_spectral(t, x, ctx.tol).to_string()),
        ];
        match classify_operator(t, x, ctx.tol) {
            Ok(c) => {
                row.extend(
                    [c.self_adjoint, c.projection, c.normal, c.unitary].map(Cell::Bool),
                );
                row.push(Cell::Empty);
            }
            Err(e) => {
                row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
                row.push(Cell::Text(e.to_string()));
            }
        }
        tab.push(row);
    }
    tab.write(ctx.format, ctx.precision, out).map_err(io)
}

pub fn verify(ctx: &Ctx, seed: u64, samples: usize, fault: Option<Fault>, out: &mut dyn Write) -> Res {
    let report = verify::run(&VerifyOptions {
        seed,
        samples,
        fault,
    });
    match ctx.format {
        Format::Json => emit_json(&serde_json::to_value(&report).expect("plain data"), out)?,
        format => {
            let mut tab = Table::new(&[
                "invariant",
                "checked",
                "failures",
                "max_residual",
                "worst_ratio",
                "passed",
            ]);
            for r in &report.invariants {
                tab.push(vec![
                    Cell::Text(r.name.into()),
                    Cell::Text(r.checked.to_string()),
                    Cell::Text(r.failures.to_string()),
                    Cell::Num(r.max_residual),
                    Cell::Num(r.worst_ratio),
                    Cell::Bool(r.passed()),
                ]);
            }
            tab.write(format, 4.min(ctx.precision).max(1), out).map_err(io)?;
        }
    }
    let failing: Vec<_> = report.failures().map(|r| r.name).collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failing.join(", ")))
    }
}
