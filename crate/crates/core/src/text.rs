//! Literal syntax and rendering.
//!
//! Complex numbers are written `re+imi` (`3`, `-2.5i`, `1+3i`, `i`, `1e-3-i`)
//! and hypercomplex literals as `(a, b)`, e.g. `(1+3i, -1+1i)`. The JSON forms
//! are `{"a":[re,im],"b":[re,im]}` for elements and row-major
//! `[[[re,im],[re,im]],[[re,im],[re,im]]]` for matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::Hypercomplex;
use crate::Complex;

/// Default number of significant digits in rendered output.
pub const DEFAULT_PRECISION: usize = 12;

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, ch: u8) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", ch as char)))
        }
    }

    pub(crate) fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    /// An unsigned decimal literal, if one starts here.
    fn number(&mut self) -> Option<f64> {
        self.skip_ws();
        let start = self.pos;
        let s = self.src;
        let mut p = self.pos;
        let digits = |p: &mut usize| {
            let from = *p;
            while *p < s.len() && s[*p].is_ascii_digit() {
                *p += 1;
            }
            *p > from
        };
        let int = digits(&mut p);
        let mut frac = false;
        if p < s.len() && s[p] == b'.' {
            p += 1;
            frac = digits(&mut p);
        }
        if !int && !frac {
            return None;
        }
        if p < s.len() && (s[p] == b'e' || s[p] == b'E') {
            let mut q = p + 1;
            if q < s.len() && (s[q] == b'+' || s[q] == b'-') {
                q += 1;
            }
            if digits(&mut q) {
                p = q;
            }
        }
        let text = std::str::from_utf8(&s[start..p]).ok()?;
        let v = text.parse().ok()?;
        self.pos = p;
        Some(v)
    }

    /// A complex number: signed real and/or imaginary terms.
    pub(crate) fn complex(&mut self) -> Result<Complex> {
        let start = self.pos;
        let mut re: Option<f64> = None;
        let mut im: Option<f64> = None;
        let mut first = true;
        loop {
            let sign = if self.eat(b'-') {
                -1.0
            } else if self.eat(b'+') || first {
                1.0
            } else {
                break;
            };
            let mag = self.number();
            let imaginary = self.peek() == Some(b'i');
            if imaginary {
                self.pos += 1;
            }
            let slot = match (mag, imaginary) {
                (None, false) => return Err(self.error("expected a number")),
                (_, true) => &mut im,
                (Some(_), false) => &mut re,
            };
            if slot.is_some() {
                return Err(self.error("repeated real or imaginary part"));
            }
            *slot = Some(sign * mag.unwrap_or(1.0));
            first = false;
        }
        if re.is_none() && im.is_none() {
            return Err(Error::parse(start, "expected a complex number"));
        }
        let z = Complex::new(re.unwrap_or(0.0), im.unwrap_or(0.0));
        if z.re.is_finite() && z.im.is_finite() {
            Ok(z)
        } else {
            Err(Error::parse(start, "number out of range"))
        }
    }

    /// `(a, b)`.
    pub(crate) fn hypercomplex(&mut self) -> Result<Hypercomplex> {
        self.expect(b'(')?;
        let a = self.complex()?;
        self.expect(b',')?;
        let b = self.complex()?;
        self.expect(b')')?;
        Hypercomplex::new(a, b)
    }
}

pub fn parse_complex(s: &str) -> Result<Complex> {
    let mut cur = Cursor::new(s);
    let z = cur.complex()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(z)
}

/// Parses `(a, b)` or the JSON object form.
pub fn parse_hypercomplex(s: &str) -> Result<Hypercomplex> {
    if s.trim_start().starts_with('{') {
        return serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()));
    }
    let mut cur = Cursor::new(s);
    let x = cur.hypercomplex()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(x)
}

/// `v` with `digits` significant digits, without trailing zeros.
pub fn format_real(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 || !v.is_finite() {
        return if v.is_finite() { "0".into() } else { v.to_string() };
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, v))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.to_string()
    }
}

/// `v` rounded to `digits` significant digits.
pub fn round_sig(v: f64, digits: usize) -> f64 {
    format_real(v, digits).parse().unwrap_or(v)
}

/// `x+yi` form; zero parts are dropped.
pub fn format_complex(z: Complex, digits: usize) -> String {
    let re = format_real(z.re, digits);
    let im = format_real(z.im, digits);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

pub fn format_hypercomplex(x: Hypercomplex, digits: usize) -> String {
    format!(
        "({}, {})",
        format_complex(x.a(), digits),
        format_complex(x.b(), digits)
    )
}

/// A pair `[re, im]` rounded for JSON output.
pub fn json_complex(z: Complex, digits: usize) -> [f64; 2] {
    [round_sig(z.re, digits), round_sig(z.im, digits)]
}

#[derive(Serialize)]
struct HypercomplexJson {
    a: [f64; 2],
    b: [f64; 2],
}

pub fn json_hypercomplex(x: Hypercomplex, digits: usize) -> serde_json::Value {
    serde_json::to_value(HypercomplexJson {
        a: json_complex(x.a(), digits),
        b: json_complex(x.b(), digits),
    })
    .expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("3").unwrap(), c(3., 0.));
        assert_eq!(parse_complex("-2.5i").unwrap(), c(0., -2.5));
        assert_eq!(parse_complex("1+3i").unwrap(), c(1., 3.));
        assert_eq!(parse_complex(" -1 + 1i ").unwrap(), c(-1., 1.));
        assert_eq!(parse_complex("i").unwrap(), c(0., 1.));
        assert_eq!(parse_complex("-i").unwrap(), c(0., -1.));
        assert_eq!(parse_complex("1e-3-i").unwrap(), c(1e-3, -1.));
        assert_eq!(parse_complex("2i+.5").unwrap(), c(0.5, 2.));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+2").is_err());
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("1e999").is_err());
        assert!(parse_complex("nan").is_err());
    }

    #[test]
    fn hypercomplex_literals() {
        let x = parse_hypercomplex("(1+3i,-1+1i)").unwrap();
        assert_eq!((x.a(), x.b()), (c(1., 3.), c(-1., 1.)));
        let y = parse_hypercomplex(r#"{"a":[1,3],"b":[-1,1]}"#).unwrap();
        assert_eq!(x, y);
        assert!(parse_hypercomplex("(1,2").unwrap_err().is_parse());
        assert!(parse_hypercomplex("(1,2) x").unwrap_err().is_parse());
        assert!(parse_hypercomplex(r#"{"a":[1],"b":[0,0]}"#).unwrap_err().is_parse());
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0, 12), "0");
        assert_eq!(format_real(-0.0, 12), "0");
        assert_eq!(format_real(1.0, 12), "1");
        assert_eq!(format_real(11f64.sqrt(), 12), "3.31662479036");
        assert_eq!(format_real(-2.5, 12), "-2.5");
        assert_eq!(format_real(1e-7, 12), "1e-7");
        assert_eq!(format_real(123456789012345.0, 12), "1.23456789012e14");
        assert_eq!(format_real(1e-16, 3), "1e-16");
        assert_eq!(format_real(0.1 + 0.2, 12), "0.3");
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(c(1., 3.), 12), "1+3i");
        assert_eq!(format_complex(c(1., -3.), 12), "1-3i");
        assert_eq!(format_complex(c(0., -3.), 12), "-3i");
        assert_eq!(format_complex(c(-2., 0.), 12), "-2");
        assert_eq!(format_complex(c(0., 0.), 12), "0");
    }

    fn decimal() -> impl Strategy<Value = f64> {
        (-999_999_999i64..999_999_999, 0u32..6).prop_map(|(m, k)| m as f64 / 10f64.powi(k as i32))
    }

    proptest! {
        #[test]
        fn json_round_trip(ar in decimal(), ai in decimal(), br in decimal(), bi in decimal()) {
            let x = Hypercomplex::from_parts(ar, ai, br, bi).unwrap();
            let js = serde_json::to_string(&json_hypercomplex(x, DEFAULT_PRECISION)).unwrap();
            let back = parse_hypercomplex(&js).unwrap();
            for (p, q) in [(back.a(), x.a()), (back.b(), x.b())] {
                prop_assert_eq!(p.re.to_bits(), q.re.to_bits());
                prop_assert_eq!(p.im.to_bits(), q.im.to_bits());
            }
        }

        #[test]
        fn human_round_trip(ar in decimal(), ai in decimal(), br in decimal(), bi in decimal()) {
            let x = Hypercomplex::from_parts(ar, ai, br, bi).unwrap();
            let back = parse_hypercomplex(&format_hypercomplex(x, DEFAULT_PRECISION)).unwrap();
            prop_assert_eq!(back, x + Hypercomplex::ZERO);
        }
    }
}
