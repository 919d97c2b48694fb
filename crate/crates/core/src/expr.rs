//! Arithmetic expressions over hypercomplex literals, as accepted by
//! `shc eval`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '(' complex ',' complex ')' | '(' expr ')' | 'inv' '(' expr ')' | '-' factor
//! ```
//!
//! Products use `·_t`; operators at the same level associate to the left.

use crate::error::Result;
use crate::ring::{add, inverse_with_tol, mul, Hypercomplex, Scale};
use crate::text::Cursor;

/// Evaluates `src` in `H_t`. `tol` is the singularity tolerance for `inv`.
pub fn eval(t: Scale, src: &str, tol: f64) -> Result<Hypercomplex> {
    let mut p = Parser {
        cur: Cursor::new(src),
        t,
        tol,
    };
    let v = p.expr()?;
    if !p.cur.at_end() {
        return Err(p.cur.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    cur: Cursor<'a>,
    t: Scale,
    tol: f64,
}

impl Parser<'_> {
    fn expr(&mut self) -> Result<Hypercomplex> {
        let mut acc = self.term()?;
        loop {
            if self.cur.eat(b'+') {
                acc = add(acc, self.term()?);
            } else if self.cur.eat(b'-') {
                acc = add(acc, -self.term()?);
            } else {
                break;
            }
            acc = acc.ensure_finite()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Hypercomplex> {
        let mut acc = self.factor()?;
        while self.cur.eat(b'*') {
            acc = mul(self.t, acc, self.factor()?).ensure_finite()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Hypercomplex> {
        if self.cur.eat(b'-') {
            return Ok(-self.factor()?);
        }
        if self.cur.eat_keyword("inv") {
            self.cur.expect(b'(')?;
            let x = self.expr()?;
            self.cur.expect(b')')?;
            return inverse_with_tol(self.t, x, self.tol);
        }
        if self.cur.peek() != Some(b'(') {
            return Err(self.cur.error("expected '(' or 'inv'"));
        }
        let start = self.cur.pos;
        if let Ok(x) = self.cur.hypercomplex() {
            return Ok(x);
        }
        self.cur.pos = start;
        self.cur.expect(b'(')?;
        let x = self.expr()?;
        self.cur.expect(b')')?;
        Ok(x)
    }
}
