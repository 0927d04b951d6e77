//! Text form of algebra elements.
//!
//! The printer emits `coeff*x^i*y^j*s^l` terms joined by ` + ` in canonical
//! term order, dropping factors with exponent 0 and writing exponent 1 as the
//! bare generator; the coefficient is always a full field literal (`2,1`).
//! The parser accepts that output and, more generally, any sum of products of
//! literals and generators, e.g. `y*x - 2*s` or `x^6`. Products are evaluated
//! in the algebra, so factor order matters.

use thiserror::Error;

use super::{AlgebraElem, AlgebraError, Monomial, PbwAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("parse error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(super) fn format_elem(alg: &PbwAlgebra, e: &AlgebraElem) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let ctx = alg.ctx();
    e.terms()
        .map(|(m, c)| {
            let mut out = ctx.format(c);
            for (name, exp) in [("x", m.i), ("y", m.j), ("s", m.l)] {
                match exp {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(name);
                    }
                    n => out.push_str(&format!("*{name}^{n}")),
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

struct Parser<'a> {
    alg: &'a PbwAlgebra,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn expr(&mut self) -> Result<AlgebraElem, ParseError> {
        let alg = self.alg;
        let mut acc = alg.zero();
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                Some('+') => {
                    self.bump();
                    false
                }
                None => break,
                Some(c) => return Err(self.err(format!("expected '+' or '-', found {c:?}"))),
            };
            let term = self.term()?;
            acc = if negate {
                alg.sub(&acc, &term)?
            } else {
                alg.add(&acc, &term)?
            };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraElem, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.factor()?;
            acc = self.alg.multiply(&acc, &f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElem, ParseError> {
        let alg = self.alg;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                while self.peek_raw() == Some(',') {
                    self.bump();
                    if self.digits().is_none() {
                        return Err(self.err("expected a residue after ','"));
                    }
                }
                let lit = &self.src[start..self.pos];
                let c = alg
                    .ctx()
                    .parse(lit)
                    .map_err(|e| ParseError::Syntax {
                        pos: start,
                        msg: e.to_string(),
                    })?;
                Ok(alg.scalar(c))
            }
            Some(g @ ('x' | 'y' | 's')) => {
                self.bump();
                let mut exp = 1u32;
                if self.peek_raw() == Some('^') {
                    self.bump();
                    let d = self
                        .digits()
                        .ok_or_else(|| self.err("expected an exponent after '^'"))?;
                    exp = d.parse().map_err(|_| self.err("exponent out of range"))?;
                }
                let one = alg.ctx().one();
                let m = match g {
                    'x' => Monomial::new(exp, 0, 0),
                    'y' => Monomial::new(0, exp, 0),
                    _ => Monomial::new(0, 0, exp % alg.params().r()),
                };
                if m.degree() > alg.degree_bound() {
                    return Err(AlgebraError::DegreeBound {
                        degree: m.degree(),
                        bound: alg.degree_bound(),
                    }
                    .into());
                }
                Ok(alg.monomial(m, one))
            }
            Some(c) => Err(self.err(format!("unexpected character {c:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse_elem(alg: &PbwAlgebra, s: &str) -> Result<AlgebraElem, ParseError> {
    let mut p = Parser { alg, src: s, pos: 0 };
    if p.peek().is_none() {
        return Err(p.err("empty element"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use crate::algebra::{AlgebraParams, Monomial, PbwAlgebra, Planck};
    use crate::field::make_field;
    use std::sync::Arc;

    fn alg() -> PbwAlgebra {
        let ctx = Arc::new(make_field(5, 2).unwrap());
        let c = vec![ctx.parse("1,2").unwrap()];
        PbwAlgebra::new(AlgebraParams::new(ctx, 2, Planck::One, c).unwrap())
    }

    #[test]
    fn prints_canonically() {
        let a = alg();
        let ctx = a.ctx();
        let e = a
            .add(
                &a.monomial(Monomial::new(2, 1, 1), ctx.parse("2,1").unwrap()),
                &a.monomial(Monomial::ONE, ctx.from_int(3)),
            )
            .unwrap();
        assert_eq!(a.format(&e), "3,0 + 2,1*x^2*y*s");
        assert_eq!(a.format(&a.zero()), "0");
    }

    #[test]
    fn parses_words_in_the_algebra() {
        let a = alg();
        let yx = a.parse("y*x").unwrap();
        assert_eq!(yx, a.multiply(&a.y(), &a.x()).unwrap());
        let back = a.parse(&a.format(&yx)).unwrap();
        assert_eq!(back, yx);
        assert_eq!(a.parse("x - x").unwrap(), a.zero());
        assert_eq!(a.parse("-x").unwrap(), a.neg(&a.x()).unwrap());
        assert_eq!(a.parse(" x^2 ").unwrap(), a.pow(&a.x(), 2).unwrap());
    }

    #[test]
    fn rejects_garbage() {
        let a = alg();
        for bad in ["", "x +", "z", "x^", "1,", "x y", "1,2,3*x"] {
            assert!(a.parse(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
