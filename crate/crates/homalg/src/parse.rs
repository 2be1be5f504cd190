//! Text form of polynomials.
//!
//! ```text
//! polynomial := [ '-' ] term { ( '+' | '-' ) term }
//! term       := factor { '*' factor }
//! factor     := base [ '^' natural ]
//! base       := coefficient | variable | '(' polynomial ')'
//! coefficient:= natural [ '/' natural ]
//! ```
//!
//! `*` is required between factors; variable names are ASCII identifiers
//! declared by the ring.

use crate::error::{EngineError, Result};
use crate::field::Field;
use crate::poly::{Ambient, Polynomial};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(i64),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Eof,
}

struct Sp {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> EngineError {
        EngineError::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn next_tok(&mut self) -> Result<Sp> {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let mk = |tok| Sp { tok, line, col };
        let c = match self.peek() {
            None => return Ok(mk(Tok::Eof)),
            Some(c) => c,
        };
        let t = match c {
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'/' => {
                self.bump();
                Tok::Slash
            }
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut v: i64 = 0;
                while let Some(d @ b'0'..=b'9') = self.peek() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((d - b'0') as i64))
                        .ok_or_else(|| self.err("integer literal too large"))?;
                    self.bump();
                }
                Tok::Nat(v)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == b'_' {
                        name.push(c as char);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(name)
            }
            other => return Err(self.err(format!("unexpected character `{}`", other as char))),
        };
        Ok(mk(t))
    }
}

struct Parser<'a, F: Field> {
    amb: &'a Ambient,
    lexer: Lexer<'a>,
    cur: Sp,
    _marker: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(amb: &'a Ambient, src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let cur = lexer.next_tok()?;
        Ok(Parser { amb, lexer, cur, _marker: std::marker::PhantomData })
    }

    fn advance(&mut self) -> Result<()> {
        self.cur = self.lexer.next_tok()?;
        Ok(())
    }

    fn err_here(&self, msg: impl Into<String>) -> EngineError {
        EngineError::Parse { line: self.cur.line, col: self.cur.col, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut negate = false;
        if self.cur.tok == Tok::Minus {
            negate = true;
            self.advance()?;
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.amb.neg(&acc);
        }
        loop {
            match self.cur.tok {
                Tok::Plus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = self.amb.add(&acc, &t);
                }
                Tok::Minus => {
                    self.advance()?;
                    let t = self.term()?;
                    acc = self.amb.sub(&acc, &t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.cur.tok == Tok::Star {
            self.advance()?;
            let f = self.factor()?;
            acc = self.amb.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.base()?;
        if self.cur.tok == Tok::Caret {
            self.advance()?;
            match self.cur.tok {
                Tok::Nat(e) => {
                    if e > u32::MAX as i64 {
                        return Err(self.err_here("exponent too large"));
                    }
                    self.advance()?;
                    Ok(self.amb.pow(&base, e as u32))
                }
                _ => Err(self.err_here("expected a natural number exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial<F>> {
        match self.cur.tok.clone() {
            Tok::Nat(n) => {
                self.advance()?;
                if self.cur.tok == Tok::Slash {
                    self.advance()?;
                    match self.cur.tok {
                        Tok::Nat(d) => {
                            self.advance()?;
                            let c = F::from_fraction(n, d)?;
                            Ok(self.amb.constant(c))
                        }
                        _ => Err(self.err_here("expected a denominator after `/`")),
                    }
                } else {
                    Ok(self.amb.constant(F::from_i64(n)))
                }
            }
            Tok::Ident(name) => {
                let idx = self
                    .amb
                    .var_index(&name)
                    .ok_or(EngineError::UnknownVariable(name))?;
                self.advance()?;
                Ok(self.amb.var_poly(idx))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.cur.tok != Tok::RParen {
                    return Err(self.err_here("expected `)`"));
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::Minus => {
                // unary minus binding tighter than `+`/`-`, e.g. `x + -3*y`
                self.advance()?;
                let f = self.factor()?;
                Ok(self.amb.neg(&f))
            }
            other => Err(self.err_here(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parse over the ambient polynomial ring (no quotient reduction).
pub fn parse_polynomial_ambient<F: Field>(amb: &Ambient, src: &str) -> Result<Polynomial<F>> {
    let mut p = Parser::<F>::new(amb, src)?;
    let poly = p.expr()?;
    if p.cur.tok != Tok::Eof {
        return Err(p.err_here("trailing input after polynomial"));
    }
    // normalize defensively; arithmetic already keeps canonical form
    Ok(amb.normalize(poly.terms().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf32003, Rat};
    use crate::monomial::MonomialOrder;

    fn amb() -> Ambient {
        Ambient::new(
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            MonomialOrder::GrevLex,
        )
    }

    #[test]
    fn two_term_parse() {
        let a = amb();
        let p: Polynomial<Gf32003> = parse_polynomial_ambient(&a, "x*y + z^2").unwrap();
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn identity_cancellation() {
        let a = amb();
        let p: Polynomial<Gf32003> = parse_polynomial_ambient(&a, "x^2*y - x*(x*y)").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn unknown_variable() {
        let a = amb();
        let e = parse_polynomial_ambient::<Gf32003>(&a, "x + t").unwrap_err();
        assert_eq!(e, EngineError::UnknownVariable("t".into()));
    }

    #[test]
    fn malformed_and_division_by_zero() {
        let a = amb();
        assert!(matches!(
            parse_polynomial_ambient::<Gf32003>(&a, "x + (* y"),
            Err(EngineError::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial_ambient::<Gf32003>(&a, "x y"),
            Err(EngineError::Parse { .. })
        ));
        assert_eq!(
            parse_polynomial_ambient::<Gf32003>(&a, "1/0"),
            Err(EngineError::DivisionByZero)
        );
    }

    #[test]
    fn rational_coefficients_roundtrip() {
        let a = amb();
        let p: Polynomial<Rat> = parse_polynomial_ambient(&a, "1/2*x^2 - 3*y*z").unwrap();
        let s = a.render(&p);
        let q: Polynomial<Rat> = parse_polynomial_ambient(&a, &s).unwrap();
        assert_eq!(p, q);
    }
}
