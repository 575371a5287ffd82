use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::{Atom, Expr};
use super::lexer::{tokenize, Tok, Token};
use super::parse_error;
use crate::error::Result;
use crate::exactmath::Q;

const MAX_EXPONENT: i64 = 100_000;

/// Which grammar variant to accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Operators: natural exponents only.
    Operator,
    /// Polynomials in x; `x^2/2` divides after the power.
    Poly,
    /// Quotient-ring elements: integer exponents allowed.
    Quotient,
}

pub fn parse_expr(text: &str, mode: Mode) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, mode };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(parse_error(t.line, t.column, "expected an operator or end of input"));
    }
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token> {
        let t = self.next();
        if t.tok != want {
            return Err(parse_error(t.line, t.column, format!("expected {what}")));
        }
        Ok(t)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    terms.push(Expr::Negation(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    factors.push(self.factor()?);
                }
                Tok::Slash => {
                    self.next();
                    let d = self.nat("a nonzero integer divisor")?;
                    if d.0.is_zero() {
                        return Err(parse_error(d.1, d.2, "division by zero"));
                    }
                    factors.push(Expr::Atom(Atom::Rational(Q::new(1.into(), d.0))));
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.next();
            let inner = self.factor()?;
            return Ok(Expr::Negation(Box::new(inner)));
        }
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let negative = if self.peek().tok == Tok::Minus {
            let m = self.next();
            if self.mode != Mode::Quotient {
                return Err(parse_error(m.line, m.column, "negative exponent"));
            }
            true
        } else {
            false
        };
        let (n, line, column) = self.nat("an exponent")?;
        if self.peek().tok == Tok::Slash && self.mode != Mode::Poly {
            let s = self.peek();
            return Err(parse_error(s.line, s.column, "fractional exponent"));
        }
        let n = n.to_i64().filter(|&v| v <= MAX_EXPONENT);
        let Some(n) = n else { return Err(parse_error(line, column, "exponent too large")) };
        Ok(Expr::Power(Box::new(base), if negative { -n } else { n }, (caret.line, caret.column)))
    }

    fn nat(&mut self, what: &str) -> Result<(BigInt, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok((n, t.line, t.column)),
            _ => Err(parse_error(t.line, t.column, format!("expected {what}"))),
        }
    }

    fn index(&mut self) -> Result<usize> {
        if self.peek().tok == Tok::Minus {
            let t = self.peek();
            return Err(parse_error(t.line, t.column, "E with negative index"));
        }
        let (n, line, column) = self.nat("a matrix-unit index")?;
        n.to_usize()
            .filter(|&v| v <= u32::MAX as usize)
            .ok_or_else(|| parse_error(line, column, "matrix-unit index too large"))
    }

    fn base(&mut self) -> Result<Expr> {
        let t = self.next();
        let operator_atom = |atom: Atom, mode: Mode| {
            if mode == Mode::Poly {
                Err(parse_error(t.line, t.column, "operator symbol in a polynomial"))
            } else {
                Ok(Expr::Atom(atom))
            }
        };
        match t.tok {
            Tok::D => operator_atom(Atom::D, self.mode),
            Tok::I => operator_atom(Atom::I, self.mode),
            Tok::H => operator_atom(Atom::H, self.mode),
            Tok::X => Ok(Expr::Atom(Atom::X)),
            Tok::E => {
                if self.mode == Mode::Poly {
                    return Err(parse_error(t.line, t.column, "operator symbol in a polynomial"));
                }
                self.expect(Tok::LBracket, "'['")?;
                let i = self.index()?;
                self.expect(Tok::Comma, "','")?;
                let j = self.index()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(Expr::Atom(Atom::E(i, j)))
            }
            Tok::Int(n) => {
                let is_fraction = self.peek().tok == Tok::Slash
                    && matches!(self.tokens.get(self.pos + 1).map(|t| &t.tok), Some(Tok::Int(_)));
                if is_fraction {
                    self.next();
                    let (d, line, column) = self.nat("a denominator")?;
                    if d.is_zero() {
                        return Err(parse_error(line, column, "division by zero"));
                    }
                    return Ok(Expr::Atom(Atom::Rational(Q::new(n, d))));
                }
                Ok(Expr::Atom(Atom::Rational(Q::from_integer(n))))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::End => Err(parse_error(t.line, t.column, "unexpected end of input")),
            _ => Err(parse_error(t.line, t.column, "expected an operand")),
        }
    }
}
