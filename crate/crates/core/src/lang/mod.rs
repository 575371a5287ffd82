//! Expression syntax for operators, polynomials in x and elements of the quotient ring.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*" factor) | ("/" nat))*
//! factor := ["-"] base ["^" nat]
//! base   := "D" | "I" | "H" | "x" | "e" "[" nat "," nat "]" | rational | "(" expr ")"
//! rational := int ["/" nat]
//! ```
//!
//! `/ nat` divides by a nonzero integer constant. The quotient-ring form also
//! accepts negative exponents; polynomials in `x` read `x^2/2` as `(x^2)/2`.

mod ast;
mod lexer;
mod parser;
mod print;

pub use ast::{Atom, Expr};
pub use parser::{parse_expr, Mode};
pub use print::print;

use crate::error::{Error, ParseError, Result};
use crate::exactmath::{Q, XPoly};
use crate::opcore::Operator;

/// Parse an operator expression into canonical form.
pub fn parse(text: &str) -> Result<Operator> {
    let expr = parse_expr(text, Mode::Operator)?;
    Ok(eval_operator(&expr))
}

/// Parse a polynomial in `x`.
pub fn parse_xpoly(text: &str) -> Result<XPoly> {
    let expr = parse_expr(text, Mode::Poly)?;
    Ok(eval_xpoly(&expr))
}

fn eval_operator(e: &Expr) -> Operator {
    match e {
        Expr::Sum(ts) => ts.iter().fold(Operator::zero(), |acc, t| &acc + &eval_operator(t)),
        Expr::Product(fs) => fs.iter().fold(Operator::one(), |acc, f| acc.mul(&eval_operator(f))),
        Expr::Power(b, n, _) => eval_operator(b).pow(*n as u32),
        Expr::Negation(b) => -&eval_operator(b),
        Expr::Atom(a) => match a {
            Atom::D => Operator::d(),
            Atom::I => Operator::integral(),
            Atom::H => Operator::h(),
            Atom::X => Operator::x(),
            Atom::E(i, j) => Operator::e(*i, *j),
            Atom::Rational(c) => Operator::scalar(c.clone()),
        },
    }
}

fn eval_xpoly(e: &Expr) -> XPoly {
    match e {
        Expr::Sum(ts) => ts.iter().fold(XPoly::zero(), |acc, t| &acc + &eval_xpoly(t)),
        Expr::Product(fs) => fs.iter().fold(XPoly::one(), |acc, f| &acc * &eval_xpoly(f)),
        Expr::Power(b, n, _) => eval_xpoly(b).pow(*n as u32),
        Expr::Negation(b) => -&eval_xpoly(b),
        Expr::Atom(Atom::X) => XPoly::var(),
        Expr::Atom(Atom::Rational(c)) => XPoly::constant(c.clone()),
        // the parser rejects every other atom in polynomial mode
        Expr::Atom(_) => unreachable!("operator atom in polynomial"),
    }
}

pub(crate) fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError { line, column, message: message.into() })
}

/// Printed form of a rational as accepted back by the parser.
pub fn rational_text(c: &Q) -> String {
    c.to_string()
}
