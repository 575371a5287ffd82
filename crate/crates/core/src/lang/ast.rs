use crate::exactmath::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    D,
    I,
    H,
    X,
    E(usize, usize),
    Rational(Q),
}

/// Parsed expression. `Power` keeps the source position of its `^` for
/// errors raised during evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, i64, (usize, usize)),
    Negation(Box<Expr>),
    Atom(Atom),
}
