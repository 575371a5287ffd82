//! Rational scalars, univariate polynomials, integer roots and dense linear algebra.

pub mod linalg;
pub mod poly;
pub mod roots;

pub use linalg::Matrix;
pub use poly::{q, qr, HPoly, Poly, Var, VarH, VarX, XPoly, Q};
pub use roots::{integer_roots, is_irreducible};

use num_bigint::BigInt;
use num_traits::One;

/// Evaluate `p` at `v`.
pub fn poly_eval(p: &HPoly, v: &Q) -> Q {
    p.eval(v)
}

/// The shifted polynomial `p(H + k)`.
pub fn poly_shift(p: &HPoly, k: i64) -> HPoly {
    p.shift(k)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Coordinates of `p` in the divided basis `x^s / s!`.
pub fn to_divided(p: &XPoly) -> Vec<Q> {
    let mut f = BigInt::one();
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(s, c)| {
            if s > 0 {
                f *= BigInt::from(s);
            }
            c * Q::from_integer(f.clone())
        })
        .collect()
}

/// Inverse of [`to_divided`].
pub fn from_divided(c: &[Q]) -> XPoly {
    let mut f = BigInt::one();
    XPoly::from_coeffs(
        c.iter()
            .enumerate()
            .map(|(s, v)| {
                if s > 0 {
                    f *= BigInt::from(s);
                }
                v / Q::from_integer(f.clone())
            })
            .collect(),
    )
}

/// The divided power `x^s / s!`.
pub fn divided_power(s: usize) -> XPoly {
    XPoly::monomial(Q::new(BigInt::one(), factorial(s)), s)
}
