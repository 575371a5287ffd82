//! The quotient by the ideal F: a skew Laurent ring in `D` over `Q[H]`.
//!
//! Elements are written `sum_k D^k beta_k(H)` with coefficients on the
//! right. Multiplication uses `beta(H) D^k = D^k beta(H - k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{is_irreducible, HPoly, Q};
use crate::lang::{parse_error, parse_expr, Atom, Expr, Mode};
use crate::opcore::json::{coeff_strings, poly_from_strings};
use crate::opcore::Operator;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct B1Element {
    coeffs: BTreeMap<i64, HPoly>,
}

impl B1Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, HPoly::one())
    }

    /// `D^k beta(H)`.
    pub fn term(k: i64, beta: HPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(k, beta);
        e
    }

    pub fn d_pow(k: i64) -> Self {
        Self::term(k, HPoly::one())
    }

    pub fn poly(beta: HPoly) -> Self {
        Self::term(0, beta)
    }

    pub fn scalar(c: Q) -> Self {
        Self::poly(HPoly::constant(c))
    }

    fn add_term(&mut self, k: i64, beta: HPoly) {
        if beta.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&k) {
            Some(old) => &old + &beta,
            None => beta,
        };
        if !sum.is_zero() {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, HPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> HPoly {
        self.coeffs.get(&k).cloned().unwrap_or_else(HPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_key(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_key(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Largest power of `D^-1` present.
    pub fn deg_dinv(&self) -> Option<i64> {
        self.min_key().map(|k| -k)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (&k, b) in &self.coeffs {
            out.add_term(k, b.scale(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        b1_mul(self, other)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Two-sided inverse of `c D^k`, when this is such a monomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&k, b) = self.coeffs.iter().next().unwrap();
        if !b.is_constant() {
            return None;
        }
        Some(Self::term(-k, HPoly::constant(b.coeff(0).recip())))
    }

    /// Lift back to `Q<x, D, I>` in canonical left-coefficient form.
    pub fn to_operator(&self) -> Operator {
        let mut out = Operator::zero();
        for (&k, b) in &self.coeffs {
            // D^k beta(H) = beta(H + k) D^k, and D^k is v_{-k}
            out = &out + &Operator::graded_term(-k, b.shift(k));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(B1Json::from(self)).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let j: B1Json = serde_json::from_value(v.clone()).ok()?;
        let mut out = Self::zero();
        for t in j.terms {
            out.add_term(t.d, poly_from_strings(&t.poly)?);
        }
        Some(out)
    }
}

#[derive(Serialize, Deserialize)]
struct B1TermJson {
    d: i64,
    poly: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct B1Json {
    terms: Vec<B1TermJson>,
}

impl From<&B1Element> for B1Json {
    fn from(e: &B1Element) -> Self {
        B1Json { terms: e.coeffs.iter().map(|(&d, b)| B1TermJson { d, poly: coeff_strings(b) }).collect() }
    }
}

/// Image of `a` modulo F.
pub fn project(a: &Operator) -> B1Element {
    let mut out = B1Element::zero();
    for (&k, b) in a.graded() {
        // b(H) v_k = b(H) D^-k = D^-k b(H + k)
        out.add_term(-k, b.shift(k));
    }
    out
}

pub fn b1_mul(a: &B1Element, b: &B1Element) -> B1Element {
    let mut out = B1Element::zero();
    for (&ka, alpha) in &a.coeffs {
        for (&kb, beta) in &b.coeffs {
            // D^ka alpha(H) D^kb beta(H) = D^(ka+kb) alpha(H - kb) beta(H)
            out.add_term(ka + kb, &alpha.shift(-kb) * beta);
        }
    }
    out
}

impl Add for &B1Element {
    type Output = B1Element;
    fn add(self, o: &B1Element) -> B1Element {
        let mut out = self.clone();
        for (&k, b) in &o.coeffs {
            out.add_term(k, b.clone());
        }
        out
    }
}

impl Neg for &B1Element {
    type Output = B1Element;
    fn neg(self) -> B1Element {
        self.scale(&-Q::one())
    }
}

impl Sub for &B1Element {
    type Output = B1Element;
    fn sub(self, o: &B1Element) -> B1Element {
        self + &(-o)
    }
}

impl Mul for &B1Element {
    type Output = B1Element;
    fn mul(self, o: &B1Element) -> B1Element {
        b1_mul(self, o)
    }
}

/// Index computed in the quotient: `-deg_{D^-1}` of the image.
pub fn index_via_quotient(a: &Operator) -> Result<i64> {
    if a.is_compact() {
        return Err(Error::IndexUndefined);
    }
    Ok(-project(a).deg_dinv().unwrap())
}

/// The integer `i` with `g(H) = f(H + i)` for irreducible `f`, `g`.
pub fn orbit_shift(f: &HPoly, g: &HPoly) -> Result<Option<i64>> {
    for p in [f, g] {
        if !is_irreducible(p)? {
            return Err(Error::NotIrreducible(p.to_string()));
        }
    }
    let (f, g) = (f.monic(), g.monic());
    let n = f.degree().unwrap();
    if g.degree() != Some(n) {
        return Ok(None);
    }
    // f(H + i) has subleading coefficient f_{n-1} + n i
    let i = (g.coeff(n - 1) - f.coeff(n - 1)) / Q::from_integer((n as i64).into());
    if !i.is_integer() {
        return Ok(None);
    }
    let Some(i) = i.to_integer().to_i64() else { return Ok(None) };
    Ok((f.shift(i) == g).then_some(i))
}

fn search_bound(p: &HPoly) -> i64 {
    p.cauchy_bound().ceil().to_integer().to_i64().unwrap_or(i64::MAX / 4)
}

/// Shifts `i` for which some factor of `alpha(H + i)` is shared with `beta`.
fn shared_shifts(alpha: &HPoly, beta: &HPoly) -> Vec<i64> {
    if alpha.is_constant() || beta.is_constant() {
        return vec![];
    }
    let b = search_bound(alpha) + search_bound(beta);
    (-b..=b).filter(|&i| !alpha.shift(i).gcd(beta).is_constant()).collect()
}

/// `alpha < beta`: every irreducible factor of `alpha` that is orbit-comparable
/// to a factor of `beta` sits strictly below it, i.e. whenever a factor of
/// `beta(H)` equals a factor of `alpha(H + i)`, `i > 0`.
pub fn poly_less(alpha: &HPoly, beta: &HPoly) -> Result<bool> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(shared_shifts(alpha, beta).into_iter().all(|i| i > 0))
}

/// `(m, beta_0, beta_-m)` for an element `sum_{k=0..m} D^-k beta_-k`, m >= 1.
fn candidate_shape(b: &B1Element) -> Result<(i64, HPoly, HPoly)> {
    match (b.min_key(), b.max_key()) {
        (Some(lo), Some(0)) if lo < 0 => Ok((-lo, b.coeff(0), b.coeff(lo))),
        _ => Err(Error::NotCandidateShape),
    }
}

pub fn is_normal(b: &B1Element) -> Result<bool> {
    let (_, top, bottom) = candidate_shape(b)?;
    poly_less(&top, &bottom)
}

/// Product of `beta(H + i)` over `i` in `lo..=hi` (empty product is 1).
fn shifted_product(beta: &HPoly, lo: i64, hi: i64) -> HPoly {
    (lo..=hi).fold(HPoly::one(), |acc, i| &acc * &beta.shift(i))
}

/// Result of bringing an element to normal form: `beta * b = b' * alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub normal: B1Element,
    pub alpha: HPoly,
    pub beta: HPoly,
    pub steps: i64,
}

impl Normalization {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "normal": self.normal.to_json(),
            "normal_text": self.normal.to_string(),
            "alpha": coeff_strings(&self.alpha),
            "alpha_text": self.alpha.to_string(),
            "beta": coeff_strings(&self.beta),
            "beta_text": self.beta.to_string(),
            "steps": self.steps,
        })
    }
}

/// Find polynomials `alpha`, `beta` and a normal `b'` with `beta b = b' alpha`.
///
/// Step `s` uses `beta = prod_{j=-s..-1} beta_0(H + j)` and
/// `alpha = prod_{i=m-s..0} beta_0(H + i)`, which shifts the roots of the new
/// leading coefficient by `s` while keeping the bottom coefficient's roots
/// fixed up to the factor `prod_{j=1..m-1} beta_0(H + j)`.
pub fn normalize(b: &B1Element) -> Result<Normalization> {
    let (m, top, bottom) = candidate_shape(b)?;
    let gap = shared_shifts(&top, &bottom)
        .into_iter()
        .chain(shared_shifts(&top, &top))
        .map(i64::abs)
        .max()
        .unwrap_or(0);
    let cap = gap + 2 * m + 2;
    for s in 0..=cap {
        let beta = shifted_product(&top, -s, -1);
        let alpha = shifted_product(&top, m - s, 0);
        let mut normal = B1Element::zero();
        let mut exact = true;
        for k in 0..=m {
            let num = &beta.shift(k) * &b.coeff(-k);
            match num.exact_div(&alpha) {
                Some(c) => normal.add_term(-k, c),
                None => {
                    exact = false;
                    break;
                }
            }
        }
        if !exact || candidate_shape(&normal).is_err() || !is_normal(&normal)? {
            continue;
        }
        let lhs = b1_mul(&B1Element::poly(beta.clone()), b);
        let rhs = b1_mul(&normal, &B1Element::poly(alpha.clone()));
        if lhs != rhs {
            return Err(Error::Verification("normalization identity failed".into()));
        }
        return Ok(Normalization { normal, alpha, beta, steps: s });
    }
    Err(Error::NormalizeFailed(format!("no normal form within {cap} shift steps")))
}

fn key_text(k: i64) -> String {
    if k == 1 {
        "D".to_string()
    } else {
        format!("D^{k}")
    }
}

impl fmt::Display for B1Element {
    /// Terms in descending `D`-degree: `D^2 - D*(H - 1) + 3 + D^-1*(H^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, b) in self.coeffs.iter().rev() {
            let (negative, body) = if k == 0 {
                let text = b.to_string();
                let monomials = b.coeffs().iter().filter(|c| !c.is_zero()).count();
                if monomials == 1 {
                    match text.strip_prefix('-') {
                        Some(_) => (true, (-b).to_string()),
                        None => (false, text),
                    }
                } else if first {
                    (false, text)
                } else {
                    (false, format!("({text})"))
                }
            } else if b.is_constant() {
                let c = b.coeff(0);
                let negative = c < Q::zero();
                let mag = if negative { -c } else { c };
                let body = if mag.is_one() { key_text(k) } else { format!("{}*{}", mag, key_text(k)) };
                (negative, body)
            } else {
                (false, format!("{}*({})", key_text(k), b))
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Parse an element of the quotient; `e[i,j]` terms vanish and negative
/// powers of `D`, `I` and nonzero scalar multiples are allowed.
pub fn parse_b1(text: &str) -> Result<B1Element> {
    let expr = parse_expr(text, Mode::Quotient)?;
    eval(&expr)
}

fn eval(e: &Expr) -> Result<B1Element> {
    Ok(match e {
        Expr::Sum(ts) => {
            let mut acc = B1Element::zero();
            for t in ts {
                acc = &acc + &eval(t)?;
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = B1Element::one();
            for f in fs {
                acc = b1_mul(&acc, &eval(f)?);
            }
            acc
        }
        Expr::Power(b, n, (line, column)) => {
            let base = eval(b)?;
            if *n >= 0 {
                base.pow(*n as u32)
            } else {
                let inv = base
                    .monomial_inverse()
                    .ok_or_else(|| parse_error(*line, *column, "negative power of a non-invertible element"))?;
                inv.pow(n.unsigned_abs() as u32)
            }
        }
        Expr::Negation(b) => -&eval(b)?,
        Expr::Atom(a) => match a {
            Atom::D => B1Element::d_pow(1),
            Atom::I => B1Element::d_pow(-1),
            Atom::H => B1Element::poly(HPoly::var()),
            Atom::X => project(&Operator::x()),
            Atom::E(_, _) => B1Element::zero(),
            Atom::Rational(c) => B1Element::scalar(c.clone()),
        },
    })
}
