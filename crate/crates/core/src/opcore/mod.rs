//! Canonical forms `sum_k b_k(H) v_k + sum_ij c_ij e_ij` and their ring operations.
//!
//! `v_k` is `I^k` for `k > 0`, `1` for `k = 0` and `D^|k|` for `k < 0`,
//! with the coefficient `b_k(H)` written on the left.

mod fpart;
pub mod json;
mod mul;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use fpart::FPart;

use crate::error::{Error, Result};
use crate::exactmath::{q, HPoly, Q};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Operator {
    graded: BTreeMap<i64, HPoly>,
    fpart: FPart,
}

impl Operator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn scalar(c: Q) -> Self {
        Self::graded_term(0, HPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::scalar(q(n))
    }

    /// `b(H) v_k`.
    pub fn graded_term(k: i64, b: HPoly) -> Self {
        let mut a = Self::zero();
        a.add_graded(k, b);
        a
    }

    pub fn poly_h(b: HPoly) -> Self {
        Self::graded_term(0, b)
    }

    /// Differentiation.
    pub fn d() -> Self {
        Self::graded_term(-1, HPoly::one())
    }

    /// Integration.
    pub fn integral() -> Self {
        Self::graded_term(1, HPoly::one())
    }

    pub fn h() -> Self {
        Self::graded_term(0, HPoly::var())
    }

    /// Multiplication by `x`, canonically `(H-1) I`.
    pub fn x() -> Self {
        Self::graded_term(1, HPoly::from_ints(&[-1, 1]))
    }

    pub fn e(i: usize, j: usize) -> Self {
        Self::from_fpart(FPart::unit(i, j))
    }

    pub fn from_fpart(fpart: FPart) -> Self {
        Operator { graded: BTreeMap::new(), fpart }
    }

    pub fn d_pow(n: u32) -> Self {
        Self::graded_term(-(n as i64), HPoly::one())
    }

    pub fn i_pow(n: u32) -> Self {
        Self::graded_term(n as i64, HPoly::one())
    }

    pub(crate) fn add_graded(&mut self, k: i64, b: HPoly) {
        if b.is_zero() {
            return;
        }
        match self.graded.get_mut(&k) {
            Some(slot) => {
                let s = &*slot + &b;
                if s.is_zero() {
                    self.graded.remove(&k);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.graded.insert(k, b);
            }
        }
    }

    pub(crate) fn add_f(&mut self, i: usize, j: usize, c: Q) {
        self.fpart.add_entry(i, j, c);
    }

    pub fn graded(&self) -> &BTreeMap<i64, HPoly> {
        &self.graded
    }

    pub fn fpart(&self) -> &FPart {
        &self.fpart
    }

    pub fn graded_coeff(&self, k: i64) -> Option<&HPoly> {
        self.graded.get(&k)
    }

    /// The operator with its F-part removed.
    pub fn graded_part(&self) -> Self {
        Operator { graded: self.graded.clone(), fpart: FPart::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.graded.is_empty() && self.fpart.is_empty()
    }

    /// Membership in the ideal F (finite rank on K[x]).
    pub fn is_compact(&self) -> bool {
        self.graded.is_empty()
    }

    pub fn deg_f(&self) -> i64 {
        self.fpart.degree()
    }

    /// `(min, max)` graded degree of the non-F part.
    pub fn support_bounds(&self) -> Result<(i64, i64)> {
        let lo = self.graded.keys().next().ok_or(Error::NoGradedPart)?;
        let hi = self.graded.keys().next_back().unwrap();
        Ok((*lo, *hi))
    }

    pub fn pi_plus(&self) -> Result<i64> {
        Ok(self.support_bounds()?.1)
    }

    /// Scalar `c` when the operator is `c + f` with `f` in F.
    pub fn scalar_part(&self) -> Option<Q> {
        match self.graded.len() {
            0 => Some(Q::zero()),
            1 => {
                let b = self.graded.get(&0)?;
                b.is_constant().then(|| b.coeff(0))
            }
            _ => None,
        }
    }

    pub fn trace_f(&self) -> Result<Q> {
        if !self.is_compact() {
            return Err(Error::TraceOnlyOnF);
        }
        Ok(self.fpart.trace())
    }

    /// Homogeneous component of degree `k`; `e_ij` has degree `i - j`.
    pub fn graded_component(&self, k: i64) -> Self {
        let mut out = Self::zero();
        if let Some(b) = self.graded.get(&k) {
            out.add_graded(k, b.clone());
        }
        for (i, j, c) in self.fpart.iter() {
            if i as i64 - j as i64 == k {
                out.add_f(i, j, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Operator {
            graded: self.graded.iter().map(|(k, b)| (*k, b.scale(c))).collect(),
            fpart: self.fpart.scale(c),
        }
    }

    pub fn mul(&self, other: &Operator) -> Operator {
        mul::mul(self, other)
    }

    pub fn pow(&self, n: u32) -> Operator {
        let mut acc = Operator::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The involution fixing H with `D* = I`, `e_ij* = e_ji`.
    pub fn star(&self) -> Operator {
        let mut out = Operator::zero();
        for (&k, b) in &self.graded {
            // (b(H) v_k)* = v_{-k} b(H) = b(H + k) v_{-k}
            out.add_graded(-k, b.shift(k));
        }
        out.fpart = self.fpart.transpose();
        out
    }

    pub fn commutator(&self, other: &Operator) -> Operator {
        &self.mul(other) - &other.mul(self)
    }

    pub fn commutes(&self, other: &Operator) -> bool {
        self.mul(other) == other.mul(self)
    }
}

pub fn add(a: &Operator, b: &Operator) -> Operator {
    a + b
}

pub fn mul(a: &Operator, b: &Operator) -> Operator {
    a.mul(b)
}

pub fn star(a: &Operator) -> Operator {
    a.star()
}

pub fn commutes(a: &Operator, b: &Operator) -> bool {
    a.commutes(b)
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, o: &Operator) -> Operator {
        let mut out = self.clone();
        for (&k, b) in &o.graded {
            out.add_graded(k, b.clone());
        }
        for (i, j, c) in o.fpart.iter() {
            out.add_f(i, j, c.clone());
        }
        out
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scale(&-Q::one())
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, o: &Operator) -> Operator {
        self + &(-o)
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, o: &Operator) -> Operator {
        Operator::mul(self, o)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Operator {
            type Output = Operator;
            fn $m(self, o: Operator) -> Operator { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub);

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        -&self
    }
}
