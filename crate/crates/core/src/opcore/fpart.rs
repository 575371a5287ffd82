use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactmath::{factorial, Matrix, Q};

/// Finite sparse combination of matrix units `e_ij` (divided basis).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FPart {
    entries: BTreeMap<(usize, usize), Q>,
}

impl FPart {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize, j: usize) -> Self {
        let mut f = Self::new();
        f.add_entry(i, j, Q::from_integer(1.into()));
        f
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.entries.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest n with support in `[0..n]^2`, or -1 when empty.
    pub fn degree(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| i.max(j) as i64).max().unwrap_or(-1)
    }

    pub fn trace(&self) -> Q {
        self.iter().filter(|(i, j, _)| i == j).fold(Q::zero(), |acc, (_, _, c)| acc + c)
    }

    pub fn transpose(&self) -> Self {
        FPart { entries: self.entries.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        FPart { entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Coefficients on the block `[0..n)^2` as a dense matrix.
    pub fn block(&self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for (i, j, c) in self.iter() {
            if i < n && j < n {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    /// Inverse of [`FPart::block`]; zero entries are skipped.
    pub fn from_block(m: &Matrix) -> Self {
        let mut f = Self::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                f.add_entry(i, j, m.get(i, j).clone());
            }
        }
        f
    }

    /// The same element on the monomial-basis units `E_ij`, using
    /// `e_ij = (j!/i!) E_ij`.
    pub fn to_monomial_units(&self) -> Self {
        let mut f = Self::new();
        for (i, j, c) in self.iter() {
            f.add_entry(i, j, c * Q::new(factorial(j), factorial(i)));
        }
        f
    }

    pub fn from_monomial_units(&self) -> Self {
        let mut f = Self::new();
        for (i, j, c) in self.iter() {
            f.add_entry(i, j, c * Q::new(factorial(i), factorial(j)));
        }
        f
    }
}
