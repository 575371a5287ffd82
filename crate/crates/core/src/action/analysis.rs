use serde::Serialize;

use super::apply::{apply_divided, column};
use crate::error::{Error, Result};
use crate::exactmath::linalg::{complement_coordinates, top_echelon};
use crate::exactmath::{factorial, integer_roots, Matrix, XPoly, Q};
use crate::opcore::json::{poly_json, PolyJson};
use crate::opcore::Operator;
use crate::par::{map_range, Execution};

/// Index, kernel and cokernel of the action on `Q[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub index: i64,
    /// Monic reduced echelon basis, ascending degree.
    pub kernel_basis: Vec<XPoly>,
    /// Monomials spanning a complement of the image.
    pub cokernel_basis: Vec<XPoly>,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub window_used: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

#[derive(Serialize)]
struct ReportJson {
    index: i64,
    kernel_basis: Vec<PolyJson>,
    cokernel_basis: Vec<PolyJson>,
    injective: bool,
    surjective: bool,
    bijective: bool,
    window_used: usize,
}

impl AnalysisReport {
    pub fn classification(&self) -> Classification {
        Classification { injective: self.injective, surjective: self.surjective, bijective: self.bijective }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            index: self.index,
            kernel_basis: self.kernel_basis.iter().map(poly_json).collect(),
            cokernel_basis: self.cokernel_basis.iter().map(poly_json).collect(),
            injective: self.injective,
            surjective: self.surjective,
            bijective: self.bijective,
            window_used: self.window_used,
        })
        .unwrap()
    }
}

pub fn index(a: &Operator) -> Result<i64> {
    if a.is_compact() {
        return Err(Error::IndexUndefined);
    }
    Ok(-a.pi_plus()?)
}

/// Smallest `N` such that for every `s >= N` the column `a x^[s]` has its
/// top entry at row `s + p` (p the top graded degree), that entry is nonzero,
/// and no F-part entry sits in a column or row at or beyond `N` resp. `N + p`.
pub fn certified_window(a: &Operator) -> Result<usize> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let p = a.pi_plus()?;
    let d = a.deg_f();
    let top = a.graded_coeff(p).unwrap();
    let mut n = 0i64.max(-p).max(d + 1).max(d + 1 - p);
    for r in integer_roots(top)? {
        n = n.max(r - p);
    }
    Ok(n as usize)
}

pub fn analyze(a: &Operator) -> Result<AnalysisReport> {
    analyze_with(a, None, Execution::default())
}

pub fn analyze_window(a: &Operator, window: Option<usize>) -> Result<AnalysisReport> {
    analyze_with(a, window, Execution::default())
}

pub fn analyze_with(a: &Operator, window: Option<usize>, exec: Execution) -> Result<AnalysisReport> {
    let base = certified_window(a)?;
    let n = base.max(window.unwrap_or(0));
    let p = a.pi_plus()?;
    let rows = (n as i64 + p) as usize;
    let columns = map_range(n, exec, |s| column(a, s, rows));
    let m = Matrix::from_columns(rows, &columns);
    let kernel_divided = m.nullspace();
    let kernel_basis = monic_echelon(&kernel_divided);
    let cokernel_basis: Vec<XPoly> = complement_coordinates(&columns, rows)
        .into_iter()
        .map(|t| XPoly::monomial(Q::from_integer(1.into()), t))
        .collect();
    let index = kernel_basis.len() as i64 - cokernel_basis.len() as i64;
    if index != -p {
        return Err(Error::Verification(format!(
            "window {n}: kernel/cokernel dimensions {}/{} disagree with index {}",
            kernel_basis.len(),
            cokernel_basis.len(),
            -p
        )));
    }
    let injective = kernel_basis.is_empty();
    let surjective = cokernel_basis.is_empty();
    Ok(AnalysisReport {
        index,
        kernel_basis,
        cokernel_basis,
        injective,
        surjective,
        bijective: injective && surjective,
        window_used: n,
    })
}

/// Divided-basis vectors to a monic reduced echelon basis in the monomial basis.
pub(crate) fn monic_echelon(divided: &[Vec<Q>]) -> Vec<XPoly> {
    let monomial: Vec<Vec<Q>> = divided
        .iter()
        .map(|v| v.iter().enumerate().map(|(s, c)| c / Q::from_integer(factorial(s))).collect())
        .collect();
    top_echelon(&monomial).into_iter().map(|(_, v)| XPoly::from_coeffs(v)).collect()
}

/// Matrix of `a` on `Q[x]_{<=d}`; only meaningful when that space is invariant.
pub(crate) fn block(a: &Operator, d: i64) -> Matrix {
    let n = (d + 1).max(0) as usize;
    let cols: Vec<Vec<Q>> = (0..n).map(|s| column(a, s, n)).collect();
    Matrix::from_columns(n, &cols)
}

/// Injective/surjective/bijective from finite block tests and integer roots
/// of the relevant coefficients, with no window search.
pub fn classify_structural(a: &Operator) -> Result<Classification> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let bijective = is_bijective_structural(a)?;
    let surjective = is_surjective_structural(a)?;
    let injective = is_injective_structural(a)?;
    Ok(Classification { injective, surjective, bijective })
}

fn is_bijective_structural(a: &Operator) -> Result<bool> {
    if a.pi_plus()? != 0 {
        return Ok(false);
    }
    let d = a.deg_f();
    let b0 = a.graded_coeff(0).unwrap();
    // b0(s + 1) != 0 for all s > d
    if integer_roots(b0)?.iter().any(|&r| r >= d + 2) {
        return Ok(false);
    }
    Ok(d < 0 || block(a, d).determinant() != Q::from_integer(0.into()))
}

fn is_surjective_structural(a: &Operator) -> Result<bool> {
    let p = a.pi_plus()?;
    if p > 0 {
        return Ok(false);
    }
    let n = -p;
    let d = a.deg_f();
    let top = a.graded_coeff(p).unwrap();
    if integer_roots(top)?.iter().any(|&r| r >= d + 2) {
        return Ok(false);
    }
    if d < 0 {
        return Ok(true);
    }
    // a = a' D^n + f with a' = sum b_k v_{k+n}
    let mut shifted = Operator::zero();
    for (&k, b) in a.graded() {
        shifted = &shifted + &Operator::graded_term(k + n, b.clone());
    }
    let dim = (d + 1) as usize;
    let mut vectors: Vec<Vec<Q>> = (0..dim).map(|s| column(a, s, dim)).collect();
    for j in 0..=d.min(n - 1) {
        let t = (d - j) as usize;
        let mut e = vec![Q::from_integer(0.into()); t + 1];
        e[t] = Q::from_integer(1.into());
        let mut img = apply_divided(&shifted, &e);
        img.resize(dim, Q::from_integer(0.into()));
        vectors.push(img);
    }
    Ok(Matrix::from_columns(dim, &vectors).rank() == dim)
}

fn is_injective_structural(a: &Operator) -> Result<bool> {
    let n = a.pi_plus()?;
    if n < 0 {
        return Ok(false);
    }
    if n == 0 {
        return is_bijective_structural(a);
    }
    // a = a' I^n with a' = sum b_k v_{k-n} + sum c_ij e_{i,j+n}
    let mut reduced = Operator::zero();
    for (&k, b) in a.graded() {
        reduced = &reduced + &Operator::graded_term(k - n, b.clone());
    }
    for (i, j, c) in a.fpart().iter() {
        reduced = &reduced + &Operator::e(i, j + n as usize).scale(c);
    }
    let lead = reduced.graded_coeff(0).unwrap();
    let s = integer_roots(lead)?.iter().map(|r| r - 1).filter(|&j| j >= 0).max().unwrap_or(-1);
    let m = reduced.deg_f().max(s);
    if m < 0 {
        return Ok(true);
    }
    let kernel = block(&reduced, m).nullspace();
    if kernel.is_empty() {
        return Ok(true);
    }
    // the kernel must meet x^n Q[x] trivially
    let low = (n as usize).min(m as usize + 1);
    let proj: Vec<Vec<Q>> = kernel.iter().map(|v| v[..low].to_vec()).collect();
    Ok(Matrix::from_rows(proj).rank() == kernel.len())
}
