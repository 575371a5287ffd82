use num_traits::Zero;
use serde::Serialize;

use super::analysis::{analyze_window, block, certified_window, classify_structural};
use super::apply::{apply, apply_divided, column};
use crate::error::{Error, Result};
use crate::exactmath::{from_divided, to_divided, Matrix, XPoly, Q};
use crate::opcore::json::{poly_json, PolyJson};
use crate::opcore::Operator;

/// Solutions of `a q = p`: a particular solution (when one exists) plus the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: Option<XPoly>,
    pub homogeneous_basis: Vec<XPoly>,
}

#[derive(Serialize)]
struct SolutionJson {
    particular: Option<PolyJson>,
    homogeneous_basis: Vec<PolyJson>,
}

impl SolutionSet {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SolutionJson {
            particular: self.particular.as_ref().map(poly_json),
            homogeneous_basis: self.homogeneous_basis.iter().map(poly_json).collect(),
        })
        .unwrap()
    }
}

pub fn solve(a: &Operator, p: &XPoly) -> Result<SolutionSet> {
    solve_window(a, p, None)
}

pub fn solve_window(a: &Operator, p: &XPoly, window: Option<usize>) -> Result<SolutionSet> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let report = analyze_window(a, window)?;
    let particular = if classify_structural(a)?.bijective {
        Some(apply_inverse(a, p)?)
    } else {
        particular_by_elimination(a, p, window)?
    };
    if let Some(q) = &particular {
        if apply(a, q) != *p {
            return Err(Error::Verification("particular solution residual is nonzero".into()));
        }
    }
    Ok(SolutionSet { particular, homogeneous_basis: report.kernel_basis })
}

fn particular_by_elimination(a: &Operator, p: &XPoly, window: Option<usize>) -> Result<Option<XPoly>> {
    let pi = a.pi_plus()?;
    let n = certified_window(a)?.max(window.unwrap_or(0)) as i64;
    // any solution of degree >= cols would map to degree > deg p
    let cols = n.max(p.degree_i64() - pi + 1).max(0) as usize;
    let rows = (cols as i64 + pi) as usize;
    let mut rhs = to_divided(p);
    if rhs.len() > rows {
        return Ok(None);
    }
    rhs.resize(rows, Q::zero());
    let columns: Vec<Vec<Q>> = (0..cols).map(|s| column(a, s, rows)).collect();
    let m = Matrix::from_columns(rows, &columns);
    Ok(m.solve(&rhs).map(|c| from_divided(&c)))
}

/// The unique preimage under an operator that is bijective on `Q[x]`.
///
/// Splits `Q[x] = V + U` with `V = Q[x]_{<=d}`, `d = deg_F(a)`. On `U` the
/// operator is `a0(H) + a_-` with `a_-` strictly lowering degree, inverted by
/// the terminating series `sum (-1)^i (a0^-1 a_-)^i a0^-1`; the remaining
/// `V`-component is solved with the finite block.
pub fn apply_inverse(a: &Operator, p: &XPoly) -> Result<XPoly> {
    if a.is_compact() || !classify_structural(a)?.bijective {
        return Err(Error::NotInvertibleOnKx);
    }
    let d = a.deg_f();
    let split = (d + 1) as usize;
    let b0 = a.graded_coeff(0).unwrap().clone();
    let lowering: Operator = a
        .graded()
        .iter()
        .filter(|(k, _)| **k < 0)
        .fold(Operator::zero(), |acc, (&k, b)| &acc + &Operator::graded_term(k, b.clone()));

    let target = to_divided(p);
    let upper = |v: &[Q]| -> Vec<Q> {
        v.iter().enumerate().map(|(s, c)| if s < split { Q::zero() } else { c.clone() }).collect()
    };
    let a0_inv = |v: &[Q]| -> Vec<Q> {
        v.iter().enumerate().map(|(s, c)| if c.is_zero() { Q::zero() } else { c / b0.eval_int(s as i64 + 1) }).collect()
    };

    let mut term = a0_inv(&upper(&target));
    let mut q2 = term.clone();
    while term.iter().any(|c| !c.is_zero()) {
        let lowered = upper(&apply_divided(&lowering, &term));
        term = a0_inv(&lowered).iter().map(|c| -c).collect();
        add_into(&mut q2, &term);
    }

    let mut q = q2.clone();
    if split > 0 {
        let image = apply_divided(a, &q2);
        let rhs: Vec<Q> =
            (0..split).map(|s| target.get(s).cloned().unwrap_or_else(Q::zero) - image.get(s).cloned().unwrap_or_else(Q::zero)).collect();
        let inv = block(a, d).inverse().ok_or(Error::NotInvertibleOnKx)?;
        let q1 = inv.mul_vec(&rhs);
        add_into(&mut q, &q1);
    }
    let q = from_divided(&q);
    if apply(a, &q) != *p {
        return Err(Error::Verification("inverse image does not map back".into()));
    }
    Ok(q)
}

fn add_into(acc: &mut Vec<Q>, v: &[Q]) {
    if acc.len() < v.len() {
        acc.resize(v.len(), Q::zero());
    }
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}
