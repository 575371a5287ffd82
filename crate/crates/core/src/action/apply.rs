use num_traits::Zero;
use serde::Serialize;

use crate::exactmath::{from_divided, to_divided, Matrix, XPoly, Q};
use crate::opcore::Operator;
use crate::par::{map_range, Execution};

/// Image of `p` under `a`.
pub fn apply(a: &Operator, p: &XPoly) -> XPoly {
    from_divided(&apply_divided(a, &to_divided(p)))
}

/// Action on coordinates in the divided basis `x^[s] = x^s / s!`.
pub fn apply_divided(a: &Operator, c: &[Q]) -> Vec<Q> {
    let top_shift = a.graded().keys().next_back().copied().unwrap_or(0).max(0) as usize;
    let len = (c.len() + top_shift).max((a.deg_f() + 1) as usize);
    let mut out = vec![Q::zero(); len];
    for (s, cs) in c.iter().enumerate() {
        if cs.is_zero() {
            continue;
        }
        // b(H) v_k x^[s] = b(s + k + 1) x^[s + k]
        for (&k, b) in a.graded() {
            let t = s as i64 + k;
            if t >= 0 {
                out[t as usize] += b.eval_int(t + 1) * cs;
            }
        }
    }
    for (i, j, l) in a.fpart().iter() {
        if let Some(cj) = c.get(j) {
            if !cj.is_zero() {
                out[i] += l * cj;
            }
        }
    }
    while out.last().is_some_and(|v| v.is_zero()) {
        out.pop();
    }
    out
}

/// Coefficient of `x^[t]` in `a x^[s]` for `t < rows`.
pub fn column(a: &Operator, s: usize, rows: usize) -> Vec<Q> {
    let mut col = vec![Q::zero(); rows];
    for (&k, b) in a.graded() {
        let t = s as i64 + k;
        if t >= 0 && (t as usize) < rows {
            col[t as usize] = b.eval_int(t + 1);
        }
    }
    for (i, j, l) in a.fpart().iter() {
        if j == s && i < rows {
            col[i] += l;
        }
    }
    col
}

/// Finite section of the matrix of `a` in the divided basis:
/// entry `(t, s)` is the coefficient of `x^[t]` in `a x^[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Matrix,
}

#[derive(Serialize)]
struct TruncJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl TruncMatrix {
    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .entries
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        serde_json::to_value(TruncJson { rows: self.rows, cols: self.cols, entries }).unwrap()
    }
}

/// Rows needed so that every column below `cols` is complete.
pub fn truncation_rows(a: &Operator, cols: usize) -> usize {
    let top = a.graded().keys().next_back().copied().unwrap_or(0).max(0) as usize;
    (cols + top).max((a.deg_f() + 1) as usize)
}

pub fn truncation(a: &Operator, cols: usize) -> TruncMatrix {
    truncation_with(a, cols, Execution::default())
}

pub fn truncation_with(a: &Operator, cols: usize, exec: Execution) -> TruncMatrix {
    let rows = truncation_rows(a, cols);
    let columns = map_range(cols, exec, |s| column(a, s, rows));
    TruncMatrix { rows, cols, entries: Matrix::from_columns(rows, &columns) }
}

impl std::fmt::Display for TruncMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<Vec<String>> =
            self.entries.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
