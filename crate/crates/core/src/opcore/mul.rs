//! Table-driven product of canonical forms.

use super::Operator;
use crate::exactmath::{HPoly, Q};

pub(super) fn mul(a: &Operator, b: &Operator) -> Operator {
    let mut out = Operator::zero();
    for (&i, p) in &a.graded {
        for (&j, r) in &b.graded {
            graded_graded(p, i, r, j, &mut out);
        }
        for (s, t, c) in b.fpart.iter() {
            graded_unit(p, i, s, t, c, &mut out);
        }
    }
    for (s, t, c) in a.fpart.iter() {
        for (&j, r) in &b.graded {
            unit_graded(s, t, c, r, j, &mut out);
        }
        for (u, w, d) in b.fpart.iter() {
            if t == u {
                out.add_f(s, w, c * d);
            }
        }
    }
    out
}

/// `p(H) v_i * r(H) v_j`.
fn graded_graded(p: &HPoly, i: i64, r: &HPoly, j: i64, out: &mut Operator) {
    // v_i r(H) = r(H - i) v_i
    let coeff = p * &r.shift(-i);
    if coeff.is_zero() {
        return;
    }
    out.add_graded(i + j, coeff.clone());
    if i > 0 && j < 0 {
        // I^i D^n = I^(i-m) D^(n-m) - sum_{k=1..m} e_{i-k, n-k}
        let n = -j;
        let m = i.min(n);
        for k in 1..=m {
            let (row, col) = ((i - k) as usize, (n - k) as usize);
            out.add_f(row, col, -coeff.eval_int(row as i64 + 1));
        }
    }
}

/// `p(H) v_i * c e_st`.
fn graded_unit(p: &HPoly, i: i64, s: usize, t: usize, c: &Q, out: &mut Operator) {
    let row = s as i64 + i;
    if row < 0 {
        return;
    }
    let v = p.eval_int(row + 1) * c;
    out.add_f(row as usize, t, v);
}

/// `c e_st * r(H) v_j`.
fn unit_graded(s: usize, t: usize, c: &Q, r: &HPoly, j: i64, out: &mut Operator) {
    // e_st r(H) = r(t + 1) e_st, then e_st I^j = e_{s,t-j}, e_st D^m = e_{s,t+m}
    let col = t as i64 - j;
    if col < 0 {
        return;
    }
    let v = r.eval_int(t as i64 + 1) * c;
    out.add_f(s, col as usize, v);
}
