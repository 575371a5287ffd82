use num_traits::{Signed, Zero};

use crate::exactmath::poly::scaled_term;
use crate::opcore::Operator;

fn v_text(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "I".into(),
        -1 => "D".into(),
        k if k > 0 => format!("I^{k}"),
        k => format!("D^{}", -k),
    }
}

fn h_text(j: usize) -> String {
    match j {
        0 => String::new(),
        1 => "H".into(),
        j => format!("H^{j}"),
    }
}

/// Expanded form: graded terms from the highest `D` power down to the
/// highest `I` power, H-powers descending, then matrix units by index.
pub fn print(a: &Operator) -> String {
    let mut terms = Vec::new();
    for (&k, b) in a.graded() {
        for (j, c) in b.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = [h_text(j), v_text(k)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*");
            terms.push((c.is_negative(), scaled_term(&c.abs(), &body, false)));
        }
    }
    for (i, j, c) in a.fpart().iter() {
        terms.push((c.is_negative(), scaled_term(&c.abs(), &format!("e[{i},{j}]"), false)));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (neg, body)) in terms.into_iter().enumerate() {
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl std::fmt::Display for Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print(self))
    }
}
