//! Commutation tests and centralizers of special elements.

use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{integer_roots, HPoly, Matrix, Q};
use crate::opcore::json::OperatorJson;
use crate::opcore::{FPart, Operator};
use crate::par::{map_range, Execution};

pub fn commutes(a: &Operator, b: &Operator) -> bool {
    a.commutes(b)
}

/// Index pairs `(i, j)`, `i != j`, with `alpha(i + 1) == alpha(j + 1)`, listed
/// once each with `i > j`. The centralizer of a nonconstant `alpha(H)` is
/// `Q[H]` plus the diagonal units plus `e_ij`, `e_ji` for these pairs.
pub fn equal_value_pairs(alpha: &HPoly) -> Result<Vec<(usize, usize)>> {
    if alpha.is_constant() {
        return Err(Error::ConstantCentralizer);
    }
    // alpha is strictly monotone beyond every real root of alpha'
    let bound = Q::one() + alpha.derivative().cauchy_bound();
    let limit = bound.ceil().to_integer().to_i64().ok_or(Error::RootSearchLimit)?;
    let mut pairs = Vec::new();
    for t in 1..=limit.max(1) {
        let level = alpha - &HPoly::constant(alpha.eval_int(t));
        for s in integer_roots(&level)? {
            if s > t {
                pairs.push(((s - 1) as usize, (t - 1) as usize));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

pub fn centralizer_hpoly(alpha: &HPoly) -> Result<CentralizerDescription> {
    Ok(CentralizerDescription {
        kind: CentralizerKind::D1PlusPairs,
        pair_basis: equal_value_pairs(alpha)?,
        basis: vec![],
        window: None,
    })
}

/// Basis of `{f in F : [a, f] = 0}` restricted to units `e_st` with `s, t <= n`.
pub fn commutant_in_f(a: &Operator, n: usize) -> Vec<Operator> {
    commutant_in_f_with(a, n, Execution::default())
}

pub fn commutant_in_f_with(a: &Operator, n: usize, exec: Execution) -> Vec<Operator> {
    let side = n + 1;
    let unknowns = side * side;
    let images: Vec<FPart> = map_range(unknowns, exec, |u| {
        let e = Operator::e(u / side, u % side);
        a.commutator(&e).fpart().clone()
    });
    let mut keys: Vec<(usize, usize)> = images.iter().flat_map(|f| f.iter().map(|(i, j, _)| (i, j))).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut m = Matrix::zeros(keys.len(), unknowns);
    for (u, f) in images.iter().enumerate() {
        for (i, j, c) in f.iter() {
            let r = keys.binary_search(&(i, j)).unwrap();
            m.set(r, u, c.clone());
        }
    }
    m.nullspace()
        .into_iter()
        .map(|v| {
            let mut f = FPart::new();
            for (u, c) in v.into_iter().enumerate() {
                f.add_entry(u / side, u % side, c);
            }
            Operator::from_fpart(f)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralizerKind {
    /// `Q[H]` plus diagonal units plus the listed pair units.
    D1PlusPairs,
    PolyInD,
    PolyInI,
    PolyInX,
    /// Only a window of the F-part commutant; no closed form known.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerDescription {
    pub kind: CentralizerKind,
    pub pair_basis: Vec<(usize, usize)>,
    /// Elements of the F-part commutant for `Truncated`; empty otherwise.
    pub basis: Vec<Operator>,
    pub window: Option<usize>,
}

#[derive(Serialize)]
struct CentralizerJson {
    kind: CentralizerKind,
    pair_basis: Vec<(usize, usize)>,
    basis: Vec<OperatorJson>,
    window: Option<usize>,
    text: String,
}

impl CentralizerDescription {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CentralizerJson {
            kind: self.kind,
            pair_basis: self.pair_basis.clone(),
            basis: self.basis.iter().map(OperatorJson::from).collect(),
            window: self.window,
            text: self.to_string(),
        })
        .unwrap()
    }

    /// Representative elements of the described set: generators plus, for
    /// `D1PlusPairs`, `H`, the first few diagonal units and both pair units.
    pub fn sample_elements(&self) -> Vec<Operator> {
        match self.kind {
            CentralizerKind::PolyInD => vec![Operator::d()],
            CentralizerKind::PolyInI => vec![Operator::integral()],
            CentralizerKind::PolyInX => vec![Operator::x()],
            CentralizerKind::Truncated => self.basis.clone(),
            CentralizerKind::D1PlusPairs => {
                let top = self.pair_basis.iter().map(|&(i, _)| i).max().unwrap_or(0) + 1;
                let mut out = vec![Operator::h()];
                out.extend((0..=top).map(|i| Operator::e(i, i)));
                for &(i, j) in &self.pair_basis {
                    out.push(Operator::e(i, j));
                    out.push(Operator::e(j, i));
                }
                out
            }
        }
    }
}

impl fmt::Display for CentralizerDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CentralizerKind::PolyInD => write!(f, "K[D]"),
            CentralizerKind::PolyInI => write!(f, "K[I]"),
            CentralizerKind::PolyInX => write!(f, "K[x]"),
            CentralizerKind::D1PlusPairs => {
                write!(f, "D1")?;
                for &(i, j) in &self.pair_basis {
                    write!(f, " + K·e[{i},{j}] + K·e[{j},{i}]")?;
                }
                Ok(())
            }
            CentralizerKind::Truncated => {
                let parts: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
                write!(f, "span{{{}}} (F-part, window {})", parts.join(", "), self.window.unwrap_or(0))
            }
        }
    }
}

/// Closed-form centralizer for `alpha(H)`, `lambda D^i`, `lambda I^i` and
/// `lambda x^i` (i >= 1, lambda != 0). `None` for anything else.
pub fn centralizer_closed_form(a: &Operator) -> Result<Option<CentralizerDescription>> {
    if !a.fpart().is_empty() || a.graded().len() != 1 {
        return Ok(None);
    }
    let (&k, b) = a.graded().iter().next().unwrap();
    let described = |kind| Some(CentralizerDescription { kind, pair_basis: vec![], basis: vec![], window: None });
    if k == 0 {
        if b.is_constant() {
            return Err(Error::ConstantCentralizer);
        }
        return centralizer_hpoly(b).map(Some);
    }
    if b.is_constant() {
        return Ok(if k < 0 { described(CentralizerKind::PolyInD) } else { described(CentralizerKind::PolyInI) });
    }
    // x^k = c_k(H) I^k
    let xk = Operator::x().pow(k as u32);
    let ck = xk.graded_coeff(k).unwrap();
    let ratio = b.leading().unwrap() / ck.leading().unwrap();
    if *b == ck.scale(&ratio) {
        return Ok(described(CentralizerKind::PolyInX));
    }
    Ok(None)
}

/// Closed form when available, otherwise the commutant inside F up to `window`.
pub fn centralizer(a: &Operator, window: usize) -> Result<CentralizerDescription> {
    if let Some(c) = centralizer_closed_form(a)? {
        return Ok(c);
    }
    if a.is_zero() {
        return Err(Error::ConstantCentralizer);
    }
    Ok(CentralizerDescription {
        kind: CentralizerKind::Truncated,
        pair_basis: vec![],
        basis: commutant_in_f(a, window),
        window: Some(window),
    })
}

/// Every sample element of `c` commutes with `a`.
pub fn verify_centralizer(a: &Operator, c: &CentralizerDescription) -> bool {
    c.sample_elements().iter().all(|s| a.commutes(s))
}
