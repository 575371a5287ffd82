//! JSON mirror of canonical forms. Rationals travel as strings such as `"-3/2"`.

use serde::{Deserialize, Serialize};

use super::Operator;
use crate::exactmath::{Poly, Var, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedJson {
    pub deg: i64,
    pub poly: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub graded: Vec<GradedJson>,
    pub fpart: Vec<EntryJson>,
}

/// Coefficient array plus the printed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
    pub text: String,
}

pub fn rational_to_string(c: &Q) -> String {
    c.to_string()
}

pub fn rational_from_str(s: &str) -> Option<Q> {
    s.trim().parse::<Q>().ok()
}

pub fn coeff_strings<V: Var>(p: &Poly<V>) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

pub fn poly_from_strings<V: Var>(c: &[String]) -> Option<Poly<V>> {
    c.iter().map(|s| rational_from_str(s)).collect::<Option<Vec<_>>>().map(Poly::from_coeffs)
}

pub fn poly_json<V: Var>(p: &Poly<V>) -> PolyJson {
    PolyJson { coeffs: coeff_strings(p), text: p.to_string() }
}

impl From<&Operator> for OperatorJson {
    fn from(a: &Operator) -> Self {
        OperatorJson {
            graded: a
                .graded()
                .iter()
                .map(|(&deg, b)| GradedJson { deg, poly: coeff_strings(b) })
                .collect(),
            fpart: a
                .fpart()
                .iter()
                .map(|(i, j, c)| EntryJson { i, j, c: rational_to_string(c) })
                .collect(),
        }
    }
}

impl OperatorJson {
    pub fn to_operator(&self) -> Option<Operator> {
        let mut a = Operator::zero();
        for g in &self.graded {
            a.add_graded(g.deg, poly_from_strings(&g.poly)?);
        }
        for e in &self.fpart {
            a.add_f(e.i, e.j, rational_from_str(&e.c)?);
        }
        Some(a)
    }
}

pub fn to_json(a: &Operator) -> serde_json::Value {
    serde_json::to_value(OperatorJson::from(a)).expect("operator json")
}

pub fn from_json(v: &serde_json::Value) -> Option<Operator> {
    serde_json::from_value::<OperatorJson>(v.clone()).ok()?.to_operator()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let a = &(&Operator::x() + &Operator::e(2, 1).scale(&crate::exactmath::qr(-3, 2)))
            + &Operator::d();
        let v = to_json(&a);
        assert_eq!(v["fpart"][0]["c"], "-3/2");
        assert_eq!(from_json(&v), Some(a));
    }
}
