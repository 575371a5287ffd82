//! Units, the determinant on `K + F`, one-sided inverses and regularity.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::action::{classify_structural, complete_basis};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Q};
use crate::opcore::json::OperatorJson;
use crate::opcore::{FPart, Operator};

/// `(lambda, d)` for `a = lambda + f` with `deg_F(f) = d`.
fn scalar_and_degree(a: &Operator) -> Result<(Q, i64)> {
    let lambda = a.scalar_part().ok_or(Error::NotInKF)?;
    Ok((lambda, a.deg_f()))
}

fn det_with(lambda: &Q, f: &FPart, d: i64) -> Q {
    if lambda.is_zero() {
        return Q::zero();
    }
    let n = (d + 1) as usize;
    let mut m = f.scale(&lambda.recip()).block(n);
    for i in 0..n {
        let v = m.get(i, i) + Q::one();
        m.set(i, i, v);
    }
    lambda * m.determinant()
}

/// Determinant of `lambda + f`: zero when `lambda = 0`, otherwise
/// `lambda * det(1 + f / lambda)` on the finite block.
pub fn det_kf(a: &Operator) -> Result<Q> {
    let (lambda, d) = scalar_and_degree(a)?;
    Ok(det_with(&lambda, a.fpart(), d))
}

/// The same determinant computed on the monomial-basis units `E_ij`.
pub fn det_kf_monomial(a: &Operator) -> Result<Q> {
    let (lambda, d) = scalar_and_degree(a)?;
    Ok(det_with(&lambda, &a.fpart().to_monomial_units(), d))
}

pub fn is_unit(a: &Operator) -> bool {
    det_kf(a).is_ok_and(|d| !d.is_zero())
}

pub fn unit_inverse(u: &Operator) -> Result<Operator> {
    let (lambda, d) = scalar_and_degree(u)?;
    let det = det_with(&lambda, u.fpart(), d);
    if det.is_zero() {
        return Err(Error::NotUnit(det));
    }
    let n = (d + 1) as usize;
    let mut m = u.fpart().block(n);
    for i in 0..n {
        let v = m.get(i, i) + &lambda;
        m.set(i, i, v);
    }
    let inv = m.inverse().ok_or_else(|| Error::NotUnit(Q::zero()))?;
    let li = lambda.recip();
    let mut f = FPart::from_block(&inv);
    for i in 0..n {
        f.add_entry(i, i, -li.clone());
    }
    let result = &Operator::scalar(li) + &Operator::from_fpart(f);
    if u.mul(&result) != Operator::one() || result.mul(u) != Operator::one() {
        return Err(Error::Verification("unit inverse check failed".into()));
    }
    Ok(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `Left`: input = unit_factor * I^n and inverse * input = 1.
/// `Right`: input = D^n * unit_factor and input * inverse = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSidedWitness {
    pub kind: Side,
    pub n: usize,
    pub unit_factor: Operator,
    pub inverse: Operator,
}

#[derive(Serialize)]
struct WitnessJson {
    kind: Side,
    n: usize,
    unit_factor: OperatorJson,
    unit_factor_text: String,
    inverse: OperatorJson,
    inverse_text: String,
}

impl OneSidedWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WitnessJson {
            kind: self.kind,
            n: self.n,
            unit_factor: OperatorJson::from(&self.unit_factor),
            unit_factor_text: self.unit_factor.to_string(),
            inverse: OperatorJson::from(&self.inverse),
            inverse_text: self.inverse.to_string(),
        })
        .unwrap()
    }
}

/// Factor `a = u I^n` with `u` a unit, when `a` has a left inverse.
fn left_factor(a: &Operator) -> Result<Option<(Operator, usize)>> {
    let graded = a.graded();
    if graded.len() != 1 {
        return Ok(None);
    }
    let (&n, b) = graded.iter().next().unwrap();
    if n < 0 || !b.is_constant() || !classify_structural(a)?.injective {
        return Ok(None);
    }
    let lambda = b.coeff(0);
    let n = n as usize;
    // a = a' I^n with a' = lambda + sum c_ij e_{i, j+n}
    let mut shifted = FPart::new();
    for (i, j, c) in a.fpart().iter() {
        shifted.add_entry(i, j + n, c.clone());
    }
    let size = ((shifted.degree() + 1) as usize).max(n);
    let mut a_block = shifted.block(size);
    for i in 0..size {
        let v = a_block.get(i, i) + &lambda;
        a_block.set(i, i, v);
    }
    // keep columns n.. of a' and complete columns 0..n with standard vectors
    let mut columns: Vec<Vec<Q>> = (n..size).map(|j| a_block.column(j)).collect();
    let kept = columns.len();
    complete_basis(&mut columns, size);
    if columns.len() != size {
        return Err(Error::Verification("column completion did not reach full rank".into()));
    }
    let mut ordered: Vec<Vec<Q>> = columns.split_off(kept);
    ordered.extend(columns);
    let u_block = Matrix::from_columns(size, &ordered);
    let mut f = FPart::from_block(&u_block);
    for i in 0..size {
        f.add_entry(i, i, -lambda.clone());
    }
    let u = &Operator::scalar(lambda) + &Operator::from_fpart(f);
    if u.mul(&Operator::i_pow(n as u32)) != *a {
        return Err(Error::Verification("unit factorization check failed".into()));
    }
    Ok(Some((u, n)))
}

pub fn left_inverse(a: &Operator) -> Result<Option<OneSidedWitness>> {
    let Some((u, n)) = left_factor(a)? else { return Ok(None) };
    let inverse = Operator::d_pow(n as u32).mul(&unit_inverse(&u)?);
    if inverse.mul(a) != Operator::one() {
        return Err(Error::Verification("left inverse check failed".into()));
    }
    Ok(Some(OneSidedWitness { kind: Side::Left, n, unit_factor: u, inverse }))
}

pub fn right_inverse(b: &Operator) -> Result<Option<OneSidedWitness>> {
    let Some(w) = left_inverse(&b.star())? else { return Ok(None) };
    let inverse = w.inverse.star();
    let unit_factor = w.unit_factor.star();
    if b.mul(&inverse) != Operator::one() || Operator::d_pow(w.n as u32).mul(&unit_factor) != *b {
        return Err(Error::Verification("right inverse check failed".into()));
    }
    Ok(Some(OneSidedWitness { kind: Side::Right, n: w.n, unit_factor, inverse }))
}

/// `k` distinct left inverses `(D^n + g) u^-1`, `g` supported in columns below `n`:
/// first `g = 0`, then `g = e_ij` in increasing `(i, j)`.
pub fn left_inverse_set_sample(a: &Operator, k: usize) -> Result<Vec<Operator>> {
    let (u, n) = left_factor(a)?.ok_or(Error::NotLeftInvertible)?;
    let u_inv = unit_inverse(&u)?;
    let base = Operator::d_pow(n as u32);
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    out.push(base.mul(&u_inv));
    let mut i = 0;
    while out.len() < k && n > 0 {
        for j in 0..n {
            if out.len() == k {
                break;
            }
            out.push((&base + &Operator::e(i, j)).mul(&u_inv));
        }
        i += 1;
    }
    for v in &out {
        if v.mul(a) != Operator::one() {
            return Err(Error::Verification("sampled left inverse check failed".into()));
        }
    }
    Ok(out)
}

/// `lambda + f` maps to `lambda + I^n f D^n`, i.e. every unit index shifts by `n`.
pub fn kappa_shift(u: &Operator, n: usize) -> Result<Operator> {
    let (lambda, _) = scalar_and_degree(u)?;
    let mut f = FPart::new();
    for (i, j, c) in u.fpart().iter() {
        f.add_entry(i + n, j + n, c.clone());
    }
    Ok(&Operator::scalar(lambda) + &Operator::from_fpart(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub left_regular: bool,
    pub right_regular: bool,
    pub regular: bool,
}

/// Right regular iff `a` is injective on `Q[x]`; left regular iff `a*` is.
pub fn regularity(a: &Operator) -> Result<Regularity> {
    if a.is_compact() {
        return Ok(Regularity { left_regular: false, right_regular: false, regular: false });
    }
    let right = classify_structural(a)?.injective;
    let left = classify_structural(&a.star())?.injective;
    Ok(Regularity { left_regular: left, right_regular: right, regular: left && right })
}

/// Membership in the monoid of operators bijective on `Q[x]`.
pub fn is_bijective_on_kx(a: &Operator) -> Result<bool> {
    if a.is_compact() {
        return Ok(false);
    }
    Ok(classify_structural(a)?.bijective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{q, qr};
    use crate::lang::parse;

    fn op(t: &str) -> Operator {
        parse(t).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(det_kf(&op("1")).unwrap(), q(1));
        assert_eq!(det_kf(&op("e[0,0]")).unwrap(), q(0));
        assert_eq!(det_kf(&op("1 + e[0,0]")).unwrap(), q(2));
        assert_eq!(det_kf_monomial(&op("1 + e[0,0]")).unwrap(), q(2));
        // 3 * det(1 + f/3) = 3 * 4/3
        assert_eq!(det_kf(&op("3 + e[1,0] + e[2,2]")).unwrap(), q(4));
        assert!(matches!(det_kf(&op("D")), Err(Error::NotInKF)));
        let u = op("2 + 3*e[0,2] - e[2,1] + 1/2*e[1,1]");
        assert_eq!(det_kf(&u).unwrap(), det_kf_monomial(&u).unwrap());
    }

    #[test]
    fn unit_tests_and_inverses() {
        assert!(is_unit(&op("1 + e[0,1]")));
        assert!(!is_unit(&op("1 - e[0,0]")));
        assert!(!is_unit(&op("D")));
        assert_eq!(unit_inverse(&op("1 + e[0,1]")).unwrap(), op("1 - e[0,1]"));
        assert_eq!(unit_inverse(&op("2")).unwrap(), Operator::scalar(qr(1, 2)));
        assert_eq!(unit_inverse(&op("1 + e[0,0]")).unwrap(), op("1 - 1/2*e[0,0]"));
        assert!(matches!(unit_inverse(&op("1 - e[0,0]")), Err(Error::NotUnit(_))));
    }

    #[test]
    fn one_sided_inverses() {
        let w = left_inverse(&op("I")).unwrap().unwrap();
        assert_eq!((w.n, w.unit_factor.clone(), w.inverse.clone()), (1, Operator::one(), op("D")));
        assert!(left_inverse(&op("D")).unwrap().is_none());
        // (1 + e[0,0]) I is canonically I
        assert_eq!(op("(1 + e[0,0])*I"), op("I"));
        let a = op("(1 + e[1,1])*I");
        let w = left_inverse(&a).unwrap().unwrap();
        assert_eq!(w.inverse.mul(&a), Operator::one());
        assert_eq!(w.unit_factor.mul(&op("I")), a);

        let w = right_inverse(&op("D")).unwrap().unwrap();
        assert_eq!((w.n, w.inverse.clone()), (1, op("I")));
        assert!(right_inverse(&op("I")).unwrap().is_none());
        let b = op("D*(1 + e[1,2])");
        let w = right_inverse(&b).unwrap().unwrap();
        assert_eq!(b.mul(&w.inverse), Operator::one());

        // a perturbed injective element: I^2 + e[0,0] + e[3,1]
        let a = op("I^2 + e[0,0] + e[3,1]");
        let w = left_inverse(&a).unwrap().unwrap();
        assert_eq!(w.n, 2);
        assert!(is_unit(&w.unit_factor));
        assert_eq!(w.inverse.mul(&a), Operator::one());
    }

    #[test]
    fn inverse_samples() {
        let s = left_inverse_set_sample(&op("I"), 2).unwrap();
        assert_eq!(s, vec![op("D"), op("D + e[0,0]")]);
        assert!(left_inverse_set_sample(&op("I"), 0).unwrap().is_empty());
        assert_eq!(left_inverse_set_sample(&op("1"), 1).unwrap(), vec![Operator::one()]);
        assert_eq!(left_inverse_set_sample(&op("1"), 3).unwrap().len(), 1);
        let s = left_inverse_set_sample(&op("I^2"), 6).unwrap();
        assert_eq!(s.len(), 6);
        assert!(matches!(left_inverse_set_sample(&op("D"), 1), Err(Error::NotLeftInvertible)));
    }

    #[test]
    fn kappa() {
        let u = op("2 + e[0,1] - e[3,0]");
        assert_eq!(kappa_shift(&u, 0).unwrap(), u);
        assert_eq!(kappa_shift(&op("1"), 2).unwrap(), Operator::one());
        assert_eq!(kappa_shift(&op("1 + e[0,0]"), 1).unwrap(), op("1 + e[1,1]"));
        for n in 0..4u32 {
            let k = kappa_shift(&u, n as usize).unwrap();
            assert_eq!(Operator::i_pow(n).mul(&u), k.mul(&Operator::i_pow(n)));
        }
        assert!(kappa_shift(&op("D"), 1).is_err());
    }

    #[test]
    fn regularity_examples() {
        let r = |t: &str| {
            let r = regularity(&op(t)).unwrap();
            (r.left_regular, r.right_regular, r.regular)
        };
        assert_eq!(r("D + I"), (true, true, true));
        assert_eq!(r("D"), (true, false, false));
        assert_eq!(r("e[0,0]"), (false, false, false));
        assert!(is_bijective_on_kx(&op("1 + D")).unwrap());
        assert!(!is_bijective_on_kx(&op("1 + I")).unwrap());
    }
}
