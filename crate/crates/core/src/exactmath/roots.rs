use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{HPoly, Q};
use crate::error::{Error, Result};

const DIRECT_SCAN_LIMIT: u64 = 1 << 22;

fn eval_int_poly(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Sorted distinct integer roots of a nonzero polynomial.
pub fn integer_roots(p: &HPoly) -> Result<Vec<i64>> {
    if p.is_zero() {
        return Err(Error::InfiniteRootSet);
    }
    let c = p.primitive_integer_coeffs();
    let v = c.iter().position(|a| !a.is_zero()).unwrap();
    let reduced = &c[v..];
    let mut roots = Vec::new();
    if v > 0 {
        roots.push(0i64);
    }
    if reduced.len() > 1 {
        let trailing = reduced[0].abs();
        let bound = p.cauchy_bound().ceil().to_integer();
        let limit = if bound < trailing { bound } else { trailing.clone() };
        let mut test = |d: &BigInt| -> Result<()> {
            for cand in [d.clone(), -d.clone()] {
                if eval_int_poly(reduced, &cand).is_zero() {
                    roots.push(cand.to_i64().ok_or(Error::RootOutOfRange)?);
                }
            }
            Ok(())
        };
        if limit <= BigInt::from(DIRECT_SCAN_LIMIT) {
            let lim = limit.to_u64().unwrap();
            for d in 1..=lim {
                let d = BigInt::from(d);
                if trailing.is_multiple_of(&d) {
                    test(&d)?;
                }
            }
        } else {
            let root = trailing.sqrt();
            if root > BigInt::from(DIRECT_SCAN_LIMIT) {
                return Err(Error::RootSearchLimit);
            }
            let mut d = BigInt::one();
            while d <= root {
                if trailing.is_multiple_of(&d) {
                    let co = &trailing / &d;
                    if d <= limit {
                        test(&d)?;
                    }
                    if co != d && co <= limit {
                        test(&co)?;
                    }
                }
                d += 1;
            }
        }
    }
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

/// Largest integer root, if any.
pub fn max_integer_root(p: &HPoly) -> Result<Option<i64>> {
    Ok(integer_roots(p)?.last().copied())
}

/// Irreducibility over Q by Kronecker's method. Adequate for the small
/// degrees and coefficients that occur in practice; refuses huge inputs.
pub fn is_irreducible(p: &HPoly) -> Result<bool> {
    let Some(n) = p.degree() else { return Err(Error::ZeroPolynomial) };
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let c = p.primitive_integer_coeffs();
    if c[0].is_zero() {
        return Ok(false);
    }
    // square-free part check doubles as a cheap early exit
    if p.gcd(&p.derivative()).degree().unwrap_or(0) > 0 {
        return Ok(false);
    }
    for d in 1..=n / 2 {
        if has_factor_of_degree(p, &c, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_factor_of_degree(p: &HPoly, c: &[BigInt], d: usize) -> Result<bool> {
    // d + 1 distinct integer points where p does not vanish
    let mut points = Vec::new();
    let mut k: i64 = 0;
    while points.len() < d + 1 {
        for x in [k, -k] {
            if points.len() < d + 1 && !points.iter().any(|(px, _)| *px == x) {
                let val = eval_int_poly(c, &BigInt::from(x));
                if val.is_zero() {
                    // a rational root means a linear factor
                    return Ok(true);
                }
                points.push((x, val));
            }
        }
        k += 1;
    }
    let mut divisor_lists = Vec::new();
    let mut combos: u128 = 1;
    for (_, val) in &points {
        let ds = divisors(&val.abs())?;
        combos = combos.saturating_mul(2 * ds.len() as u128);
        divisor_lists.push(ds);
    }
    if combos > 2_000_000 {
        return Err(Error::RootSearchLimit);
    }
    let xs: Vec<Q> = points.iter().map(|(x, _)| Q::from_integer(BigInt::from(*x))).collect();
    let mut idx = vec![0usize; d + 1];
    let mut signs = vec![false; d + 1];
    loop {
        // first value fixed positive to remove the sign ambiguity
        let ys: Vec<Q> = (0..=d)
            .map(|i| {
                let v = Q::from_integer(divisor_lists[i][idx[i]].clone());
                if signs[i] { -v } else { v }
            })
            .collect();
        let g = interpolate(&xs, &ys);
        if g.degree() == Some(d) && g.coeffs().iter().all(|a| a.is_integer()) {
            if p.exact_div(&g).is_some() {
                return Ok(true);
            }
        }
        // advance mixed-radix counter
        let mut i = 0;
        loop {
            if i > d {
                return Ok(false);
            }
            if i > 0 && !signs[i] {
                signs[i] = true;
                break;
            }
            signs[i] = false;
            idx[i] += 1;
            if idx[i] < divisor_lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let root = n.sqrt();
    if root > BigInt::from(DIRECT_SCAN_LIMIT) {
        return Err(Error::RootSearchLimit);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while d <= root {
        if n.is_multiple_of(&d) {
            let co = n / &d;
            if co != d {
                large.push(co);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Lagrange interpolation through distinct nodes.
pub fn interpolate(xs: &[Q], ys: &[Q]) -> HPoly {
    let mut acc = HPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = HPoly::one();
        let mut denom = Q::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &HPoly::from_coeffs(vec![-xj.clone(), Q::one()]);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}
