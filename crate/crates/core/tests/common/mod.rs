//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use intdiff::exactmath::{q, HPoly};
use intdiff::opcore::FPart;
use intdiff::units::det_kf;
use intdiff::{Operator, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_q(r: &mut ChaCha8Rng) -> Q {
    let n: i64 = r.gen_range(-4..=4);
    let d: i64 = if r.gen_bool(0.2) { r.gen_range(1..=3) } else { 1 };
    Q::new(n.into(), d.into())
}

pub fn nonzero_q(r: &mut ChaCha8Rng) -> Q {
    loop {
        let c = small_q(r);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn hpoly(r: &mut ChaCha8Rng, max_deg: usize) -> HPoly {
    let deg = r.gen_range(0..=max_deg);
    HPoly::from_coeffs((0..=deg).map(|_| small_q(r)).collect())
}

pub fn nonzero_hpoly(r: &mut ChaCha8Rng, max_deg: usize) -> HPoly {
    loop {
        let p = hpoly(r, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn fpart(r: &mut ChaCha8Rng, max_index: usize, max_entries: usize) -> FPart {
    let mut f = FPart::new();
    for _ in 0..r.gen_range(0..=max_entries) {
        f.add_entry(r.gen_range(0..=max_index), r.gen_range(0..=max_index), small_q(r));
    }
    f
}

pub fn compact(r: &mut ChaCha8Rng) -> Operator {
    loop {
        let f = Operator::from_fpart(fpart(r, 4, 4));
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random operator with at least one graded term.
pub fn fredholm(r: &mut ChaCha8Rng) -> Operator {
    loop {
        let mut a = Operator::zero();
        for _ in 0..r.gen_range(1..=3) {
            let k = r.gen_range(-2..=2);
            a = &a + &Operator::graded_term(k, hpoly(r, 2));
        }
        a = &a + &Operator::from_fpart(fpart(r, 4, 3));
        if !a.is_compact() {
            return a;
        }
    }
}

/// Compact with probability 1/5, Fredholm otherwise.
pub fn any_operator(r: &mut ChaCha8Rng) -> Operator {
    if r.gen_bool(0.2) {
        compact(r)
    } else {
        fredholm(r)
    }
}

pub fn kf(r: &mut ChaCha8Rng) -> Operator {
    &Operator::scalar(small_q(r)) + &Operator::from_fpart(fpart(r, 3, 4))
}

pub fn unit(r: &mut ChaCha8Rng) -> Operator {
    loop {
        let u = &Operator::scalar(nonzero_q(r)) + &Operator::from_fpart(fpart(r, 3, 4));
        if !det_kf(&u).unwrap().is_zero() {
            return u;
        }
    }
}

/// A word in the generators, returned both as text and as a product.
pub fn generator_word(r: &mut ChaCha8Rng) -> String {
    let len = r.gen_range(1..=6);
    let factors: Vec<String> = (0..len)
        .map(|_| match r.gen_range(0..7) {
            0 => "D".to_string(),
            1 => "I".to_string(),
            2 => "H".to_string(),
            3 => "x".to_string(),
            4 => format!("e[{},{}]", r.gen_range(0..4), r.gen_range(0..4)),
            5 => format!("({})", small_q(r)),
            _ => format!("(H + {})", r.gen_range(-3..=3)),
        })
        .collect();
    factors.join("*")
}

/// An equivalent spelling: every factor rewritten through a relation.
pub fn respell(word: &str) -> String {
    word.split('*')
        .map(|f| match f {
            "D" => "D*D*I".to_string(),
            "I" => "D*I*I".to_string(),
            "x" => "(H - 1)*I".to_string(),
            "H" => "D*x".to_string(),
            f if f.starts_with("e[") => {
                let inner = &f[2..f.len() - 1];
                let (i, j) = inner.split_once(',').unwrap();
                format!("I^{i}*e[0,0]*D^{j}")
            }
            f => f.to_string(),
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn int(n: i64) -> Q {
    q(n)
}
