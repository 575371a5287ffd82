use num_traits::{One, Zero};

use super::analysis::analyze;
use super::apply::apply_divided;
use crate::error::{Error, Result};
use crate::exactmath::linalg::top_echelon;
use crate::exactmath::{to_divided, Matrix, Q};
use crate::opcore::{FPart, Operator};

/// `1 + (S - Id)` on the block `[0..n)`: the operator acting by `S` there
/// and as the identity elsewhere.
fn block_operator(s: &Matrix) -> Operator {
    let mut f = FPart::from_block(s);
    for i in 0..s.rows() {
        f.add_entry(i, i, -Q::one());
    }
    &Operator::one() + &Operator::from_fpart(f)
}

/// `c = D^n + f` (n the cokernel dimension) making `c a` surjective with
/// the same kernel as `a`.
pub fn left_regularizer(a: &Operator) -> Result<Operator> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let report = analyze(a)?;
    let n = report.cokernel_basis.len();
    let reps: Vec<usize> = report.cokernel_basis.iter().map(|p| p.degree().unwrap()).collect();
    let c = if reps.iter().copied().eq(0..n) {
        Operator::d_pow(n as u32)
    } else {
        // permutation s sending x^[i] to x^[t_i], conjugating D^n
        let m = reps.iter().copied().max().unwrap_or(0).max(n.saturating_sub(1));
        let mut sigma: Vec<usize> = reps.clone();
        sigma.extend((0..=m).filter(|t| !reps.contains(t)));
        let mut s = Matrix::zeros(m + 1, m + 1);
        for (k, &t) in sigma.iter().enumerate() {
            s.set(t, k, Q::one());
        }
        let s_op = block_operator(&s);
        let s_inv = block_operator(&s.transpose());
        s_op.mul(&Operator::d_pow(n as u32)).mul(&s_inv)
    };
    let product = analyze(&c.mul(a))?;
    if !product.surjective || product.kernel_basis != report.kernel_basis {
        return Err(Error::Verification("left regularizer check failed".into()));
    }
    Ok(c)
}

/// `c = I^m + g` (m the kernel dimension) making `a c` injective with the
/// same image as `a`.
pub fn right_regularizer(a: &Operator) -> Result<Operator> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let report = analyze(a)?;
    let m = report.kernel_basis.len();
    let plain = Operator::i_pow(m as u32);
    // the plain integral already works when ker a meets x^m Q[x] trivially
    let c = if m == 0 || analyze(&a.mul(&plain))?.injective {
        plain
    } else {
        let kernel: Vec<Vec<Q>> = report.kernel_basis.iter().map(to_divided).collect();
        let top = kernel.iter().map(|v| v.len()).max().unwrap_or(0).max(m);
        let mut columns: Vec<Vec<Q>> = kernel
            .into_iter()
            .map(|mut v| {
                v.resize(top, Q::zero());
                v
            })
            .collect();
        complete_basis(&mut columns, top);
        let s = Matrix::from_columns(top, &columns);
        let s_inv = s.inverse().ok_or_else(|| Error::Verification("basis completion is singular".into()))?;
        block_operator(&s).mul(&plain).mul(&block_operator(&s_inv))
    };
    let product = analyze(&a.mul(&c))?;
    if !product.injective || product.cokernel_basis != report.cokernel_basis {
        return Err(Error::Verification("right regularizer check failed".into()));
    }
    Ok(c)
}

/// Extend independent columns to a basis of `Q^dim` with standard vectors.
pub(crate) fn complete_basis(columns: &mut Vec<Vec<Q>>, dim: usize) {
    let mut rank = Matrix::from_columns(dim, columns).rank();
    for t in 0..dim {
        if rank == dim {
            break;
        }
        let mut e = vec![Q::zero(); dim];
        e[t] = Q::one();
        columns.push(e);
        let r = Matrix::from_columns(dim, columns).rank();
        if r > rank {
            rank = r;
        } else {
            columns.pop();
        }
    }
}

/// Idempotent `f` in F whose image on `Q[x]` is the kernel of `a`.
pub fn kernel_idempotent(a: &Operator) -> Result<Operator> {
    if a.is_compact() {
        return Err(Error::NotFredholm);
    }
    let report = analyze(a)?;
    let kernel: Vec<Vec<Q>> = report.kernel_basis.iter().map(to_divided).collect();
    let mut f = FPart::new();
    for (pivot, v) in top_echelon(&kernel) {
        for (t, c) in v.iter().enumerate() {
            f.add_entry(t, pivot, c.clone());
        }
    }
    let f = Operator::from_fpart(f);
    if f.mul(&f) != f {
        return Err(Error::Verification("kernel projector is not idempotent".into()));
    }
    for (pivot, v) in top_echelon(&kernel) {
        let mut e = vec![Q::zero(); pivot + 1];
        e[pivot] = Q::one();
        let mut img = apply_divided(&f, &e);
        img.resize(v.len().max(img.len()), Q::zero());
        let mut want = v.clone();
        want.resize(img.len(), Q::zero());
        if img != want {
            return Err(Error::Verification("kernel projector image mismatch".into()));
        }
    }
    Ok(f)
}
