//! Exact computation in the algebra of polynomial integro-differential
//! operators `Q<x, D, I>` acting on `Q[x]`.
//!
//! Operators are kept in the canonical form `sum_k b_k(H) v_k + sum c_ij e_ij`
//! where `H = D x`, `v_k` is a power of `I` (k > 0) or `D` (k < 0), and the
//! `e_ij` are matrix units in the divided basis `x^s / s!`.

pub mod error;
pub mod exactmath;
pub mod lang;
pub mod opcore;
pub mod par;
pub mod action;
pub mod units;
pub mod centralizer;
pub mod bquot;
pub mod batch;

pub use error::{Error, ParseError, Result};
pub use exactmath::{HPoly, XPoly, Q};
pub use opcore::{FPart, Operator};
pub use bquot::B1Element;
