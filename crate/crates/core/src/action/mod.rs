//! The action on `Q[x]`: application, finite sections, index, kernel and
//! cokernel, solving, and one-sided regularization.

mod analysis;
mod apply;
mod regularize;
mod solve;

pub use analysis::{
    analyze, analyze_window, analyze_with, certified_window, classify_structural, index, AnalysisReport,
    Classification,
};
pub use apply::{apply, apply_divided, column, truncation, truncation_rows, truncation_with, TruncMatrix};
pub use regularize::{kernel_idempotent, left_regularizer, right_regularizer};
pub use solve::{apply_inverse, solve, solve_window, SolutionSet};


pub(crate) use regularize::complete_basis;
