//! Operations over many operators at once, parallel when the `parallel`
//! feature is enabled.

use crate::action::{analyze_with, classify_structural, index, truncation_with, AnalysisReport, Classification, TruncMatrix};
use crate::error::Result;
use crate::opcore::Operator;
use crate::par::{map_slice, Execution};

pub fn analyze_all(ops: &[Operator]) -> Vec<Result<AnalysisReport>> {
    analyze_all_with(ops, Execution::default())
}

pub fn analyze_all_with(ops: &[Operator], exec: Execution) -> Vec<Result<AnalysisReport>> {
    // the inner column loop stays sequential; parallelism is across operators
    map_slice(ops, exec, |a| analyze_with(a, None, Execution::Sequential))
}

pub fn classify_all_with(ops: &[Operator], exec: Execution) -> Vec<Result<Classification>> {
    map_slice(ops, exec, classify_structural)
}

pub fn index_all_with(ops: &[Operator], exec: Execution) -> Vec<Result<i64>> {
    map_slice(ops, exec, index)
}

pub fn truncations_with(ops: &[Operator], cols: usize, exec: Execution) -> Vec<TruncMatrix> {
    map_slice(ops, exec, |a| truncation_with(a, cols, Execution::Sequential))
}

/// Pairwise products `a_i * b_i`.
pub fn products_with(a: &[Operator], b: &[Operator], exec: Execution) -> Vec<Operator> {
    let pairs: Vec<(&Operator, &Operator)> = a.iter().zip(b).collect();
    map_slice(&pairs, exec, |(x, y)| x.mul(y))
}
