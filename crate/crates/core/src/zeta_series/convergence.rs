use std::time::Instant;

use rayon::prelude::*;

use super::{evaluate, reference_value, EvalRequest};
use crate::error::{Error, Result};
use crate::numerics::HighPrecFloat;

/// One row of a convergence benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: u64,
    pub partial: HighPrecFloat,
    pub reference: HighPrecFloat,
    pub abs_error: HighPrecFloat,
    pub rel_error: HighPrecFloat,
    pub tail_estimate: HighPrecFloat,
    pub elapsed_seconds: f64,
}

impl ConvergenceRow {
    /// Builds a row, recomputing both error columns from the two values.
    pub fn new(n: u64, partial: HighPrecFloat, reference: HighPrecFloat, tail: HighPrecFloat, secs: f64) -> Self {
        let abs_error = (&partial - &reference).abs();
        let rel_error = if reference.is_zero() { abs_error.clone() } else { &abs_error / &reference.abs() };
        ConvergenceRow { n, partial, reference, abs_error, rel_error, tail_estimate: tail, elapsed_seconds: secs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares slope of `log(abs_error)` against `log N`.
    pub exponent: Option<f64>,
}

/// Slope of the least-squares line through `(log N, log err)`, skipping zero errors.
pub fn fit_exponent(points: &[(u64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(_, e)| *e > 0.0 && e.is_finite())
        .map(|&(n, e)| ((n as f64).ln(), e.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Evaluates `req` at each `N` against its reference. Rows run in parallel;
/// each is self-contained, so values do not depend on scheduling.
pub fn convergence_table(req: &EvalRequest, ns: &[u64]) -> Result<ConvergenceTable> {
    if ns.is_empty() {
        return Err(Error::Usage("at least one N is required".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage("term budgets must be strictly increasing".into()));
    }
    let reference = reference_value(req)?;
    let rows = ns
        .par_iter()
        .map(|&n| {
            let mut r = req.clone();
            r.terms = n;
            let start = Instant::now();
            let res = evaluate(&r)?;
            let secs = start.elapsed().as_secs_f64();
            Ok(ConvergenceRow::new(n, res.value, reference.clone(), res.tail_estimate, secs))
        })
        .collect::<Result<Vec<_>>>()?;
    let pts: Vec<(u64, f64)> = rows.iter().map(|r| (r.n, r.abs_error.to_f64())).collect();
    Ok(ConvergenceTable { exponent: fit_exponent(&pts), rows })
}
