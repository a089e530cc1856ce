//! Text, CSV and JSON renderings of command results.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::{HighPrecFloat, Mode, SeriesResult};
use crate::verify::{Report, Status};
use crate::zeta_series::{ConvergenceRow, ConvergenceTable, EvalRequest};

const ERR_SIG: usize = 3;

/// Renders `v` with `sig` significant digits: positional for moderate
/// magnitudes, scientific otherwise.
pub fn decimal(v: &HighPrecFloat, sig: usize) -> String {
    let sci = v.to_sci(sig);
    let exp10: i64 = match sci.rsplit_once('e') {
        Some((_, e)) => e.parse().unwrap_or(0),
        None => return sci,
    };
    if (-5..15).contains(&exp10) {
        v.to_fixed((sig as i64 - 1 - exp10).max(0) as usize)
    } else {
        sci
    }
}

fn short(v: &HighPrecFloat) -> String {
    v.to_sci(ERR_SIG)
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    write(&mut w).map_err(|e| Error::Numeric(format!("csv: {e}")))?;
    let bytes = w.into_inner().map_err(|e| Error::Numeric(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Numeric(format!("csv: {e}")))
}

#[derive(Debug, Serialize)]
pub struct ResultRow {
    pub value: String,
    pub terms_used: usize,
    pub tail_estimate: String,
    pub reference: String,
    pub abs_error: String,
    pub mode: Mode,
}

impl ResultRow {
    pub fn new(res: &SeriesResult, reference: &HighPrecFloat, sig: usize) -> Self {
        let err = (&res.value - reference).abs();
        ResultRow {
            value: decimal(&res.value, sig),
            terms_used: res.terms_used,
            tail_estimate: short(&res.tail_estimate),
            reference: decimal(reference, sig),
            abs_error: short(&err),
            mode: res.mode,
        }
    }

    pub fn text(&self, req: &EvalRequest) -> String {
        format!(
            "formula: {}\nN: {}\nmode: {}\nvalue: {}\ntail_estimate: {}\nreference: {}\nabs_error: {}\n",
            req.formula, self.terms_used, self.mode, self.value, self.tail_estimate, self.reference, self.abs_error
        )
    }

    pub fn csv(&self, req: &EvalRequest) -> Result<String> {
        csv_string(|w| {
            w.write_record(["formula", "N", "value", "tail_estimate", "reference", "abs_error"])?;
            w.write_record([
                req.formula.to_string(),
                self.terms_used.to_string(),
                self.value.clone(),
                self.tail_estimate.clone(),
                self.reference.clone(),
                self.abs_error.clone(),
            ])
        })
    }
}

fn exponent_str(e: Option<f64>) -> String {
    match e {
        Some(v) => format!("{v:.6}"),
        None => "nan".to_string(),
    }
}

pub fn converge_text(t: &ConvergenceTable, sig: usize) -> String {
    let mut s = format!("{:>10}  {:<w$}  {:>10}  {:>10}  {:>10}\n", "N", "partial_sum", "abs_error", "rel_error", "tail", w = sig + 3);
    for r in &t.rows {
        s.push_str(&format!(
            "{:>10}  {:<w$}  {:>10}  {:>10}  {:>10}\n",
            r.n,
            decimal(&r.partial, sig),
            short(&r.abs_error),
            short(&r.rel_error),
            short(&r.tail_estimate),
            w = sig + 3
        ));
    }
    if let Some(r) = t.rows.first() {
        s.push_str(&format!("reference: {}\n", decimal(&r.reference, sig)));
    }
    s.push_str(&format!("exponent: {}\n", exponent_str(t.exponent)));
    s
}

pub fn converge_csv(t: &ConvergenceTable, sig: usize) -> Result<String> {
    let mut s = csv_string(|w| {
        w.write_record(["N", "partial_sum", "reference", "abs_error", "rel_error", "seconds"])?;
        for r in &t.rows {
            w.write_record([
                r.n.to_string(),
                decimal(&r.partial, sig),
                decimal(&r.reference, sig),
                short(&r.abs_error),
                short(&r.rel_error),
                format!("{:.6}", r.elapsed_seconds),
            ])?;
        }
        Ok(())
    })?;
    s.push_str(&format!("# exponent,{}\n", exponent_str(t.exponent)));
    Ok(s)
}

pub fn converge_row_json(r: &ConvergenceRow, sig: usize) -> Value {
    json!({
        "N": r.n,
        "partial_sum": decimal(&r.partial, sig),
        "reference": decimal(&r.reference, sig),
        "abs_error": short(&r.abs_error),
        "rel_error": short(&r.rel_error),
        "tail_estimate": short(&r.tail_estimate),
        "seconds": r.elapsed_seconds,
    })
}

fn params_str(r: &Report) -> String {
    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Counts over the cases of one identity.
pub fn case_summary(reports: &[Report]) -> String {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    format!(
        "cases={}, pass={}, fail={}, skip={}",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skip)
    )
}

pub fn verify_text(reports: &[Report], summary: &str) -> String {
    let mut s = String::new();
    for r in reports {
        let p = params_str(r);
        let sep = if p.is_empty() { "" } else { " " };
        s.push_str(&format!("{} {}{sep}{p}: {}\n", r.status, r.id, r.detail));
        if r.status == Status::Fail {
            s.push_str(&format!("    lhs={}\n    rhs={}\n", r.lhs, r.rhs));
        }
    }
    s.push_str(summary);
    s.push('\n');
    s
}

pub fn verify_csv(reports: &[Report]) -> Result<String> {
    csv_string(|w| {
        w.write_record(["id", "params", "status", "lhs", "rhs", "detail"])?;
        for r in reports {
            w.write_record([r.id.clone(), params_str(r), r.status.to_string(), r.lhs.clone(), r.rhs.clone(), r.detail.clone()])?;
        }
        Ok(())
    })
}

pub fn constants_csv(pairs: &[(String, String)]) -> Result<String> {
    csv_string(|w| {
        w.write_record(["name", "value"])?;
        for (n, v) in pairs {
            w.write_record([n, v])?;
        }
        Ok(())
    })
}
