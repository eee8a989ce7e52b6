//! Error-table emitter for the diagonal Shafer estimates: columns K, N,
//! Taylor error, branch errors, average error.

use serde_json::{json, Value};
use tfsolve_num::PrecisionContext;

use crate::estimates::{partial_sum_error, shafer_x0, ShaferEstimate};
use crate::ResumError;

#[derive(Debug, Clone)]
pub struct ShaferTableRow {
    pub k: usize,
    pub n: usize,
    pub taylor_error: String,
    pub plus_error: String,
    pub minus_error: String,
    pub average_error: String,
    pub estimate: ShaferEstimate,
}

pub fn shafer_table(
    ks: &[usize],
    ctx: &PrecisionContext,
) -> Result<Vec<ShaferTableRow>, ResumError> {
    let rows = tfsolve_num::par::par_map(ks, |&k| -> Result<ShaferTableRow, ResumError> {
        let est = shafer_x0(k, ctx)?;
        let n = est.matched_terms;
        let taylor = partial_sum_error(n - 1, ctx);
        Ok(ShaferTableRow {
            k,
            n,
            taylor_error: taylor.to_sig_string(3),
            plus_error: est.errors.0.to_sig_string(3),
            minus_error: est.errors.1.to_sig_string(3),
            average_error: est.errors.2.to_sig_string(3),
            estimate: est,
        })
    });
    rows.into_iter().collect()
}

pub fn text_report(rows: &[ShaferTableRow]) -> String {
    let mut out = String::from(
        "#  K    N   taylor-err   plus-err     minus-err    average-err\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>4}   {:<12} {:<12} {:<12} {:<12}\n",
            r.k, r.n, r.taylor_error, r.plus_error, r.minus_error, r.average_error
        ));
    }
    out
}

pub fn json_report(rows: &[ShaferTableRow]) -> Value {
    json!(rows
        .iter()
        .map(|r| {
            json!({
                "K": r.k,
                "N": r.n,
                "taylor_error": r.taylor_error,
                "plus_error": r.plus_error,
                "minus_error": r.minus_error,
                "average_error": r.average_error,
            })
        })
        .collect::<Vec<_>>())
}
