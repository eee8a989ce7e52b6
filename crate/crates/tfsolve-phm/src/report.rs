use serde_json::{json, Value};

use crate::sequence::RootSequence;

/// Aligned-text convergence report: one row per dimension.
pub fn text_report(seq: &RootSequence, digits: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# {} PHM root sequence, d = {}\n",
        seq.kind.name(),
        seq.d
    ));
    out.push_str(&format!("{:>4}  {:<width$}  {:>6}\n", "D", "root", "agreed", width = digits + 8));
    for (i, (dim, root)) in seq.roots.iter().enumerate() {
        let agreed = if i == 0 {
            "-".to_string()
        } else {
            seq.agreed_digits[i - 1].to_string()
        };
        out.push_str(&format!(
            "{:>4}  {:<width$}  {:>6}\n",
            dim,
            root.to_sig_string(digits),
            agreed,
            width = digits + 8
        ));
    }
    out.push_str(&format!("estimate: {}\n", seq.estimate.to_sig_string(digits)));
    out
}

pub fn json_report(seq: &RootSequence, digits: usize) -> Value {
    json!({
        "equation": seq.kind.name(),
        "d": seq.d,
        "rows": seq
            .roots
            .iter()
            .enumerate()
            .map(|(i, (dim, root))| {
                json!({
                    "D": dim,
                    "root": root.to_sig_string(digits),
                    "agreed_digits": if i == 0 { None } else { Some(seq.agreed_digits[i - 1]) },
                })
            })
            .collect::<Vec<_>>(),
        "estimate": seq.estimate.to_sig_string(digits),
    })
}
