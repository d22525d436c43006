//! Rendering of output records as plain text, JSON, CSV, or markdown.

use crate::record::{OutputRecord, SequenceRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// "Z_2 \u{2295} Z_10 \u{2295} ..." from decimal factor strings; the trivial
/// group renders as "0".
pub fn group_display(factors: &[String]) -> String {
    if factors.is_empty() {
        "0".to_string()
    } else {
        factors
            .iter()
            .map(|f| format!("Z_{f}"))
            .collect::<Vec<_>>()
            .join(" \u{2295} ")
    }
}

/// Factors joined by `x` for CSV cells ("2x10x10x10"); "1" when trivial.
fn group_csv(factors: &[String]) -> String {
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("x")
    }
}

fn has_groups(records: &[OutputRecord]) -> bool {
    records.iter().any(|r| r.invariant_factors.is_some())
}

/// Render a single record: bare group in text mode for Jacobian queries,
/// bare count for tau queries.
pub fn render_single(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Text => match &record.invariant_factors {
            Some(factors) => group_display(factors),
            None => record.tau.clone(),
        },
        _ => render_table(std::slice::from_ref(record), format),
    }
}

/// Render a batch of records.
pub fn render_table(records: &[OutputRecord], format: Format) -> String {
    let with_groups = has_groups(records);
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(if with_groups { "n,k,tau,jacobian\n" } else { "n,k,tau\n" });
            for r in records {
                match &r.invariant_factors {
                    Some(f) => out.push_str(&format!("{},{},{},{}\n", r.n, r.k, r.tau, group_csv(f))),
                    None => out.push_str(&format!("{},{},{}\n", r.n, r.k, r.tau)),
                }
            }
            out
        }
        Format::Markdown => {
            let mut out = String::new();
            if with_groups {
                out.push_str("| n | k | tau | jacobian |\n| --- | --- | --- | --- |\n");
            } else {
                out.push_str("| n | k | tau |\n| --- | --- | --- |\n");
            }
            for r in records {
                match &r.invariant_factors {
                    Some(f) => out.push_str(&format!(
                        "| {} | {} | {} | {} |\n",
                        r.n,
                        r.k,
                        r.tau,
                        group_display(f)
                    )),
                    None => out.push_str(&format!("| {} | {} | {} |\n", r.n, r.k, r.tau)),
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in records {
                match &r.invariant_factors {
                    Some(f) => out.push_str(&format!(
                        "GP({},{}): tau = {}, jacobian = {}\n",
                        r.n,
                        r.k,
                        r.tau,
                        group_display(f)
                    )),
                    None => out.push_str(&format!("GP({},{}): tau = {}\n", r.n, r.k, r.tau)),
                }
            }
            out
        }
    }
}

/// Render a sequence: text is one term per line.
pub fn render_sequence(record: &SequenceRecord, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in &record.terms {
                out.push_str(t);
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("record serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("index,term\n");
            for (i, t) in record.terms.iter().enumerate() {
                out.push_str(&format!("{},{}\n", record.start + i as i64, t));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| index | term |\n| --- | --- |\n");
            for (i, t) in record.terms.iter().enumerate() {
                out.push_str(&format!("| {} | {} |\n", record.start + i as i64, t));
            }
            out
        }
    }
}
