//! Rendering results as text, JSON or TSV.

use std::fmt::Write as _;

use idealpow_core::constructions::{GrowthTable, ProbeReport, ProbeSummary};
use idealpow_core::invariants::HilbertData;
use idealpow_core::Ideal;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn ideal(ideal: &Ideal, format: Format) -> String {
    let gens: Vec<String> = ideal.canonical_generators().iter().map(ToString::to_string).collect();
    match format {
        Format::Text => format!("{ideal}\n"),
        Format::Json => to_json(&json!({ "ring": ideal.ring().to_string(), "generators": gens })),
        Format::Tsv => gens.iter().map(|g| format!("{g}\n")).collect(),
    }
}

pub fn number(key: &str, value: impl Into<Value> + std::fmt::Display + Copy, format: Format) -> String {
    match format {
        Format::Text | Format::Tsv => format!("{value}\n"),
        Format::Json => to_json(&json!({ key: value.into() })),
    }
}

pub fn hilbert(data: &HilbertData, format: Format) -> String {
    match format {
        Format::Text => format!("{data}\n"),
        Format::Json => to_json(&json!({
            "numerator": data.numerator,
            "dimension": data.dimension,
            "multiplicity": data.multiplicity,
        })),
        Format::Tsv => {
            let numerator: Vec<String> = data.numerator.iter().map(ToString::to_string).collect();
            format!("{}\t{}\t{}\n", numerator.join(","), data.dimension, data.multiplicity)
        }
    }
}

pub fn growth(table: &GrowthTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "length": r.length,
                        "ratio_num": r.ratio.numer().to_string(),
                        "ratio_den": r.ratio.denom().to_string(),
                    })
                })
                .collect();
            return to_json(&json!({ "subject": table.subject, "exponent": table.exponent, "rows": rows }));
        }
        Format::Text => {
            writeln!(out, "# {} against k^{}", table.subject, table.exponent).unwrap();
            writeln!(out, "k\tlength\tratio").unwrap();
        }
        Format::Tsv => {}
    }
    for r in &table.rows {
        writeln!(out, "{}\t{}\t{}", r.k, r.length, r.ratio).unwrap();
    }
    out
}

pub fn probe(report: &ProbeReport, format: Format) -> String {
    let summary = match report.summary {
        ProbeSummary::AllPass => "all pass".to_string(),
        ProbeSummary::FailAt(k) => format!("fails at k = {k}"),
    };
    match format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| json!({ "k": r.k, "verdict": r.verdict, "witness": r.witness.as_ref().map(ToString::to_string) }))
                .collect();
            let fail_at = match report.summary {
                ProbeSummary::AllPass => Value::Null,
                ProbeSummary::FailAt(k) => json!(k),
            };
            to_json(&json!({ "summary": summary, "fail_at": fail_at, "rows": rows }))
        }
        Format::Tsv => {
            let mut out = String::new();
            for r in &report.rows {
                let verdict = if r.verdict { "pass" } else { "fail" };
                let witness = r.witness.as_ref().map(ToString::to_string).unwrap_or_default();
                writeln!(out, "{}\t{}\t{}", r.k, verdict, witness).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &report.rows {
                match &r.witness {
                    None => writeln!(out, "k = {}: pass", r.k).unwrap(),
                    Some(w) => writeln!(out, "k = {}: fail, new generator {w}", r.k).unwrap(),
                }
            }
            writeln!(out, "{summary}").unwrap();
            out
        }
    }
}
