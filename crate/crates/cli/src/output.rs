//! Deterministic text and JSON rendering of reports.

use serde_json::{json, Value};
use superlie::cohomology::{SkewClosureReport, SolveReport};
use superlie::{ConsistencyReport, VerdictReport};

pub enum Format {
    Text,
    Json,
}

pub fn parse_format(text: &str) -> anyhow::Result<Format> {
    match text {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        other => anyhow::bail!("--format must be 'text' or 'json', got '{other}'"),
    }
}

pub fn emit(value: Value, format: &Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("valid json")),
        Format::Text => println!("{}", render_text(&value, 0).trim_end()),
    }
}

fn render_text(value: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            let mut out = String::new();
            for (key, val) in map {
                match val {
                    Value::Array(items) if items.is_empty() => {
                        out.push_str(&format!("{pad}{key}: (none)\n"));
                    }
                    Value::Array(items) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        for item in items {
                            match item {
                                Value::String(s) => out.push_str(&format!("{pad}  - {s}\n")),
                                other => out.push_str(&render_text(other, indent + 1)),
                            }
                        }
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        out.push_str(&render_text(val, indent + 1));
                    }
                    Value::String(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                    other => out.push_str(&format!("{pad}{key}: {other}\n")),
                }
            }
            out
        }
        Value::String(s) => format!("{pad}{s}\n"),
        other => format!("{pad}{other}\n"),
    }
}

pub fn consistency_json(report: &ConsistencyReport) -> Value {
    use superlie::algebra::AxiomDefect;
    let counterexample = match &report.counterexample {
        None => Value::Null,
        Some(AxiomDefect::Skew { x, y, defect }) => json!({
            "kind": "super-skew",
            "pair": format!("[{x}, {y}]"),
            "defect": defect.to_string(),
        }),
        Some(AxiomDefect::Jacobi { x, y, z, defect }) => json!({
            "kind": "super-jacobi",
            "triple": format!("({x}, {y}, {z})"),
            "defect": defect.to_string(),
        }),
    };
    json!({
        "pairsChecked": report.pairs_checked,
        "triplesChecked": report.triples_checked,
        "passed": report.passed(),
        "counterexample": counterexample,
    })
}

pub fn verdict_json(report: &VerdictReport) -> Value {
    json!({
        "skew": report.skew,
        "evenParity": report.even_parity,
        "cybeZero": report.cybe_zero,
        "mybeEmpty": report.mybe_empty,
        "coJacobiZero": report.co_jacobi_zero,
        "compatibilityZero": report.compatibility_zero,
        "verdict": report.verdict,
    })
}

pub fn solve_json(report: &SolveReport) -> Value {
    let representatives: Vec<Value> = report
        .quotient_representatives
        .iter()
        .map(|table| {
            let values: Vec<Value> = table
                .iter()
                .map(|(key, value)| json!({ "key": key.to_string(), "value": value.to_string() }))
                .collect();
            json!({
                "parity": table.parity.to_string(),
                "values": values,
            })
        })
        .collect();
    json!({
        "degree": report.degree.to_string(),
        "solutionDimension": report.solution_basis.len(),
        "innerDimension": report.inner_basis.len(),
        "quotientDimension": report.quotient_dimension,
        "boundaryFlags": report.boundary_flags,
        "representatives": representatives,
    })
}

pub fn skew_closure_json(report: &SkewClosureReport) -> Value {
    json!({
        "closureDimension": report.closure_basis.len(),
        "skewDimension": report.skew_basis.len(),
        "equalOnCore": report.equal_on_core,
    })
}
