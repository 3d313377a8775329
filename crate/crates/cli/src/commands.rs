//! Subcommand implementations.

use std::process::ExitCode;

use anyhow::{anyhow, Result};
use serde_json::json;
use superlie::module::CoeffDescriptor;
use superlie::{
    check_spec_consistency, delta_r, h1_window, invariant_space, mybe_defect, serialize_spec,
    skew_closure_space, superbialgebra_verdict, tensor, ParsedValue, Window,
};

use crate::input::{load_algebra, load_tensor2, load_value, parse_coeff, parse_half, parse_window};
use crate::output::{
    consistency_json, emit, parse_format, skew_closure_json, solve_json, verdict_json,
};
use crate::{AlgebraSource, WindowArgs};

fn ok() -> Result<ExitCode> {
    Ok(ExitCode::SUCCESS)
}

fn fail() -> Result<ExitCode> {
    Ok(ExitCode::from(1))
}

pub fn check_algebra(source: &AlgebraSource, window: &str, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let bound = parse_half(window, "--window")?;
    let report = check_spec_consistency(&spec, bound).map_err(|e| anyhow!("{e}"))?;
    let passed = report.passed();
    emit(json!({ "algebra": spec.name, "window": bound.to_string(), "report": consistency_json(&report) }), &format);
    if passed {
        ok()
    } else {
        fail()
    }
}

pub fn cybe(source: &AlgebraSource, r: &str, mybe: Option<&str>, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let r = load_tensor2(&spec, r)?;
    let c = tensor::cybe(&spec, &r).map_err(|e| anyhow!("{e}"))?;
    let zero = c.is_zero();

    let mut body = json!({
        "cybe": if zero { "zero".to_string() } else { c.to_string() },
    });
    if let Some(bound) = mybe {
        let bound = parse_half(bound, "--mybe")?;
        let defects = mybe_defect(&spec, &r, bound).map_err(|e| anyhow!("{e}"))?;
        let listed: Vec<_> = defects
            .iter()
            .map(|(key, value)| json!({ "x": key.to_string(), "defect": value.to_string() }))
            .collect();
        body["mybeDefects"] = json!(listed);
        body["mybeEmpty"] = json!(defects.is_empty());
    }
    emit(body, &format);
    if zero {
        ok()
    } else {
        fail()
    }
}

pub fn delta(source: &AlgebraSource, r: &str, x: &str, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let r = load_tensor2(&spec, r)?;
    let x = load_value(&spec, x)?
        .into_element()
        .ok_or_else(|| anyhow!("--x must be a rank-1 element literal"))?;
    let value = delta_r(&spec, &r, &x).map_err(|e| anyhow!("{e}"))?;
    emit(json!({ "delta": value.to_string() }), &format);
    ok()
}

pub fn verify_bialgebra(source: &AlgebraSource, r: &str, window: &str, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let r = load_tensor2(&spec, r)?;
    let bound = parse_half(window, "--window")?;
    let window = Window { domain: bound, codomain: bound, core: bound };
    let report = superbialgebra_verdict(&spec, &r, window).map_err(|e| anyhow!("{e}"))?;
    let verdict = report.verdict;
    emit(verdict_json(&report), &format);
    if verdict {
        ok()
    } else {
        fail()
    }
}

pub fn h1(
    source: &AlgebraSource,
    coeff: &str,
    degree: &str,
    window: &WindowArgs,
    format: &str,
) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let coeff = parse_coeff(coeff)?;
    let degree = parse_half(degree, "--degree")?;
    let window = parse_window(window)?;
    let report = h1_window(&spec, &coeff, degree, &window);
    emit(solve_json(&report), &format);
    ok()
}

pub fn invariants(
    source: &AlgebraSource,
    coeff: &str,
    domain: &str,
    codomain: &str,
    format: &str,
) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let coeff = parse_coeff(coeff)?;
    let domain = parse_half(domain, "--domain")?;
    let codomain = parse_half(codomain, "--codomain")?;
    let window = Window::new(domain, codomain, domain).map_err(|e| anyhow!(e))?;
    let basis = invariant_space(&spec, &coeff, &window);
    let listed: Vec<String> = basis.iter().map(|v| v.to_string()).collect();
    emit(json!({ "dimension": basis.len(), "basis": listed }), &format);
    ok()
}

pub fn skew_closure(source: &AlgebraSource, window: &WindowArgs, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    let window = parse_window(window)?;
    let report = skew_closure_space(&spec, &window);
    let equal = report.equal_on_core;
    emit(skew_closure_json(&report), &format);
    if equal {
        ok()
    } else {
        fail()
    }
}

pub fn parse(source: &AlgebraSource, element: Option<&str>, format: &str) -> Result<ExitCode> {
    let format = parse_format(format)?;
    let spec = load_algebra(source)?;
    match element {
        None => {
            // canonical serialization straight to stdout in text mode
            match format {
                crate::output::Format::Text => print!("{}", serialize_spec(&spec)),
                crate::output::Format::Json => {
                    emit(json!({ "algebra": spec.name, "canonical": serialize_spec(&spec) }), &format)
                }
            }
        }
        Some(text) => {
            let value = load_value(&spec, text)?;
            let (rank, canonical) = match &value {
                ParsedValue::Element(e) => (1, e.to_string()),
                ParsedValue::Tensor2(t) => (2, t.to_string()),
                ParsedValue::Tensor3(t) => (3, t.to_string()),
            };
            emit(json!({ "rank": rank, "canonical": canonical }), &format);
        }
    }
    ok()
}
