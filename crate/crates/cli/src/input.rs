//! Input resolution: algebra sources, windows, and element literals.

use anyhow::{anyhow, bail, Context, Result};
use superlie::module::CoeffDescriptor;
use superlie::{parse_element, parse_spec, preset, AlgebraSpec, HalfInt, ParsedValue, Tensor2, Window};

use crate::{AlgebraSource, WindowArgs};

pub fn load_algebra(source: &AlgebraSource) -> Result<AlgebraSpec> {
    match (&source.preset, &source.spec) {
        (Some(name), None) => preset(name).map_err(|e| anyhow!("{e}")),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read spec file '{path}'"))?;
            parse_spec(&text).map_err(|e| anyhow!("{path}:{e}"))
        }
        _ => bail!("exactly one of --preset or --spec is required"),
    }
}

pub fn parse_half(text: &str, what: &str) -> Result<HalfInt> {
    HalfInt::parse(text).ok_or_else(|| anyhow!("{what} must be an integer or half-integer, got '{text}'"))
}

pub fn parse_window(args: &WindowArgs) -> Result<Window> {
    let domain = parse_half(&args.domain, "--domain")?;
    let codomain = parse_half(&args.codomain, "--codomain")?;
    let core = parse_half(&args.core, "--core")?;
    Window::new(domain, codomain, core).map_err(|e| anyhow!(e))
}

pub fn parse_coeff(text: &str) -> Result<CoeffDescriptor> {
    CoeffDescriptor::parse(text)
        .ok_or_else(|| anyhow!("--coeff must be adjoint, tensor2 or block:X.Y with X,Y in {{even, g+, g-}}"))
}

/// `--r` accepts a file path or an inline literal; file contents win when
/// the argument names an existing file.
pub fn load_value(spec: &AlgebraSpec, text: &str) -> Result<ParsedValue> {
    let literal = if std::path::Path::new(text).is_file() {
        std::fs::read_to_string(text).with_context(|| format!("cannot read '{text}'"))?
    } else {
        text.to_string()
    };
    parse_element(spec, literal.trim()).map_err(|e| anyhow!("{e}"))
}

pub fn load_tensor2(spec: &AlgebraSpec, text: &str) -> Result<Tensor2> {
    load_value(spec, text)?
        .into_tensor2()
        .ok_or_else(|| anyhow!("expected a rank-2 tensor literal"))
}
