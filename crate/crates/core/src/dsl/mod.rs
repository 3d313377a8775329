//! The definition DSL: algebra specs, element literals, and presets.

mod element;
mod lex;
mod presets;
mod spec;

pub use element::{parse_element, ParsedValue};
pub use presets::{preset, UnknownPreset, PRESET_NAMES};
pub use spec::{parse_spec, serialize_spec};
