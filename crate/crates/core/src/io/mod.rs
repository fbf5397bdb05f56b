//! Text formats: the JSON graph document and Graphviz DOT.

pub mod dot;
pub mod json;

pub use dot::to_dot;
pub use json::{audit_labels, from_json, to_json, JsonError, LabelMismatch, ParsedGraph};
