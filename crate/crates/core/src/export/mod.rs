//! Output formats: canonical JSON, Graphviz DOT and census reports.

pub mod dot;
pub mod json;
pub mod stats;

pub use dot::{is_valid_color, to_dot, DotStyle, InvalidColor};
pub use json::{ast_from_json, from_json, to_json, to_json_value, JsonError, BOMI_VERSION, JSON_SCHEMA};
pub use stats::{stats_report, StatsFormat};
