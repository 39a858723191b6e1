//! Smell detection over resolved models.

pub mod config;
pub mod evaluate;
pub mod logic;
pub mod metrics;
pub mod rules;

use thiserror::Error;

pub use config::{AnalysisConfig, ComplexityThresholds};
pub use evaluate::{evaluate, Finding};
pub use logic::{level_matches, Truth};
pub use metrics::{complexity, governance_diversity, ComplexityMetrics};
pub use rules::{
    builtin_rules, find_rule, AttrInput, FindingSeverity, Rule, SubjectKind, INCOMPLETENESS_RULE_ID,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("unknown rule id `{0}`")]
    UnknownRuleId(String),
    #[error("threshold `{name}` must be positive, got {value}")]
    InvalidThreshold { name: &'static str, value: i64 },
    #[error("invalid severity `{0}` (expected info or warning)")]
    InvalidSeverity(String),
    #[error("invalid rule configuration: {0}")]
    Config(String),
}
