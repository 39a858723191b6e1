//! Boundary Objects and Methodological Islands (BOMI) modelling.
//!
//! Models are written in the `.bomi` language, parsed into a syntax tree,
//! resolved into a [`BomiModel`] whose references are checked indices, and
//! then analysed for coordination smells or exported as JSON, DOT or
//! census tables.
//!
//! ```
//! let (ast, diags) = bomi::syntax::parse(bomi::corpus::COMPANY_A, "company-a.bomi");
//! assert!(diags.is_empty());
//! let model = bomi::model::resolve(&ast).unwrap();
//! assert_eq!(model.census().to_string(), "1 2 2 1 2 1 1");
//! ```

pub mod analysis;
pub mod corpus;
pub mod diagnostic;
pub mod export;
pub mod model;
pub mod span;
pub mod syntax;
#[cfg(feature = "testkit")]
pub mod testkit;

pub use analysis::{evaluate, AnalysisConfig, Finding, FindingSeverity};
pub use diagnostic::{render_diagnostic, Diagnostic, DiagnosticCode, Severity};
pub use model::{resolve, BomiModel, ElementCensus};
pub use span::SourceSpan;
