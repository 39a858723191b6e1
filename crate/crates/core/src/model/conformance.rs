//! Multiplicity and enumeration checks that reference resolution cannot express.

use crate::diagnostic::{Diagnostic, DiagnosticCode};
use crate::model::types::SuperType;
use crate::model::BomiModel;
use crate::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// An island must have at least one type.
    EmptyIslandTypes,
    /// A driver must drive at least one island.
    EmptyDrives,
    /// `Other` super types need a label.
    EmptySuperTypeLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralViolation {
    pub kind: ViolationKind,
    pub subject: String,
    pub message: String,
    pub span: SourceSpan,
}

impl StructuralViolation {
    pub fn to_diagnostic(&self) -> Diagnostic {
        Diagnostic::error(DiagnosticCode::Structural, self.message.clone(), self.span.clone())
    }
}

pub fn conformance(model: &BomiModel) -> Vec<StructuralViolation> {
    let mut out = Vec::new();
    for bo in &model.boundary_objects {
        if matches!(&bo.super_type, Some(SuperType::Other(label)) if label.trim().is_empty()) {
            out.push(StructuralViolation {
                kind: ViolationKind::EmptySuperTypeLabel,
                subject: bo.id.clone(),
                message: format!("boundary object `{}` has an empty super type label", bo.id),
                span: bo.span.clone(),
            });
        }
    }
    for mi in &model.islands {
        if mi.types.is_empty() {
            out.push(StructuralViolation {
                kind: ViolationKind::EmptyIslandTypes,
                subject: mi.id.clone(),
                message: format!("methodological island `{}` needs at least one type", mi.id),
                span: mi.span.clone(),
            });
        }
    }
    for d in &model.drivers {
        if d.drives.is_empty() {
            out.push(StructuralViolation {
                kind: ViolationKind::EmptyDrives,
                subject: d.id.clone(),
                message: format!("driver `{}` does not drive any island", d.id),
                span: d.span.clone(),
            });
        }
    }
    out.sort_by_key(|v| v.span.sort_key());
    out
}
