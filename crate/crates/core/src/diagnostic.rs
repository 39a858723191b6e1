//! Diagnostics produced by the parser and resolver, and their terminal rendering.

use std::fmt;

use crate::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

/// Machine-readable class of a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagnosticCode {
    UnknownKeyword,
    InvalidEnumValue,
    UnterminatedString,
    UnterminatedBlock,
    UnterminatedComment,
    UnexpectedCharacter,
    UnexpectedToken,
    DuplicateAttribute,
    DuplicateValue,
    InvalidUtf8,
    // resolution
    DuplicateId,
    UnresolvedReference,
    TypeMismatch,
    DuplicateRelation,
    // conformance
    Structural,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::UnknownKeyword => "UnknownKeyword",
            DiagnosticCode::InvalidEnumValue => "InvalidEnumValue",
            DiagnosticCode::UnterminatedString => "UnterminatedString",
            DiagnosticCode::UnterminatedBlock => "UnterminatedBlock",
            DiagnosticCode::UnterminatedComment => "UnterminatedComment",
            DiagnosticCode::UnexpectedCharacter => "UnexpectedCharacter",
            DiagnosticCode::UnexpectedToken => "UnexpectedToken",
            DiagnosticCode::DuplicateAttribute => "DuplicateAttribute",
            DiagnosticCode::DuplicateValue => "DuplicateValue",
            DiagnosticCode::InvalidUtf8 => "InvalidUtf8",
            DiagnosticCode::DuplicateId => "DuplicateId",
            DiagnosticCode::UnresolvedReference => "UnresolvedReference",
            DiagnosticCode::TypeMismatch => "TypeMismatch",
            DiagnosticCode::DuplicateRelation => "DuplicateRelation",
            DiagnosticCode::Structural => "Structural",
        }
    }
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: DiagnosticCode,
    pub message: String,
    pub span: SourceSpan,
    pub hint: Option<String>,
}

impl Diagnostic {
    pub fn error(code: DiagnosticCode, message: impl Into<String>, span: SourceSpan) -> Self {
        Self {
            severity: Severity::Error,
            code,
            message: message.into(),
            span,
            hint: None,
        }
    }

    pub fn warning(code: DiagnosticCode, message: impl Into<String>, span: SourceSpan) -> Self {
        Self {
            severity: Severity::Warning,
            ..Self::error(code, message, span)
        }
    }

    pub fn with_hint(mut self, hint: impl Into<String>) -> Self {
        self.hint = Some(hint.into());
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// Renders `file:line:col: severity: message`, the offending source line, a
/// caret underline and, if present, a `hint:` line.
///
/// When the span does not fall inside `source` (e.g. a synthetic span) only
/// the header and hint are produced.
pub fn render_diagnostic(d: &Diagnostic, source: &str) -> String {
    let mut out = format!(
        "{}:{}:{}: {}: {}\n",
        d.span.file, d.span.start.line, d.span.start.col, d.severity, d.message
    );

    let line_no = d.span.start.line as usize;
    if let Some(line) = line_no.checked_sub(1).and_then(|i| source.lines().nth(i)) {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let start = (d.span.start.col as usize).saturating_sub(1);
        let line_len = line.chars().count();
        let width = if d.span.end.line == d.span.start.line {
            (d.span.end.col as usize).saturating_sub(d.span.start.col as usize)
        } else {
            line_len.saturating_sub(start)
        }
        .max(1);

        // keep tabs so the caret lines up with the echoed source line
        let pad: String = line
            .chars()
            .take(start)
            .map(|c| if c == '\t' { '\t' } else { ' ' })
            .collect();
        let pad_len = pad.chars().count();
        let pad = pad + &" ".repeat(start.saturating_sub(pad_len));

        out.push_str(line);
        out.push('\n');
        out.push_str(&pad);
        out.push_str(&"^".repeat(width));
        out.push('\n');
    }

    if let Some(hint) = &d.hint {
        out.push_str("hint: ");
        out.push_str(hint);
        out.push('\n');
    }
    out
}
