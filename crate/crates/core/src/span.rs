use std::fmt;
use std::sync::Arc;

/// A 1-based line/column position in a source text. Columns count characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl Pos {
    pub const fn new(line: u32, col: u32) -> Self {
        Self { line, col }
    }
}

/// Region of a source file. `end` is exclusive: it is the position just past
/// the last character of the region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub file: Arc<str>,
    pub start: Pos,
    pub end: Pos,
}

impl SourceSpan {
    pub fn new(file: Arc<str>, start: Pos, end: Pos) -> Self {
        debug_assert!(start <= end, "span start after end");
        Self { file, start, end }
    }

    /// Placeholder span used where no source exists (generated or stripped ASTs).
    pub fn synthetic() -> Self {
        Self {
            file: Arc::from(""),
            start: Pos::new(0, 0),
            end: Pos::new(0, 0),
        }
    }

    pub fn start_line(&self) -> u32 {
        self.start.line
    }

    pub fn start_col(&self) -> u32 {
        self.start.col
    }

    pub fn end_line(&self) -> u32 {
        self.end.line
    }

    pub fn end_col(&self) -> u32 {
        self.end.col
    }

    /// Smallest span covering both `self` and `other`.
    pub fn to(&self, other: &SourceSpan) -> SourceSpan {
        SourceSpan {
            file: self.file.clone(),
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }

    pub fn sort_key(&self) -> (u32, u32) {
        (self.start.line, self.start.col)
    }
}

impl Default for SourceSpan {
    fn default() -> Self {
        Self::synthetic()
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.start.line, self.start.col)
    }
}
