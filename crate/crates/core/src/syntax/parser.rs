//! Recursive-descent parser for `.bomi` sources.
//!
//! The parser never fails: it always returns a (possibly partial) [`Ast`] and
//! the diagnostics found along the way. After an error it resynchronises at
//! the next attribute key, declaration keyword or closing `}`.

use std::sync::Arc;

use crate::diagnostic::{Diagnostic, DiagnosticCode, Severity};
use crate::model::types::{
    Crud, DistanceType, DriverType, IslandType, Keyword, KnownSuperType, LifecycleStage, QualAttr,
    QualLevel, SuperType,
};
use crate::span::{Pos, SourceSpan};
use crate::syntax::ast::{
    Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, GovernsDecl, Ident, ResponsibleDecl,
    UsageDecl,
};
use crate::syntax::lexer::{lex, Tok, Token};
use crate::syntax::schema::{self, BlockKind, ValueKind};

/// Top-level declaration keywords.
const ELEMENT_KEYWORDS: &[&str] = &[
    "bo",
    "mi",
    "role",
    "usage",
    "responsible",
    "driver",
    "governance",
];

/// Parses UTF-8 source text.
pub fn parse(src: &str, file: &str) -> (Ast, Vec<Diagnostic>) {
    let file: Arc<str> = Arc::from(file);
    let mut diags = Vec::new();
    let tokens = lex(src, &file, &mut diags);
    let mut parser = Parser {
        tokens,
        pos: 0,
        diags,
    };
    let ast = parser.model();
    let mut diags = parser.diags;
    diags.sort_by_key(|d| d.span.sort_key());
    (ast, diags)
}

/// Parses raw bytes. Invalid UTF-8 is reported as an error and the
/// offending bytes are replaced before parsing continues.
pub fn parse_bytes(bytes: &[u8], file: &str) -> (Ast, Vec<Diagnostic>) {
    match std::str::from_utf8(bytes) {
        Ok(src) => parse(src, file),
        Err(err) => {
            let valid = std::str::from_utf8(&bytes[..err.valid_up_to()]).unwrap_or_default();
            let line = valid.matches('\n').count() as u32 + 1;
            let col = valid.rsplit('\n').next().map_or(0, |l| l.chars().count()) as u32 + 1;
            let text = String::from_utf8_lossy(bytes);
            let (ast, mut diags) = parse(&text, file);
            diags.push(Diagnostic::error(
                DiagnosticCode::InvalidUtf8,
                "source is not valid UTF-8",
                SourceSpan::new(Arc::from(file), Pos::new(line, col), Pos::new(line, col + 1)),
            ));
            diags.sort_by_key(|d| d.span.sort_key());
            (ast, diags)
        }
    }
}

/// True if any diagnostic has error severity.
pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn span(&self) -> SourceSpan {
        self.tokens[self.pos].span.clone()
    }

    fn prev_span(&self) -> SourceSpan {
        self.tokens[self.pos.saturating_sub(1)].span.clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s.eq_ignore_ascii_case(kw))
    }

    fn at_element_start(&self) -> bool {
        match self.peek() {
            Tok::Ident(s) => {
                ELEMENT_KEYWORDS.iter().any(|k| s.eq_ignore_ascii_case(k))
                    && !matches!(self.peek_at(1), Tok::Colon)
            }
            _ => false,
        }
    }

    fn at_attr_start(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_)) && matches!(self.peek_at(1), Tok::Colon)
    }

    fn error(&mut self, code: DiagnosticCode, message: impl Into<String>, span: SourceSpan) {
        self.diags.push(Diagnostic::error(code, message, span));
    }

    fn unexpected(&mut self, expected: &str) {
        let span = self.span();
        let found = self.peek().describe();
        self.error(
            DiagnosticCode::UnexpectedToken,
            format!("expected {expected}, found {found}"),
            span,
        );
    }

    fn expect(&mut self, tok: Tok, what: &str) -> bool {
        if *self.peek() == tok {
            self.bump();
            true
        } else {
            self.unexpected(what);
            false
        }
    }

    fn model(&mut self) -> Ast {
        let start = self.span();
        let mut ast = Ast::new("");
        let mut open = None;
        if self.at_keyword("model") {
            self.bump();
            match self.peek().clone() {
                Tok::Str(s) | Tok::Ident(s) => {
                    self.bump();
                    ast.name = s;
                }
                _ => self.unexpected("a model name"),
            }
            if *self.peek() == Tok::LBrace {
                open = Some(self.bump().span);
            } else {
                self.unexpected("`{`");
            }
        } else {
            self.unexpected("`model`");
        }

        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    if open.is_some() {
                        self.bump();
                        break;
                    }
                    self.unexpected("a declaration");
                    self.bump();
                }
                Tok::Eof => {
                    if let Some(open) = &open {
                        self.diags.push(
                            Diagnostic::error(
                                DiagnosticCode::UnterminatedBlock,
                                "model block is never closed",
                                open.clone(),
                            )
                            .with_hint("add a closing `}`"),
                        );
                    }
                    break;
                }
                Tok::Ident(word) => {
                    let kw = word.to_ascii_lowercase();
                    let element = match kw.as_str() {
                        "bo" => self.entity(DeclKind::Bo),
                        "mi" => self.entity(DeclKind::Mi),
                        "role" => self.entity(DeclKind::Role),
                        "driver" => self.entity(DeclKind::Driver),
                        "governance" => self.entity(DeclKind::Governance),
                        "usage" => self.usage(),
                        "responsible" => self.responsible(),
                        _ => {
                            let span = self.span();
                            let mut d = Diagnostic::error(
                                DiagnosticCode::UnknownKeyword,
                                format!("unknown declaration `{word}`"),
                                span,
                            );
                            d.hint = Some(match schema::nearest(&word, ELEMENT_KEYWORDS.iter().copied()) {
                                Some(k) => format!("did you mean `{k}`?"),
                                None => format!("expected one of {}", ELEMENT_KEYWORDS.join("|")),
                            });
                            self.diags.push(d);
                            self.recover_element();
                            None
                        }
                    };
                    ast.elements.extend(element);
                }
                _ => {
                    self.unexpected("a declaration");
                    self.recover_element();
                }
            }
        }

        if *self.peek() != Tok::Eof {
            self.unexpected("end of file after the model block");
        }
        ast.span = start.to(&self.prev_span());
        ast
    }

    /// Skips the rest of a malformed declaration, stopping at the next
    /// declaration keyword or at the `}` that closes the model.
    fn recover_element(&mut self) {
        let mut depth = 0usize;
        match self.peek() {
            Tok::Eof | Tok::RBrace => return,
            Tok::LBrace => depth = 1,
            _ => {}
        }
        self.bump();
        loop {
            match self.peek() {
                Tok::Eof => return,
                Tok::LBrace => depth += 1,
                Tok::RBrace => {
                    if depth == 0 {
                        return;
                    }
                    depth -= 1;
                    if depth == 0 {
                        self.bump();
                        return;
                    }
                }
                _ if depth == 0 && self.at_element_start() => return,
                _ => {}
            }
            self.bump();
        }
    }

    /// Skips to the next attribute inside a block.
    fn recover_attr(&mut self, force: bool) {
        if force && !matches!(self.peek(), Tok::Eof | Tok::RBrace) {
            let opens = *self.peek() == Tok::LBrace;
            self.bump();
            if opens {
                self.skip_balanced();
            }
        }
        loop {
            match self.peek() {
                Tok::Eof | Tok::RBrace => return,
                Tok::LBrace => {
                    self.bump();
                    self.skip_balanced();
                    continue;
                }
                _ if self.at_attr_start() || self.at_element_start() || self.at_keyword("governs") => {
                    return
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    /// Consumes tokens up to and including the `}` matching an already consumed `{`.
    fn skip_balanced(&mut self) {
        let mut depth = 1usize;
        loop {
            match self.peek() {
                Tok::Eof => return,
                Tok::LBrace => depth += 1,
                Tok::RBrace => {
                    depth -= 1;
                    if depth == 0 {
                        self.bump();
                        return;
                    }
                }
                _ => {}
            }
            self.bump();
        }
    }

    fn ident(&mut self, what: &str) -> Option<Ident> {
        match self.peek().clone() {
            Tok::Ident(name) => Some(Ident {
                name,
                span: self.bump().span,
            }),
            Tok::Str(name) if !name.is_empty() => Some(Ident {
                name,
                span: self.bump().span,
            }),
            Tok::Str(_) => {
                let span = self.bump().span;
                self.error(DiagnosticCode::UnexpectedToken, "identifier must not be empty", span);
                None
            }
            _ => {
                self.unexpected(what);
                None
            }
        }
    }

    fn entity(&mut self, kind: DeclKind) -> Option<Element> {
        let start = self.bump().span;
        let Some(id) = self.ident(&format!("an identifier after `{}`", kind.keyword())) else {
            self.recover_element();
            return None;
        };
        if *self.peek() != Tok::LBrace {
            self.unexpected("`{`");
            self.recover_element();
            return None;
        }
        let open = self.bump().span;
        let (attrs, governs) = self.block(BlockKind::Decl(kind), &open);
        Some(Element::Entity(EntityDecl {
            kind,
            id,
            attrs,
            governs,
            span: start.to(&self.prev_span()),
        }))
    }

    fn usage(&mut self) -> Option<Element> {
        let start = self.bump().span;
        let parsed = self.ident("a role or island").and_then(|user| {
            if !self.expect(Tok::Arrow, "`->`") {
                return None;
            }
            self.ident("a boundary object").map(|bo| (user, bo))
        });
        let Some((user, bo)) = parsed else {
            self.recover_element();
            return None;
        };
        let attrs = if *self.peek() == Tok::LBrace {
            let open = self.bump().span;
            self.block(BlockKind::Usage, &open).0
        } else {
            Vec::new()
        };
        Some(Element::Usage(UsageDecl {
            user,
            bo,
            attrs,
            span: start.to(&self.prev_span()),
        }))
    }

    fn responsible(&mut self) -> Option<Element> {
        let start = self.bump().span;
        let parsed = self.ident("a role").and_then(|role| {
            if !self.expect(Tok::Arrow, "`->`") {
                return None;
            }
            self.ident("a boundary object").map(|bo| (role, bo))
        });
        let Some((role, bo)) = parsed else {
            self.recover_element();
            return None;
        };
        Some(Element::Responsible(ResponsibleDecl {
            role,
            bo,
            span: start.to(&self.prev_span()),
        }))
    }

    fn governs(&mut self) -> Option<GovernsDecl> {
        let start = self.bump().span;
        let bo = self.ident("a boundary object after `governs`")?;
        let attrs = if *self.peek() == Tok::LBrace {
            let open = self.bump().span;
            self.block(BlockKind::Governs, &open).0
        } else {
            Vec::new()
        };
        Some(GovernsDecl {
            bo,
            attrs,
            span: start.to(&self.prev_span()),
        })
    }

    /// Parses attributes up to the closing `}` (consumed).
    fn block(&mut self, kind: BlockKind, open: &SourceSpan) -> (Vec<Attr>, Vec<GovernsDecl>) {
        let mut attrs: Vec<Attr> = Vec::new();
        let mut governs = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Eof => {
                    self.unterminated(open);
                    break;
                }
                Tok::Ident(word) => {
                    if kind == BlockKind::Decl(DeclKind::Governance)
                        && word.eq_ignore_ascii_case("governs")
                        && !matches!(self.peek_at(1), Tok::Colon)
                    {
                        match self.governs() {
                            Some(g) => governs.push(g),
                            None => self.recover_attr(false),
                        }
                        continue;
                    }
                    if self.at_element_start() {
                        // a sibling declaration starts before this block was closed
                        self.unterminated(open);
                        break;
                    }
                    let key_span = self.bump().span;
                    if !self.expect(Tok::Colon, "`:` after attribute key") {
                        self.recover_attr(false);
                        continue;
                    }
                    let Some((key, value_kind)) = schema::lookup(kind, &word) else {
                        self.unknown_key(kind, &word, key_span);
                        self.recover_attr(false);
                        continue;
                    };
                    let duplicate = attrs.iter().any(|a| a.key == key);
                    if duplicate {
                        self.error(
                            DiagnosticCode::DuplicateAttribute,
                            format!("attribute `{key}` is set more than once"),
                            key_span.clone(),
                        );
                    }
                    match self.value(key, value_kind) {
                        Some(value) if !duplicate => attrs.push(Attr {
                            key: key.to_owned(),
                            value,
                            span: key_span.to(&self.prev_span()),
                        }),
                        Some(_) => {}
                        None => self.recover_attr(false),
                    }
                }
                _ => {
                    self.unexpected("an attribute key or `}`");
                    self.recover_attr(true);
                }
            }
        }
        (attrs, governs)
    }

    fn unterminated(&mut self, open: &SourceSpan) {
        self.diags.push(
            Diagnostic::error(
                DiagnosticCode::UnterminatedBlock,
                "block is never closed",
                open.clone(),
            )
            .with_hint("add a closing `}`"),
        );
    }

    fn unknown_key(&mut self, kind: BlockKind, word: &str, span: SourceSpan) {
        let keys = schema::keys(kind).iter().map(|(k, _)| *k);
        let hint = match schema::nearest(word, keys.clone()) {
            Some(k) => format!("did you mean `{k}`?"),
            None => format!("valid keys: {}", keys.collect::<Vec<_>>().join(", ")),
        };
        self.diags.push(
            Diagnostic::error(
                DiagnosticCode::UnknownKeyword,
                format!("unknown attribute `{word}`"),
                span,
            )
            .with_hint(hint),
        );
    }

    fn invalid_enum(&mut self, key: &str, found: &str, span: SourceSpan, choices: String) {
        self.diags.push(
            Diagnostic::error(
                DiagnosticCode::InvalidEnumValue,
                format!("invalid value `{found}` for `{key}`"),
                span,
            )
            .with_hint(format!("expected one of {choices}")),
        );
    }

    /// Parses a bare enumeration value. `Ok(None)` means an invalid value
    /// was consumed and reported; `Err(())` means the token did not fit.
    fn keyword<K: Keyword>(&mut self, key: &str) -> Result<Option<K>, ()> {
        match self.peek().clone() {
            Tok::Ident(word) => {
                let span = self.bump().span;
                match K::from_keyword(&word) {
                    Some(v) => Ok(Some(v)),
                    None => {
                        self.invalid_enum(key, &word, span, K::choices());
                        Ok(None)
                    }
                }
            }
            _ => {
                self.unexpected(&format!("one of {}", K::choices()));
                Err(())
            }
        }
    }

    /// Returns `None` when the value was invalid. The caller resynchronises
    /// only if nothing sensible was consumed.
    fn value(&mut self, key: &str, kind: ValueKind) -> Option<AttrValue> {
        match kind {
            ValueKind::Qual => {
                let level = self.keyword::<QualLevel>(key);
                let mut note = None;
                if *self.peek() == Tok::LParen {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Str(s) => {
                            self.bump();
                            note = Some(s);
                        }
                        _ => {
                            self.unexpected("a note string");
                            return None;
                        }
                    }
                    if !self.expect(Tok::RParen, "`)`") {
                        return None;
                    }
                }
                match level {
                    Ok(Some(level)) => Some(AttrValue::Qual(QualAttr { level, note })),
                    _ => None,
                }
            }
            ValueKind::Level => self.keyword::<QualLevel>(key).ok().flatten().map(AttrValue::Level),
            ValueKind::Lifecycle => self
                .keyword::<LifecycleStage>(key)
                .ok()
                .flatten()
                .map(AttrValue::Lifecycle),
            ValueKind::DriverType => self
                .keyword::<DriverType>(key)
                .ok()
                .flatten()
                .map(AttrValue::DriverType),
            ValueKind::DistanceType => self
                .keyword::<DistanceType>(key)
                .ok()
                .flatten()
                .map(AttrValue::DistanceType),
            ValueKind::Text => match self.peek().clone() {
                Tok::Str(s) => {
                    self.bump();
                    Some(AttrValue::Text(s))
                }
                _ => {
                    self.unexpected("a quoted string");
                    None
                }
            },
            ValueKind::Bool => match self.peek().clone() {
                Tok::Ident(word) => {
                    let span = self.bump().span;
                    if word.eq_ignore_ascii_case("true") {
                        Some(AttrValue::Bool(true))
                    } else if word.eq_ignore_ascii_case("false") {
                        Some(AttrValue::Bool(false))
                    } else {
                        self.invalid_enum(key, &word, span, "true|false".into());
                        None
                    }
                }
                _ => {
                    self.unexpected("true|false");
                    None
                }
            },
            ValueKind::SuperType => match self.peek().clone() {
                Tok::Str(label) => {
                    self.bump();
                    Some(AttrValue::SuperType(SuperType::Other(label)))
                }
                Tok::Ident(word) => {
                    let span = self.bump().span;
                    match KnownSuperType::from_keyword(&word) {
                        Some(k) => Some(AttrValue::SuperType(SuperType::Known(k))),
                        None => {
                            self.invalid_enum(
                                key,
                                &word,
                                span,
                                format!("{} or a quoted label", KnownSuperType::choices()),
                            );
                            None
                        }
                    }
                }
                _ => {
                    self.unexpected("a super type");
                    None
                }
            },
            ValueKind::Ref => self.ident("an identifier").map(AttrValue::Ref),
            ValueKind::Refs => {
                let items = self.list(|p| p.ident("an identifier").map(Some))?;
                let mut seen = std::collections::HashSet::new();
                let mut refs = Vec::new();
                for item in items {
                    if seen.insert(item.name.clone()) {
                        refs.push(item);
                    } else {
                        self.diags.push(Diagnostic::warning(
                            DiagnosticCode::DuplicateValue,
                            format!("`{}` is listed more than once", item.name),
                            item.span,
                        ));
                    }
                }
                Some(AttrValue::Refs(refs))
            }
            ValueKind::IslandTypes => {
                let key = key.to_owned();
                let items = self.list(|p| match p.keyword::<IslandType>(&key) {
                    Ok(Some(t)) => Some(Some((t, p.prev_span()))),
                    Ok(None) => Some(None),
                    Err(()) => None,
                })?;
                let mut types = Vec::new();
                for (t, span) in items {
                    if types.contains(&t) {
                        self.diags.push(Diagnostic::warning(
                            DiagnosticCode::DuplicateValue,
                            format!("island type `{t}` is listed more than once"),
                            span,
                        ));
                    } else {
                        types.push(t);
                    }
                }
                types.sort();
                Some(AttrValue::IslandTypes(types))
            }
            ValueKind::Crud => {
                let items = self.list(|p| match p.peek().clone() {
                    Tok::Ident(word) => {
                        let span = p.bump().span;
                        if let Some(right) = Crud::from_keyword(&word) {
                            return Some(Some(vec![(right, span)]));
                        }
                        let letters: Option<Vec<Crud>> = word.chars().map(Crud::from_letter).collect();
                        match letters {
                            Some(rights) => Some(Some(rights.into_iter().map(|r| (r, span.clone())).collect())),
                            None => {
                                p.invalid_enum("crud", &word, span, "letters C, R, U, D or Create|Read|Update|Delete".into());
                                Some(None)
                            }
                        }
                    }
                    _ => {
                        p.unexpected("CRUD letters");
                        None
                    }
                })?;
                let mut rights = Vec::new();
                for (right, span) in items.into_iter().flatten() {
                    if rights.contains(&right) {
                        self.diags.push(Diagnostic::warning(
                            DiagnosticCode::DuplicateValue,
                            format!("right `{}` is listed more than once", right.letter()),
                            span,
                        ));
                    } else {
                        rights.push(right);
                    }
                }
                rights.sort();
                Some(AttrValue::Crud(rights))
            }
        }
    }

    /// `[ item (,)? item ... ]`. The item parser returns `None` on a
    /// structural error (aborting the list) and `Some(None)` for an invalid
    /// but consumed item.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Option<Option<T>>) -> Option<Vec<T>> {
        if !self.expect(Tok::LBracket, "`[`") {
            return None;
        }
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Tok::RBracket => {
                    self.bump();
                    return Some(out);
                }
                Tok::Comma => {
                    self.bump();
                }
                Tok::Eof | Tok::RBrace => {
                    self.unexpected("`]`");
                    return None;
                }
                _ if self.at_attr_start() => {
                    self.unexpected("`]`");
                    return None;
                }
                _ => out.extend(item(self)?),
            }
        }
    }
}
