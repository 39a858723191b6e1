use std::sync::Arc;

use crate::diagnostic::{Diagnostic, DiagnosticCode};
use crate::span::{Pos, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Str(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Colon,
    Comma,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Eof => "end of file".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        Some(c)
    }
}

pub fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

pub fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits `src` into tokens. Always ends with a single `Eof` token; lexical
/// problems are reported in `diags` and lexing continues.
pub fn lex(src: &str, file: &Arc<str>, diags: &mut Vec<Diagnostic>) -> Vec<Token> {
    let mut cur = Cursor {
        chars: src.chars().peekable(),
        pos: Pos::new(1, 1),
    };
    let mut tokens = Vec::new();
    let span = |start: Pos, end: Pos| SourceSpan::new(file.clone(), start, end);

    loop {
        let start = cur.pos;
        let Some(c) = cur.bump() else {
            tokens.push(Token {
                tok: Tok::Eof,
                span: span(start, start),
            });
            return tokens;
        };
        let tok = match c {
            c if c.is_whitespace() => continue,
            '/' if cur.peek() == Some('/') => {
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
                continue;
            }
            '/' if cur.peek() == Some('*') => {
                cur.bump();
                let mut closed = false;
                while let Some(c) = cur.bump() {
                    if c == '*' && cur.peek() == Some('/') {
                        cur.bump();
                        closed = true;
                        break;
                    }
                }
                if !closed {
                    diags.push(Diagnostic::error(
                        DiagnosticCode::UnterminatedComment,
                        "unterminated block comment",
                        span(start, Pos::new(start.line, start.col + 2)),
                    ));
                }
                continue;
            }
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            '-' if cur.peek() == Some('>') => {
                cur.bump();
                Tok::Arrow
            }
            '"' => {
                let mut text = String::new();
                let mut closed = false;
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                    match c {
                        '"' => {
                            closed = true;
                            break;
                        }
                        '\\' => match cur.peek() {
                            Some('"') => {
                                cur.bump();
                                text.push('"');
                            }
                            Some('\\') => {
                                cur.bump();
                                text.push('\\');
                            }
                            Some('n') => {
                                cur.bump();
                                text.push('\n');
                            }
                            Some('t') => {
                                cur.bump();
                                text.push('\t');
                            }
                            _ => text.push('\\'),
                        },
                        c => text.push(c),
                    }
                }
                if !closed {
                    diags.push(Diagnostic::error(
                        DiagnosticCode::UnterminatedString,
                        "unterminated string literal",
                        span(start, cur.pos),
                    ).with_hint("strings must be closed with `\"` on the same line"));
                }
                Tok::Str(text)
            }
            c if is_ident_start(c) => {
                let mut text = String::from(c);
                while let Some(c) = cur.peek() {
                    if !is_ident_continue(c) {
                        break;
                    }
                    text.push(c);
                    cur.bump();
                }
                Tok::Ident(text)
            }
            other => {
                diags.push(Diagnostic::error(
                    DiagnosticCode::UnexpectedCharacter,
                    format!("unexpected character {other:?}"),
                    span(start, cur.pos),
                ));
                continue;
            }
        };
        tokens.push(Token {
            tok,
            span: span(start, cur.pos),
        });
    }
}
