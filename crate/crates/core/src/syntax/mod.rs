//! The `.bomi` textual syntax: lexer, parser, raw syntax tree and printer.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod schema;

pub use ast::{Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, GovernsDecl, Ident, ResponsibleDecl, UsageDecl};
pub use parser::{has_errors, parse, parse_bytes};
pub use printer::print;
