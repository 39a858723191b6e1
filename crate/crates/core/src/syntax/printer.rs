//! Pretty-printer producing canonical `.bomi` text from an [`Ast`].

use std::fmt::Write;

use crate::model::types::{Keyword, SuperType};
use crate::syntax::ast::{Ast, Attr, AttrValue, Element, Ident};
use crate::syntax::lexer::{is_ident_continue, is_ident_start};

pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Bare when the name lexes as a single identifier, quoted otherwise.
pub fn ident_text(name: &str) -> String {
    let mut chars = name.chars();
    let bare = chars.next().is_some_and(is_ident_start) && chars.all(is_ident_continue);
    if bare {
        name.to_owned()
    } else {
        quote(name)
    }
}

fn refs(list: &[Ident]) -> String {
    list.iter()
        .map(|i| ident_text(&i.name))
        .collect::<Vec<_>>()
        .join(", ")
}

fn value_text(value: &AttrValue) -> String {
    match value {
        AttrValue::Qual(q) => match &q.note {
            Some(note) => format!("{} ({})", q.level.name().to_ascii_lowercase(), quote(note)),
            None => q.level.name().to_ascii_lowercase(),
        },
        AttrValue::Level(l) => l.name().to_ascii_lowercase(),
        AttrValue::Text(s) => quote(s),
        AttrValue::Bool(b) => b.to_string(),
        AttrValue::SuperType(SuperType::Known(k)) => k.name().to_owned(),
        AttrValue::SuperType(SuperType::Other(label)) => quote(label),
        AttrValue::Lifecycle(l) => l.name().to_owned(),
        AttrValue::DriverType(t) => t.name().to_owned(),
        AttrValue::DistanceType(t) => t.name().to_owned(),
        AttrValue::IslandTypes(types) => format!(
            "[{}]",
            types.iter().map(|t| t.name()).collect::<Vec<_>>().join(", ")
        ),
        AttrValue::Crud(rights) => {
            let letters: String = rights.iter().map(|r| r.letter()).collect();
            format!("[{letters}]")
        }
        AttrValue::Ref(i) => ident_text(&i.name),
        AttrValue::Refs(list) => format!("[{}]", refs(list)),
    }
}

fn attrs(out: &mut String, list: &[Attr], indent: &str) {
    for a in list {
        let _ = writeln!(out, "{indent}{}: {}", a.key, value_text(&a.value));
    }
}

pub fn print(ast: &Ast) -> String {
    let mut out = String::new();
    let _ = write!(out, "model {} {{", quote(&ast.name));
    if ast.elements.is_empty() {
        out.push_str(" }\n");
        return out;
    }
    out.push('\n');
    for (i, el) in ast.elements.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match el {
            Element::Entity(e) => {
                let _ = write!(out, "  {} {} {{", e.kind.keyword(), ident_text(&e.id.name));
                if e.attrs.is_empty() && e.governs.is_empty() {
                    out.push_str(" }\n");
                    continue;
                }
                out.push('\n');
                attrs(&mut out, &e.attrs, "    ");
                for g in &e.governs {
                    let _ = write!(out, "    governs {}", ident_text(&g.bo.name));
                    if g.attrs.is_empty() {
                        out.push('\n');
                    } else {
                        out.push_str(" {\n");
                        attrs(&mut out, &g.attrs, "      ");
                        out.push_str("    }\n");
                    }
                }
                out.push_str("  }\n");
            }
            Element::Usage(u) => {
                let _ = write!(
                    out,
                    "  usage {} -> {}",
                    ident_text(&u.user.name),
                    ident_text(&u.bo.name)
                );
                if u.attrs.is_empty() {
                    out.push('\n');
                } else {
                    out.push_str(" {\n");
                    attrs(&mut out, &u.attrs, "    ");
                    out.push_str("  }\n");
                }
            }
            Element::Responsible(r) => {
                let _ = writeln!(
                    out,
                    "  responsible {} -> {}",
                    ident_text(&r.role.name),
                    ident_text(&r.bo.name)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parser::parse;

    #[test]
    fn identifiers_quoted_only_when_needed() {
        assert_eq!(ident_text("UserStory"), "UserStory");
        assert_eq!(ident_text("User Story"), "\"User Story\"");
        assert_eq!(ident_text("9lives"), "\"9lives\"");
        assert_eq!(ident_text("a\"b"), "\"a\\\"b\"");
    }

    #[test]
    fn print_then_parse_is_structurally_identical() {
        let src = r#"model "Company A" {
            bo "User Story" { supertype: Planning purpose: "plan \"work\"" modularity: low ("big") prescriptive: true }
            mi Dev { types: [Team, Silo] }
            role R { part_of: Dev }
            usage R -> "User Story" { crud: [RU] stability: unknown ("tbd") }
            responsible R -> "User Story"
            driver D { drives: [Dev] distance_size: medium type: Technology }
            governance G { members: [R] governs "User Story" governs X { coordination_mechanism: "meetings" } }
        }"#;
        let (ast, diags) = parse(src, "t");
        assert!(diags.is_empty(), "{diags:?}");
        let printed = print(&ast);
        let (again, diags) = parse(&printed, "t");
        assert!(diags.is_empty(), "{diags:?}\n{printed}");
        assert_eq!(again.without_spans(), ast.without_spans());
        assert_eq!(print(&again), printed);
    }

    #[test]
    fn empty_model_prints_on_one_line() {
        assert_eq!(print(&Ast::new("empty")), "model \"empty\" { }\n");
    }
}
