//! Raw syntax tree: declarations as written, with unresolved names.

use crate::model::types::{
    Crud, DistanceType, DriverType, IslandType, LifecycleStage, QualAttr, QualLevel, SuperType,
};
use crate::span::SourceSpan;

#[derive(Debug, Clone, PartialEq)]
pub struct Ident {
    pub name: String,
    pub span: SourceSpan,
}

impl Ident {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            span: SourceSpan::synthetic(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AttrValue {
    Qual(QualAttr),
    Level(QualLevel),
    Text(String),
    Bool(bool),
    SuperType(SuperType),
    Lifecycle(LifecycleStage),
    DriverType(DriverType),
    DistanceType(DistanceType),
    IslandTypes(Vec<IslandType>),
    Crud(Vec<Crud>),
    Ref(Ident),
    Refs(Vec<Ident>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Attr {
    /// Canonical lower-case key.
    pub key: String,
    pub value: AttrValue,
    pub span: SourceSpan,
}

impl Attr {
    pub fn new(key: &str, value: AttrValue) -> Self {
        Self {
            key: key.to_owned(),
            value,
            span: SourceSpan::synthetic(),
        }
    }
}

/// Declarations that introduce a named element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeclKind {
    Bo,
    Mi,
    Role,
    Driver,
    Governance,
}

impl DeclKind {
    pub const ALL: [DeclKind; 5] = [
        DeclKind::Bo,
        DeclKind::Mi,
        DeclKind::Role,
        DeclKind::Driver,
        DeclKind::Governance,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            DeclKind::Bo => "bo",
            DeclKind::Mi => "mi",
            DeclKind::Role => "role",
            DeclKind::Driver => "driver",
            DeclKind::Governance => "governance",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntityDecl {
    pub kind: DeclKind,
    pub id: Ident,
    pub attrs: Vec<Attr>,
    /// Only populated for `governance` blocks.
    pub governs: Vec<GovernsDecl>,
    pub span: SourceSpan,
}

impl EntityDecl {
    pub fn new(kind: DeclKind, id: &str) -> Self {
        Self {
            kind,
            id: Ident::new(id),
            attrs: Vec::new(),
            governs: Vec::new(),
            span: SourceSpan::synthetic(),
        }
    }

    pub fn attr(&self, key: &str) -> Option<&Attr> {
        self.attrs.iter().find(|a| a.key == key)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GovernsDecl {
    pub bo: Ident,
    pub attrs: Vec<Attr>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageDecl {
    pub user: Ident,
    pub bo: Ident,
    pub attrs: Vec<Attr>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResponsibleDecl {
    pub role: Ident,
    pub bo: Ident,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Entity(EntityDecl),
    Usage(UsageDecl),
    Responsible(ResponsibleDecl),
}

impl Element {
    pub fn span(&self) -> &SourceSpan {
        match self {
            Element::Entity(e) => &e.span,
            Element::Usage(u) => &u.span,
            Element::Responsible(r) => &r.span,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ast {
    pub name: String,
    pub elements: Vec<Element>,
    pub span: SourceSpan,
}

impl Ast {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            elements: Vec::new(),
            span: SourceSpan::synthetic(),
        }
    }

    /// Copy of the tree with every span replaced by the synthetic span, for
    /// structural comparisons.
    pub fn without_spans(&self) -> Ast {
        fn ident(i: &Ident) -> Ident {
            Ident::new(i.name.clone())
        }
        fn attrs(list: &[Attr]) -> Vec<Attr> {
            list.iter()
                .map(|a| {
                    let value = match &a.value {
                        AttrValue::Ref(i) => AttrValue::Ref(ident(i)),
                        AttrValue::Refs(v) => AttrValue::Refs(v.iter().map(ident).collect()),
                        other => other.clone(),
                    };
                    Attr::new(&a.key, value)
                })
                .collect()
        }
        let elements = self
            .elements
            .iter()
            .map(|el| match el {
                Element::Entity(e) => Element::Entity(EntityDecl {
                    kind: e.kind,
                    id: ident(&e.id),
                    attrs: attrs(&e.attrs),
                    governs: e
                        .governs
                        .iter()
                        .map(|g| GovernsDecl {
                            bo: ident(&g.bo),
                            attrs: attrs(&g.attrs),
                            span: SourceSpan::synthetic(),
                        })
                        .collect(),
                    span: SourceSpan::synthetic(),
                }),
                Element::Usage(u) => Element::Usage(UsageDecl {
                    user: ident(&u.user),
                    bo: ident(&u.bo),
                    attrs: attrs(&u.attrs),
                    span: SourceSpan::synthetic(),
                }),
                Element::Responsible(r) => Element::Responsible(ResponsibleDecl {
                    role: ident(&r.role),
                    bo: ident(&r.bo),
                    span: SourceSpan::synthetic(),
                }),
            })
            .collect();
        Ast {
            name: self.name.clone(),
            elements,
            span: SourceSpan::synthetic(),
        }
    }
}
