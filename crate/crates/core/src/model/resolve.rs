//! Turns a raw syntax tree into a [`BomiModel`] with checked references.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagnostic::{Diagnostic, DiagnosticCode};
use crate::model::types::*;
use crate::model::BomiModel;
use crate::span::SourceSpan;
use crate::syntax::ast::{Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, Ident};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("`{id}` is declared more than once")]
    DuplicateId {
        id: String,
        span: SourceSpan,
        first: SourceSpan,
    },
    #[error("`{name}` is not declared (expected a {expected})")]
    UnresolvedReference {
        name: String,
        expected: &'static str,
        span: SourceSpan,
        /// Closest declared id of an acceptable kind.
        suggestion: Option<String>,
    },
    #[error("`{name}` is a {found}, expected a {expected}")]
    TypeMismatch {
        name: String,
        expected: &'static str,
        found: ElementKind,
        span: SourceSpan,
    },
    #[error("{what} is declared more than once")]
    DuplicateRelation {
        what: String,
        span: SourceSpan,
        first: SourceSpan,
    },
}

impl ResolutionError {
    pub fn span(&self) -> &SourceSpan {
        match self {
            ResolutionError::DuplicateId { span, .. }
            | ResolutionError::UnresolvedReference { span, .. }
            | ResolutionError::TypeMismatch { span, .. }
            | ResolutionError::DuplicateRelation { span, .. } => span,
        }
    }

    pub fn code(&self) -> DiagnosticCode {
        match self {
            ResolutionError::DuplicateId { .. } => DiagnosticCode::DuplicateId,
            ResolutionError::UnresolvedReference { .. } => DiagnosticCode::UnresolvedReference,
            ResolutionError::TypeMismatch { .. } => DiagnosticCode::TypeMismatch,
            ResolutionError::DuplicateRelation { .. } => DiagnosticCode::DuplicateRelation,
        }
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        let d = Diagnostic::error(self.code(), self.to_string(), self.span().clone());
        match self {
            ResolutionError::DuplicateId { first, .. }
            | ResolutionError::DuplicateRelation { first, .. } => {
                d.with_hint(format!("first declared at {first}"))
            }
            ResolutionError::UnresolvedReference {
                suggestion: Some(s), ..
            } => d.with_hint(format!("did you mean `{s}`?")),
            _ => d,
        }
    }
}

fn decl_element_kind(kind: DeclKind) -> ElementKind {
    match kind {
        DeclKind::Bo => ElementKind::BoundaryObject,
        DeclKind::Mi => ElementKind::Island,
        DeclKind::Role => ElementKind::Role,
        DeclKind::Driver => ElementKind::Driver,
        DeclKind::Governance => ElementKind::GovernanceTeam,
    }
}

struct Resolver {
    index: HashMap<String, (ElementKind, usize)>,
    errors: Vec<ResolutionError>,
}

impl Resolver {
    fn lookup(&mut self, ident: &Ident, expected: &[ElementKind], what: &'static str) -> Option<(ElementKind, usize)> {
        match self.index.get(&ident.name) {
            Some(&(kind, i)) if expected.contains(&kind) => Some((kind, i)),
            Some(&(found, _)) => {
                self.errors.push(ResolutionError::TypeMismatch {
                    name: ident.name.clone(),
                    expected: what,
                    found,
                    span: ident.span.clone(),
                });
                None
            }
            None => {
                let limit = (ident.name.chars().count() / 3).max(2);
                let suggestion = self
                    .index
                    .iter()
                    .filter(|(_, (kind, _))| expected.contains(kind))
                    .map(|(id, _)| (strsim::levenshtein(id, &ident.name), id))
                    .filter(|(d, _)| *d <= limit)
                    .min()
                    .map(|(_, id)| id.clone());
                self.errors.push(ResolutionError::UnresolvedReference {
                    name: ident.name.clone(),
                    expected: what,
                    span: ident.span.clone(),
                    suggestion,
                });
                None
            }
        }
    }

    fn bo(&mut self, ident: &Ident) -> Option<BoRef> {
        self.lookup(ident, &[ElementKind::BoundaryObject], "boundary object")
            .map(|(_, i)| BoRef(i))
    }

    fn island(&mut self, ident: &Ident) -> Option<IslandRef> {
        self.lookup(ident, &[ElementKind::Island], "methodological island")
            .map(|(_, i)| IslandRef(i))
    }

    fn role(&mut self, ident: &Ident) -> Option<RoleRef> {
        self.lookup(ident, &[ElementKind::Role], "role").map(|(_, i)| RoleRef(i))
    }

    fn user(&mut self, ident: &Ident) -> Option<UsageUser> {
        match self.lookup(
            ident,
            &[ElementKind::Role, ElementKind::Island],
            "role or methodological island",
        )? {
            (ElementKind::Role, i) => Some(UsageUser::Role(RoleRef(i))),
            (_, i) => Some(UsageUser::Island(IslandRef(i))),
        }
    }

    fn pair_unique<K: std::hash::Hash + Eq>(
        &mut self,
        seen: &mut HashMap<K, SourceSpan>,
        key: K,
        what: impl FnOnce() -> String,
        span: &SourceSpan,
    ) -> bool {
        if let Some(first) = seen.get(&key) {
            self.errors.push(ResolutionError::DuplicateRelation {
                what: what(),
                span: span.clone(),
                first: first.clone(),
            });
            false
        } else {
            seen.insert(key, span.clone());
            true
        }
    }
}

fn qual(attrs: &[Attr], key: &str) -> QualAttr {
    match attrs.iter().find(|a| a.key == key).map(|a| &a.value) {
        Some(AttrValue::Qual(q)) => q.clone(),
        Some(AttrValue::Level(l)) => QualAttr::new(*l),
        _ => QualAttr::default(),
    }
}

fn level(attrs: &[Attr], key: &str) -> QualLevel {
    qual(attrs, key).level
}

fn text(attrs: &[Attr], key: &str) -> Option<String> {
    match attrs.iter().find(|a| a.key == key).map(|a| &a.value) {
        Some(AttrValue::Text(s)) => Some(s.clone()),
        _ => None,
    }
}

fn value<'a>(attrs: &'a [Attr], key: &str) -> Option<&'a AttrValue> {
    attrs.iter().find(|a| a.key == key).map(|a| &a.value)
}

fn refs<'a>(attrs: &'a [Attr], key: &str) -> &'a [Ident] {
    match value(attrs, key) {
        Some(AttrValue::Refs(list)) => list,
        _ => &[],
    }
}

fn build_bo(e: &EntityDecl) -> BoundaryObject {
    let a = &e.attrs;
    BoundaryObject {
        id: e.id.name.clone(),
        super_type: match value(a, "supertype") {
            Some(AttrValue::SuperType(s)) => Some(s.clone()),
            _ => None,
        },
        sub_type: text(a, "subtype"),
        purpose: text(a, "purpose"),
        level_of_detail: qual(a, "level_of_detail"),
        frequency_of_change: qual(a, "frequency_of_change"),
        modularity: qual(a, "modularity"),
        maintenance_burden: qual(a, "maintainability"),
        prescriptive: match value(a, "prescriptive") {
            Some(AttrValue::Bool(b)) => Some(*b),
            _ => None,
        },
        lifecycle: match value(a, "lifecycle") {
            Some(AttrValue::Lifecycle(l)) => *l,
            _ => LifecycleStage::Unknown,
        },
        representation_format: text(a, "representation_format"),
        internal_consistency: qual(a, "internal_consistency"),
        external_consistency: qual(a, "external_consistency"),
        versioning: text(a, "versioning"),
        connectedness: qual(a, "connectedness"),
        up_to_date: qual(a, "up_to_date"),
        span: e.span.clone(),
    }
}

/// Resolves every symbolic reference in `ast`.
///
/// Returns the model, or all resolution errors sorted by source position.
/// Never returns a partially resolved model.
pub fn resolve(ast: &Ast) -> Result<BomiModel, Vec<ResolutionError>> {
    let mut r = Resolver {
        index: HashMap::new(),
        errors: Vec::new(),
    };

    // Pass 1: declare ids. Duplicates keep the first declaration.
    let mut first_spans: HashMap<&str, &SourceSpan> = HashMap::new();
    let mut counts: HashMap<ElementKind, usize> = HashMap::new();
    let mut entities: Vec<&EntityDecl> = Vec::new();
    for el in &ast.elements {
        let Element::Entity(e) = el else { continue };
        if let Some(first) = first_spans.get(e.id.name.as_str()) {
            r.errors.push(ResolutionError::DuplicateId {
                id: e.id.name.clone(),
                span: e.id.span.clone(),
                first: (*first).clone(),
            });
            continue;
        }
        first_spans.insert(&e.id.name, &e.id.span);
        let kind = decl_element_kind(e.kind);
        let n = counts.entry(kind).or_default();
        r.index.insert(e.id.name.clone(), (kind, *n));
        *n += 1;
        entities.push(e);
    }

    let mut model = BomiModel {
        name: ast.name.clone(),
        span: ast.span.clone(),
        boundary_objects: Vec::new(),
        islands: Vec::new(),
        roles: Vec::new(),
        usages: Vec::new(),
        responsibilities: Vec::new(),
        drivers: Vec::new(),
        governance_teams: Vec::new(),
        governs_links: Vec::new(),
        index: HashMap::new(),
    };

    // Pass 2: build elements in declaration order.
    for e in &entities {
        let a = &e.attrs;
        match e.kind {
            DeclKind::Bo => model.boundary_objects.push(build_bo(e)),
            DeclKind::Mi => model.islands.push(MethodologicalIsland {
                id: e.id.name.clone(),
                types: match value(a, "types") {
                    Some(AttrValue::IslandTypes(t)) => {
                        let mut t = t.clone();
                        t.sort();
                        t.dedup();
                        t
                    }
                    _ => Vec::new(),
                },
                description: text(a, "description"),
                span: e.span.clone(),
            }),
            DeclKind::Role => {
                let part_of = match value(a, "part_of") {
                    Some(AttrValue::Ref(i)) => r.island(i),
                    _ => None,
                };
                model.roles.push(Role {
                    id: e.id.name.clone(),
                    name: text(a, "name"),
                    part_of,
                    member_of: Vec::new(),
                    span: e.span.clone(),
                });
            }
            DeclKind::Driver => {
                let mut drives = Vec::new();
                for ident in refs(a, "drives") {
                    if let Some(i) = r.island(ident) {
                        if !drives.contains(&i) {
                            drives.push(i);
                        }
                    }
                }
                model.drivers.push(Driver {
                    id: e.id.name.clone(),
                    driver_type: match value(a, "type") {
                        Some(AttrValue::DriverType(t)) => Some(*t),
                        _ => None,
                    },
                    sub_type: text(a, "subtype"),
                    distance_type: match value(a, "distance_type") {
                        Some(AttrValue::DistanceType(t)) => Some(*t),
                        _ => None,
                    },
                    distance_size: level(a, "distance_size"),
                    drives,
                    span: e.span.clone(),
                });
            }
            DeclKind::Governance => {
                let mut members = Vec::new();
                for ident in refs(a, "members") {
                    if let Some(role) = r.role(ident) {
                        if !members.contains(&role) {
                            members.push(role);
                        }
                    }
                }
                model.governance_teams.push(GovernanceTeam {
                    id: e.id.name.clone(),
                    name: text(a, "name"),
                    members,
                    span: e.span.clone(),
                });
            }
        }
    }

    // Pass 3: relations, in source order.
    let mut usage_pairs = HashMap::new();
    let mut resp_pairs = HashMap::new();
    let mut governs_pairs = HashMap::new();
    for el in &ast.elements {
        match el {
            Element::Usage(u) => {
                let user = r.user(&u.user);
                let bo = r.bo(&u.bo);
                let (Some(user), Some(bo)) = (user, bo) else { continue };
                let what = || format!("usage `{}` -> `{}`", u.user.name, u.bo.name);
                if !r.pair_unique(&mut usage_pairs, (user, bo), what, &u.span) {
                    continue;
                }
                model.usages.push(UsageLink {
                    user,
                    bo,
                    accessibility: qual(&u.attrs, "accessibility"),
                    stability: qual(&u.attrs, "stability"),
                    criticality: qual(&u.attrs, "criticality"),
                    fit_for_purpose: qual(&u.attrs, "fit_for_purpose"),
                    crud: match value(&u.attrs, "crud") {
                        Some(AttrValue::Crud(c)) => {
                            let mut c = c.clone();
                            c.sort();
                            c.dedup();
                            c
                        }
                        _ => Vec::new(),
                    },
                    span: u.span.clone(),
                });
            }
            Element::Responsible(resp) => {
                let role = r.role(&resp.role);
                let bo = r.bo(&resp.bo);
                let (Some(role), Some(bo)) = (role, bo) else { continue };
                let what = || format!("responsibility `{}` -> `{}`", resp.role.name, resp.bo.name);
                if !r.pair_unique(&mut resp_pairs, (role, bo), what, &resp.span) {
                    continue;
                }
                model.responsibilities.push(Responsibility {
                    role,
                    bo,
                    span: resp.span.clone(),
                });
            }
            Element::Entity(e) if e.kind == DeclKind::Governance => {
                // duplicate declarations were never indexed
                if !entities.iter().any(|d| std::ptr::eq(*d, e)) {
                    continue;
                }
                let team = TeamRef(r.index[&e.id.name].1);
                for g in &e.governs {
                    let Some(bo) = r.bo(&g.bo) else { continue };
                    let what = || format!("governs `{}` -> `{}`", e.id.name, g.bo.name);
                    if !r.pair_unique(&mut governs_pairs, (team, bo), what, &g.span) {
                        continue;
                    }
                    model.governs_links.push(GovernsLink {
                        team,
                        bo,
                        coordination_mechanism: text(&g.attrs, "coordination_mechanism"),
                        frequency_of_coordination: qual(&g.attrs, "frequency_of_coordination"),
                        span: g.span.clone(),
                    });
                }
            }
            Element::Entity(_) => {}
        }
    }

    if !r.errors.is_empty() {
        let mut errors = r.errors;
        errors.sort_by_key(|e| e.span().sort_key());
        return Err(errors);
    }

    for (t, team) in model.governance_teams.iter().enumerate() {
        for m in &team.members {
            model.roles[m.0].member_of.push(TeamRef(t));
        }
    }
    model.index = r.index;
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn resolve_src(src: &str) -> Result<BomiModel, Vec<ResolutionError>> {
        let (ast, diags) = parse(src, "t.bomi");
        assert!(diags.is_empty(), "{diags:?}");
        resolve(&ast)
    }

    #[test]
    fn empty_model_resolves() {
        let m = resolve_src(r#"model "empty" { }"#).unwrap();
        assert_eq!(m.census().total(), 0);
        assert_eq!(m.name(), "empty");
    }

    #[test]
    fn undeclared_role_is_reported_with_span() {
        let errs = resolve_src("model \"m\" {\n  bo US { }\n  usage Dev2 -> US\n}").unwrap_err();
        assert_eq!(errs.len(), 1);
        match &errs[0] {
            ResolutionError::UnresolvedReference { name, span, .. } => {
                assert_eq!(name, "Dev2");
                assert_eq!((span.start.line, span.start.col), (3, 9));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_ids_across_kinds() {
        let errs = resolve_src(r#"model "m" { bo A { } role A { } }"#).unwrap_err();
        assert!(matches!(&errs[0], ResolutionError::DuplicateId { id, first, span } if id == "A" && first.start < span.start));
    }

    #[test]
    fn usage_by_driver_is_type_mismatch() {
        let errs = resolve_src(r#"model "m" { bo B { } mi I { types: [Team] } driver D { drives: [I] } usage D -> B }"#)
            .unwrap_err();
        assert!(matches!(&errs[0], ResolutionError::TypeMismatch { found: ElementKind::Driver, .. }));
    }

    #[test]
    fn duplicate_usage_pair() {
        let errs = resolve_src(r#"model "m" { bo B { } role R { } usage R -> B usage R -> B }"#).unwrap_err();
        assert!(matches!(&errs[0], ResolutionError::DuplicateRelation { .. }));
    }

    #[test]
    fn duplicate_governance_team_does_not_add_links() {
        let errs = resolve_src(
            r#"model "m" { bo B { } governance G { governs B } governance G { governs B } }"#,
        )
        .unwrap_err();
        assert_eq!(errs.len(), 1);
        assert!(matches!(&errs[0], ResolutionError::DuplicateId { .. }));
    }

    #[test]
    fn errors_sorted_by_position() {
        let errs = resolve_src("model \"m\" {\n usage X -> Y\n responsible Z -> W\n}").unwrap_err();
        let keys: Vec<_> = errs.iter().map(|e| e.span().sort_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(errs.len(), 4);
    }

    #[test]
    fn membership_is_derived() {
        let m = resolve_src(
            r#"model "m" { mi I { types: [Team] } role R { part_of: I } governance G { members: [R] } }"#,
        )
        .unwrap();
        assert_eq!(m.roles()[0].member_of, vec![TeamRef(0)]);
        assert_eq!(m.roles()[0].part_of, Some(IslandRef(0)));
    }

    #[test]
    fn island_usage_is_allowed() {
        let m = resolve_src(r#"model "m" { bo B { } mi I { types: [Silo] } usage I -> B { crud: [R] } }"#).unwrap();
        assert_eq!(m.usages()[0].user, UsageUser::Island(IslandRef(0)));
        assert_eq!(m.usage_key(&m.usages()[0]), "I->B");
    }
}
