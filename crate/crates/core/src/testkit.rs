//! Seeded generators of valid models for property and acceptance tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::types::*;
use crate::model::{resolve, BomiModel};
use crate::syntax::ast::{
    Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, GovernsDecl, Ident, ResponsibleDecl,
    UsageDecl,
};

/// Upper bounds on generated element counts.
#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub max_bos: usize,
    pub max_islands: usize,
    pub max_roles: usize,
    pub max_drivers: usize,
    pub max_teams: usize,
    /// Probability that a qualitative attribute is left unset.
    pub unset_prob: f64,
    /// Probability that a set attribute carries a note.
    pub note_prob: f64,
    /// Whether ids may need quoting.
    pub odd_ids: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            max_bos: 4,
            max_islands: 4,
            max_roles: 5,
            max_drivers: 3,
            max_teams: 3,
            unset_prob: 0.3,
            note_prob: 0.15,
            odd_ids: true,
        }
    }
}

impl GenConfig {
    /// At most 3 boundary objects, 3 roles and 2 governance teams.
    pub fn small() -> Self {
        Self {
            max_bos: 3,
            max_islands: 3,
            max_roles: 3,
            max_drivers: 2,
            max_teams: 2,
            ..Self::default()
        }
    }
}

const NOTES: &[&str] = &["checked weekly", "see \"wiki\"", "owner: a\\b", "tbd", "ünïcode ✓"];
const TEXTS: &[&str] = &["text", "UML model", "spreadsheet", "Backlog Item", "a \"quoted\" word", ""];

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty choice list")
}

fn id(rng: &mut ChaCha8Rng, cfg: &GenConfig, prefix: &str, i: usize) -> String {
    if cfg.odd_ids && rng.gen_bool(0.1) {
        format!("{prefix} {i} \"x\"")
    } else {
        format!("{prefix}{i}")
    }
}

fn level(rng: &mut ChaCha8Rng) -> QualLevel {
    *pick(rng, &[QualLevel::High, QualLevel::Medium, QualLevel::Low])
}

fn qual(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Option<QualAttr> {
    let unset = rng.gen_bool(cfg.unset_prob);
    let note = rng
        .gen_bool(cfg.note_prob)
        .then(|| pick(rng, NOTES).to_string());
    match (unset, note) {
        (true, None) => None,
        (true, Some(n)) => Some(QualAttr::with_note(QualLevel::Unknown, n)),
        (false, note) => Some(QualAttr {
            level: level(rng),
            note,
        }),
    }
}

fn text(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Option<String> {
    (!rng.gen_bool(cfg.unset_prob)).then(|| pick(rng, TEXTS).to_string())
}

fn push_qual(rng: &mut ChaCha8Rng, cfg: &GenConfig, attrs: &mut Vec<Attr>, key: &str) {
    if let Some(q) = qual(rng, cfg) {
        attrs.push(Attr::new(key, AttrValue::Qual(q)));
    }
}

fn push_text(rng: &mut ChaCha8Rng, cfg: &GenConfig, attrs: &mut Vec<Attr>, key: &str) {
    if let Some(t) = text(rng, cfg) {
        attrs.push(Attr::new(key, AttrValue::Text(t)));
    }
}

fn subset<T: Clone>(rng: &mut ChaCha8Rng, items: &[T], min: usize) -> Vec<T> {
    let mut out: Vec<T> = items.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    if out.len() < min && !items.is_empty() {
        out = items.choose_multiple(rng, min.min(items.len())).cloned().collect();
    }
    out
}

fn idents(names: &[String]) -> Vec<Ident> {
    names.iter().map(|n| Ident::new(n.clone())).collect()
}

/// A syntax tree that resolves without errors and passes conformance.
pub fn random_ast(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Ast {
    let mut ast = Ast::new(format!("generated {}", rng.gen_range(0..1000)));

    let bos: Vec<String> = (0..rng.gen_range(0..=cfg.max_bos)).map(|i| id(rng, cfg, "Bo", i)).collect();
    let islands: Vec<String> = (0..rng.gen_range(0..=cfg.max_islands)).map(|i| id(rng, cfg, "Island", i)).collect();
    let roles: Vec<String> = (0..rng.gen_range(0..=cfg.max_roles)).map(|i| id(rng, cfg, "Role", i)).collect();
    let drivers: Vec<String> = if islands.is_empty() {
        Vec::new()
    } else {
        (0..rng.gen_range(0..=cfg.max_drivers)).map(|i| id(rng, cfg, "Driver", i)).collect()
    };
    let teams: Vec<String> = (0..rng.gen_range(0..=cfg.max_teams)).map(|i| id(rng, cfg, "Team", i)).collect();

    let mut entities = Vec::new();
    for b in &bos {
        let mut e = EntityDecl::new(DeclKind::Bo, b);
        let attrs = &mut e.attrs;
        if !rng.gen_bool(cfg.unset_prob) {
            let st = if rng.gen_bool(0.2) {
                SuperType::Other(format!("Custom {}", rng.gen_range(0..5)))
            } else {
                SuperType::Known(*pick(rng, KnownSuperType::ALL))
            };
            attrs.push(Attr::new("supertype", AttrValue::SuperType(st)));
        }
        push_text(rng, cfg, attrs, "subtype");
        push_text(rng, cfg, attrs, "purpose");
        push_qual(rng, cfg, attrs, "level_of_detail");
        push_qual(rng, cfg, attrs, "frequency_of_change");
        push_qual(rng, cfg, attrs, "modularity");
        push_qual(rng, cfg, attrs, "maintainability");
        if !rng.gen_bool(cfg.unset_prob) {
            attrs.push(Attr::new("prescriptive", AttrValue::Bool(rng.gen())));
        }
        if !rng.gen_bool(cfg.unset_prob) {
            let stages = &LifecycleStage::ALL[..4];
            attrs.push(Attr::new("lifecycle", AttrValue::Lifecycle(*pick(rng, stages))));
        }
        push_text(rng, cfg, attrs, "representation_format");
        push_qual(rng, cfg, attrs, "internal_consistency");
        push_qual(rng, cfg, attrs, "external_consistency");
        push_text(rng, cfg, attrs, "versioning");
        push_qual(rng, cfg, attrs, "connectedness");
        push_qual(rng, cfg, attrs, "up_to_date");
        entities.push(e);
    }
    for i in &islands {
        let mut e = EntityDecl::new(DeclKind::Mi, i);
        let mut types = subset(rng, IslandType::ALL, 1);
        types.sort();
        e.attrs.push(Attr::new("types", AttrValue::IslandTypes(types)));
        push_text(rng, cfg, &mut e.attrs, "description");
        entities.push(e);
    }
    for r in &roles {
        let mut e = EntityDecl::new(DeclKind::Role, r);
        push_text(rng, cfg, &mut e.attrs, "name");
        if !islands.is_empty() && rng.gen_bool(0.8) {
            let island = pick(rng, &islands).clone();
            e.attrs.push(Attr::new("part_of", AttrValue::Ref(Ident::new(island))));
        }
        entities.push(e);
    }
    for d in &drivers {
        let mut e = EntityDecl::new(DeclKind::Driver, d);
        if rng.gen_bool(0.7) {
            e.attrs.push(Attr::new("type", AttrValue::DriverType(*pick(rng, DriverType::ALL))));
        }
        push_text(rng, cfg, &mut e.attrs, "subtype");
        if rng.gen_bool(0.7) {
            e.attrs.push(Attr::new("distance_type", AttrValue::DistanceType(*pick(rng, DistanceType::ALL))));
        }
        if rng.gen_bool(0.5) {
            e.attrs.push(Attr::new("distance_size", AttrValue::Level(level(rng))));
        }
        let drives = subset(rng, &islands, 1);
        e.attrs.push(Attr::new("drives", AttrValue::Refs(idents(&drives))));
        entities.push(e);
    }
    for t in &teams {
        let mut e = EntityDecl::new(DeclKind::Governance, t);
        push_text(rng, cfg, &mut e.attrs, "name");
        let members = subset(rng, &roles, 0);
        e.attrs.push(Attr::new("members", AttrValue::Refs(idents(&members))));
        for b in subset(rng, &bos, 0) {
            let mut g = GovernsDecl {
                bo: Ident::new(b),
                attrs: Vec::new(),
                span: Default::default(),
            };
            push_text(rng, cfg, &mut g.attrs, "coordination_mechanism");
            push_qual(rng, cfg, &mut g.attrs, "frequency_of_coordination");
            e.governs.push(g);
        }
        entities.push(e);
    }
    ast.elements.extend(entities.into_iter().map(Element::Entity));

    if !bos.is_empty() {
        let users: Vec<String> = roles.iter().chain(&islands).cloned().collect();
        let mut pairs: Vec<(String, String)> = users
            .iter()
            .flat_map(|u| bos.iter().map(move |b| (u.clone(), b.clone())))
            .collect();
        pairs.shuffle(rng);
        let n = rng.gen_range(0..=pairs.len().min(6));
        for (user, bo) in pairs.into_iter().take(n) {
            let mut u = UsageDecl {
                user: Ident::new(user),
                bo: Ident::new(bo),
                attrs: Vec::new(),
                span: Default::default(),
            };
            push_qual(rng, cfg, &mut u.attrs, "accessibility");
            push_qual(rng, cfg, &mut u.attrs, "stability");
            push_qual(rng, cfg, &mut u.attrs, "criticality");
            push_qual(rng, cfg, &mut u.attrs, "fit_for_purpose");
            if rng.gen_bool(0.7) {
                let mut crud = subset(rng, Crud::ALL, 0);
                crud.sort();
                u.attrs.push(Attr::new("crud", AttrValue::Crud(crud)));
            }
            ast.elements.push(Element::Usage(u));
        }

        let mut pairs: Vec<(String, String)> = roles
            .iter()
            .flat_map(|r| bos.iter().map(move |b| (r.clone(), b.clone())))
            .collect();
        pairs.shuffle(rng);
        let n = rng.gen_range(0..=pairs.len().min(3));
        for (role, bo) in pairs.into_iter().take(n) {
            ast.elements.push(Element::Responsible(ResponsibleDecl {
                role: Ident::new(role),
                bo: Ident::new(bo),
                span: Default::default(),
            }));
        }
    }
    ast
}

/// Resolves a freshly generated tree. Generated trees always resolve.
pub fn random_model(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> BomiModel {
    let ast = random_ast(rng, cfg);
    resolve(&ast).unwrap_or_else(|e| panic!("generated model does not resolve: {e:?}"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::conformance;
    use crate::syntax::{parse, print};

    #[test]
    fn generated_models_are_valid_and_deterministic() {
        for seed in 0..200 {
            let ast = random_ast(&mut rng(seed), &GenConfig::default());
            assert_eq!(ast, random_ast(&mut rng(seed), &GenConfig::default()));
            let src = print(&ast);
            let (parsed, diags) = parse(&src, "gen");
            assert!(diags.is_empty(), "seed {seed}: {diags:?}\n{src}");
            let model = resolve(&parsed).unwrap();
            assert!(conformance(&model).is_empty(), "seed {seed}");
        }
    }
}
