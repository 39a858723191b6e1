//! Canonical JSON interchange format.
//!
//! Keys are sorted, Unknown attributes are omitted, collections keep
//! declaration order and the document carries `"bomiVersion": 1`. Reading
//! validates the document shape, rebuilds a syntax tree and resolves it, so
//! the same invariants hold as for `.bomi` sources.

use std::sync::Arc;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::model::types::*;
use crate::model::{resolve, BomiModel, ResolutionError};
use crate::span::{Pos, SourceSpan};
use crate::syntax::ast::{
    Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, GovernsDecl, Ident, ResponsibleDecl,
    UsageDecl,
};

pub const BOMI_VERSION: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("schema error at `{pointer}`: {message}")]
    Schema { pointer: String, message: String },
    #[error("unsupported bomiVersion {0} (expected {BOMI_VERSION})")]
    Version(String),
    #[error("model does not resolve: {}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))]
    Resolution(Vec<ResolutionError>),
}

/// Object with keys inserted in sorted order, so the output is canonical
/// whether or not the map type preserves insertion order.
fn object(mut fields: Vec<(&str, Value)>) -> Value {
    fields.sort_by(|a, b| a.0.cmp(b.0));
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_owned(), v);
    }
    Value::Object(map)
}

fn qual_value(q: &QualAttr) -> Option<Value> {
    match (&q.note, q.level) {
        (None, QualLevel::Unknown) => None,
        (None, level) => Some(Value::from(level.name())),
        (Some(note), QualLevel::Unknown) => Some(object(vec![("note", Value::from(note.as_str()))])),
        (Some(note), level) => Some(object(vec![
            ("level", Value::from(level.name())),
            ("note", Value::from(note.as_str())),
        ])),
    }
}

struct Fields<'a>(Vec<(&'a str, Value)>);

impl<'a> Fields<'a> {
    fn put(&mut self, key: &'a str, v: impl Into<Value>) -> &mut Self {
        self.0.push((key, v.into()));
        self
    }

    fn opt_text(&mut self, key: &'a str, v: &Option<String>) -> &mut Self {
        if let Some(s) = v {
            self.0.push((key, Value::from(s.as_str())));
        }
        self
    }

    fn qual(&mut self, key: &'a str, q: &QualAttr) -> &mut Self {
        if let Some(v) = qual_value(q) {
            self.0.push((key, v));
        }
        self
    }

    fn done(self) -> Value {
        object(self.0)
    }
}

fn names<T: Keyword>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|t| Value::from(t.name())).collect())
}

pub fn to_json_value(model: &BomiModel) -> Value {
    let bos = model
        .boundary_objects()
        .iter()
        .map(|b| {
            let mut f = Fields(Vec::new());
            f.put("id", b.id.as_str());
            match &b.super_type {
                Some(SuperType::Known(k)) => {
                    f.put("supertype", k.name());
                }
                Some(SuperType::Other(label)) => {
                    f.put("supertype", object(vec![("other", Value::from(label.as_str()))]));
                }
                None => {}
            }
            f.opt_text("subtype", &b.sub_type)
                .opt_text("purpose", &b.purpose)
                .qual("levelOfDetail", &b.level_of_detail)
                .qual("frequencyOfChange", &b.frequency_of_change)
                .qual("modularity", &b.modularity)
                .qual("maintainability", &b.maintenance_burden)
                .opt_text("representationFormat", &b.representation_format)
                .qual("internalConsistency", &b.internal_consistency)
                .qual("externalConsistency", &b.external_consistency)
                .opt_text("versioning", &b.versioning)
                .qual("connectedness", &b.connectedness)
                .qual("upToDate", &b.up_to_date);
            if let Some(p) = b.prescriptive {
                f.put("prescriptive", p);
            }
            if b.lifecycle != LifecycleStage::Unknown {
                f.put("lifecycle", b.lifecycle.name());
            }
            f.done()
        })
        .collect::<Vec<_>>();

    let islands = model
        .islands()
        .iter()
        .map(|i| {
            let mut f = Fields(Vec::new());
            f.put("id", i.id.as_str())
                .put("types", names(&i.types))
                .opt_text("description", &i.description);
            f.done()
        })
        .collect::<Vec<_>>();

    let roles = model
        .roles()
        .iter()
        .map(|r| {
            let mut f = Fields(Vec::new());
            f.put("id", r.id.as_str()).opt_text("name", &r.name);
            if let Some(i) = r.part_of {
                f.put("partOf", model.island(i).id.as_str());
            }
            f.done()
        })
        .collect::<Vec<_>>();

    let usages = model
        .usages()
        .iter()
        .map(|u| {
            let user = match u.user {
                UsageUser::Role(r) => object(vec![("role", Value::from(model.role(r).id.as_str()))]),
                UsageUser::Island(i) => {
                    object(vec![("island", Value::from(model.island(i).id.as_str()))])
                }
            };
            let mut f = Fields(Vec::new());
            f.put("user", user)
                .put("bo", model.bo(u.bo).id.as_str())
                .qual("accessibility", &u.accessibility)
                .qual("stability", &u.stability)
                .qual("criticality", &u.criticality)
                .qual("fitForPurpose", &u.fit_for_purpose);
            if !u.crud.is_empty() {
                f.put("crud", names(&u.crud));
            }
            f.done()
        })
        .collect::<Vec<_>>();

    let responsibilities = model
        .responsibilities()
        .iter()
        .map(|r| {
            object(vec![
                ("role", Value::from(model.role(r.role).id.as_str())),
                ("bo", Value::from(model.bo(r.bo).id.as_str())),
            ])
        })
        .collect::<Vec<_>>();

    let drivers = model
        .drivers()
        .iter()
        .map(|d| {
            let mut f = Fields(Vec::new());
            f.put("id", d.id.as_str()).opt_text("subtype", &d.sub_type).put(
                "drives",
                Value::Array(
                    d.drives
                        .iter()
                        .map(|&i| Value::from(model.island(i).id.as_str()))
                        .collect(),
                ),
            );
            if let Some(t) = d.driver_type {
                f.put("type", t.name());
            }
            if let Some(t) = d.distance_type {
                f.put("distanceType", t.name());
            }
            if d.distance_size.is_known() {
                f.put("distanceSize", d.distance_size.name());
            }
            f.done()
        })
        .collect::<Vec<_>>();

    let teams = model
        .governance_teams()
        .iter()
        .map(|t| {
            let mut f = Fields(Vec::new());
            f.put("id", t.id.as_str()).opt_text("name", &t.name).put(
                "members",
                Value::Array(
                    t.members
                        .iter()
                        .map(|&r| Value::from(model.role(r).id.as_str()))
                        .collect(),
                ),
            );
            f.done()
        })
        .collect::<Vec<_>>();

    let governs = model
        .governs_links()
        .iter()
        .map(|g| {
            let mut f = Fields(Vec::new());
            f.put("team", model.team(g.team).id.as_str())
                .put("bo", model.bo(g.bo).id.as_str())
                .opt_text("coordinationMechanism", &g.coordination_mechanism)
                .qual("frequencyOfCoordination", &g.frequency_of_coordination);
            f.done()
        })
        .collect::<Vec<_>>();

    object(vec![
        ("bomiVersion", Value::from(BOMI_VERSION)),
        ("name", Value::from(model.name())),
        ("boundaryObjects", Value::Array(bos)),
        ("islands", Value::Array(islands)),
        ("roles", Value::Array(roles)),
        ("usages", Value::Array(usages)),
        ("responsibilities", Value::Array(responsibilities)),
        ("drivers", Value::Array(drivers)),
        ("governanceTeams", Value::Array(teams)),
        ("governsLinks", Value::Array(governs)),
    ])
}

/// The JSON Schema document describing the canonical format. Reading
/// enforces the same constraints.
pub const JSON_SCHEMA: &str = include_str!("../../../../schema/bomi.schema.json");

/// Pretty-printed canonical JSON, newline terminated.
pub fn to_json(model: &BomiModel) -> String {
    let mut text = serde_json::to_string_pretty(&to_json_value(model)).expect("JSON values serialize");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// reading

fn escape_pointer(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

struct Reader {
    file: Arc<str>,
    ordinal: u32,
}

impl Reader {
    fn span(&mut self) -> SourceSpan {
        self.ordinal += 1;
        SourceSpan::new(self.file.clone(), Pos::new(self.ordinal, 1), Pos::new(self.ordinal, 1))
    }
}

fn schema_err(pointer: &str, message: impl Into<String>) -> JsonError {
    JsonError::Schema {
        pointer: if pointer.is_empty() { "/".to_owned() } else { pointer.to_owned() },
        message: message.into(),
    }
}

/// Checked view of one JSON object.
struct Obj<'v> {
    map: &'v Map<String, Value>,
    path: String,
}

impl<'v> Obj<'v> {
    fn new(value: &'v Value, path: String, allowed: &[&str]) -> Result<Self, JsonError> {
        let map = value
            .as_object()
            .ok_or_else(|| schema_err(&path, "expected an object"))?;
        if let Some(bad) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(schema_err(
                &format!("{path}/{}", escape_pointer(bad)),
                "unknown field",
            ));
        }
        Ok(Self { map, path })
    }

    fn at(&self, key: &str) -> String {
        format!("{}/{}", self.path, escape_pointer(key))
    }

    fn get(&self, key: &str) -> Option<&'v Value> {
        self.map.get(key)
    }

    fn string(&self, key: &str) -> Result<Option<String>, JsonError> {
        match self.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(_) => Err(schema_err(&self.at(key), "expected a string")),
        }
    }

    fn id(&self, key: &str) -> Result<String, JsonError> {
        match self.string(key)? {
            Some(s) if !s.is_empty() => Ok(s),
            Some(_) => Err(schema_err(&self.at(key), "identifier must not be empty")),
            None => Err(schema_err(&self.at(key), "missing required field")),
        }
    }

    fn keyword<K: Keyword>(&self, key: &str) -> Result<Option<K>, JsonError> {
        match self.string(key)? {
            None => Ok(None),
            Some(s) => K::ALL
                .iter()
                .copied()
                .find(|k| k.name() == s)
                .map(Some)
                .ok_or_else(|| {
                    schema_err(&self.at(key), format!("invalid value {s:?}, expected one of {}", K::choices()))
                }),
        }
    }

    fn array(&self, key: &str, required: bool) -> Result<&'v [Value], JsonError> {
        match self.get(key) {
            None if !required => Ok(&[]),
            None => Err(schema_err(&self.at(key), "missing required field")),
            Some(Value::Array(a)) => Ok(a),
            Some(_) => Err(schema_err(&self.at(key), "expected an array")),
        }
    }

    /// Distinct keyword names; `required` lists must be non-empty.
    fn keyword_list<K: Keyword + PartialEq>(&self, key: &str, required: bool) -> Result<Vec<K>, JsonError> {
        let items = self.array(key, required)?;
        if required && items.is_empty() {
            return Err(schema_err(&self.at(key), "expected at least one item"));
        }
        let mut out = Vec::new();
        for (i, v) in items.iter().enumerate() {
            let path = format!("{}/{i}", self.at(key));
            let s = v.as_str().ok_or_else(|| schema_err(&path, "expected a string"))?;
            let k = K::ALL
                .iter()
                .copied()
                .find(|k| k.name() == s)
                .ok_or_else(|| schema_err(&path, format!("invalid value {s:?}, expected one of {}", K::choices())))?;
            if out.contains(&k) {
                return Err(schema_err(&path, format!("duplicate value {s:?}")));
            }
            out.push(k);
        }
        Ok(out)
    }

    fn id_list(&self, key: &str, min: usize, reader: &mut Reader) -> Result<Vec<Ident>, JsonError> {
        let items = self.array(key, true)?;
        if items.len() < min {
            return Err(schema_err(&self.at(key), format!("expected at least {min} item(s)")));
        }
        let mut out = Vec::new();
        for (i, v) in items.iter().enumerate() {
            let path = format!("{}/{i}", self.at(key));
            match v.as_str() {
                Some(s) if out.iter().any(|i: &Ident| i.name == s) => {
                    return Err(schema_err(&path, format!("duplicate reference {s:?}")))
                }
                Some(s) if !s.is_empty() => out.push(Ident {
                    name: s.to_owned(),
                    span: reader.span(),
                }),
                _ => return Err(schema_err(&path, "expected a non-empty identifier string")),
            }
        }
        Ok(out)
    }

    fn qual(&self, key: &str) -> Result<Option<QualAttr>, JsonError> {
        let path = self.at(key);
        let level_of = |s: &str, path: &str| {
            QualLevel::ALL
                .iter()
                .copied()
                .find(|l| l.name() == s)
                .ok_or_else(|| schema_err(path, format!("invalid level {s:?}, expected one of {}", QualLevel::choices())))
        };
        match self.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(QualAttr::new(level_of(s, &path)?))),
            Some(v @ Value::Object(_)) => {
                let o = Obj::new(v, path.clone(), &["level", "note"])?;
                let level = match o.string("level")? {
                    Some(s) => level_of(&s, &o.at("level"))?,
                    None => QualLevel::Unknown,
                };
                Ok(Some(QualAttr {
                    level,
                    note: o.string("note")?,
                }))
            }
            Some(_) => Err(schema_err(&path, "expected a level string or {level, note} object")),
        }
    }
}

fn attr(key: &str, value: AttrValue, reader: &mut Reader) -> Attr {
    Attr {
        key: key.to_owned(),
        value,
        span: reader.span(),
    }
}

fn push_qual(attrs: &mut Vec<Attr>, o: &Obj, json_key: &str, dsl_key: &str, reader: &mut Reader) -> Result<(), JsonError> {
    if let Some(q) = o.qual(json_key)? {
        attrs.push(attr(dsl_key, AttrValue::Qual(q), reader));
    }
    Ok(())
}

fn push_text(attrs: &mut Vec<Attr>, o: &Obj, json_key: &str, dsl_key: &str, reader: &mut Reader) -> Result<(), JsonError> {
    if let Some(s) = o.string(json_key)? {
        attrs.push(attr(dsl_key, AttrValue::Text(s), reader));
    }
    Ok(())
}

fn entity(kind: DeclKind, id: String, attrs: Vec<Attr>, reader: &mut Reader) -> EntityDecl {
    let span = reader.span();
    EntityDecl {
        kind,
        id: Ident {
            name: id,
            span: span.clone(),
        },
        attrs,
        governs: Vec::new(),
        span,
    }
}

/// Parses the canonical JSON form into a syntax tree without resolving it.
pub fn ast_from_json(text: &str, file: &str) -> Result<Ast, JsonError> {
    let root: Value = serde_json::from_str(text).map_err(|e| JsonError::Syntax(e.to_string()))?;
    let mut reader = Reader {
        file: Arc::from(file),
        ordinal: 0,
    };
    let top = Obj::new(
        &root,
        String::new(),
        &[
            "bomiVersion",
            "name",
            "boundaryObjects",
            "islands",
            "roles",
            "usages",
            "responsibilities",
            "drivers",
            "governanceTeams",
            "governsLinks",
        ],
    )?;
    match top.get("bomiVersion") {
        Some(v) if v.as_i64() == Some(BOMI_VERSION) => {}
        Some(v) => return Err(JsonError::Version(v.to_string())),
        None => return Err(schema_err("/bomiVersion", "missing required field")),
    }
    let mut ast = Ast::new(top.string("name")?.unwrap_or_default());
    ast.span = reader.span();

    let mut entities: Vec<EntityDecl> = Vec::new();

    for (i, v) in top.array("boundaryObjects", true)?.iter().enumerate() {
        let o = Obj::new(
            v,
            format!("/boundaryObjects/{i}"),
            &[
                "id", "supertype", "subtype", "purpose", "levelOfDetail", "frequencyOfChange",
                "modularity", "maintainability", "prescriptive", "lifecycle",
                "representationFormat", "internalConsistency", "externalConsistency",
                "versioning", "connectedness", "upToDate",
            ],
        )?;
        let id = o.id("id")?;
        let mut attrs = Vec::new();
        match o.get("supertype") {
            None => {}
            Some(Value::String(_)) => {
                let k: KnownSuperType = o.keyword("supertype")?.expect("present");
                attrs.push(attr("supertype", AttrValue::SuperType(SuperType::Known(k)), &mut reader));
            }
            Some(v @ Value::Object(_)) => {
                let s = Obj::new(v, o.at("supertype"), &["other"])?;
                let label = s
                    .string("other")?
                    .ok_or_else(|| schema_err(&s.at("other"), "missing required field"))?;
                if label.is_empty() {
                    return Err(schema_err(&s.at("other"), "label must not be empty"));
                }
                attrs.push(attr("supertype", AttrValue::SuperType(SuperType::Other(label)), &mut reader));
            }
            Some(_) => return Err(schema_err(&o.at("supertype"), "expected a string or {other} object")),
        }
        push_text(&mut attrs, &o, "subtype", "subtype", &mut reader)?;
        push_text(&mut attrs, &o, "purpose", "purpose", &mut reader)?;
        push_qual(&mut attrs, &o, "levelOfDetail", "level_of_detail", &mut reader)?;
        push_qual(&mut attrs, &o, "frequencyOfChange", "frequency_of_change", &mut reader)?;
        push_qual(&mut attrs, &o, "modularity", "modularity", &mut reader)?;
        push_qual(&mut attrs, &o, "maintainability", "maintainability", &mut reader)?;
        match o.get("prescriptive") {
            None => {}
            Some(Value::Bool(b)) => attrs.push(attr("prescriptive", AttrValue::Bool(*b), &mut reader)),
            Some(_) => return Err(schema_err(&o.at("prescriptive"), "expected a boolean")),
        }
        if let Some(l) = o.keyword::<LifecycleStage>("lifecycle")? {
            attrs.push(attr("lifecycle", AttrValue::Lifecycle(l), &mut reader));
        }
        push_text(&mut attrs, &o, "representationFormat", "representation_format", &mut reader)?;
        push_qual(&mut attrs, &o, "internalConsistency", "internal_consistency", &mut reader)?;
        push_qual(&mut attrs, &o, "externalConsistency", "external_consistency", &mut reader)?;
        push_text(&mut attrs, &o, "versioning", "versioning", &mut reader)?;
        push_qual(&mut attrs, &o, "connectedness", "connectedness", &mut reader)?;
        push_qual(&mut attrs, &o, "upToDate", "up_to_date", &mut reader)?;
        entities.push(entity(DeclKind::Bo, id, attrs, &mut reader));
    }

    for (i, v) in top.array("islands", true)?.iter().enumerate() {
        let o = Obj::new(v, format!("/islands/{i}"), &["id", "types", "description"])?;
        let id = o.id("id")?;
        let mut types: Vec<IslandType> = o.keyword_list("types", true)?;
        types.sort();
        let mut attrs = vec![attr("types", AttrValue::IslandTypes(types), &mut reader)];
        push_text(&mut attrs, &o, "description", "description", &mut reader)?;
        entities.push(entity(DeclKind::Mi, id, attrs, &mut reader));
    }

    for (i, v) in top.array("roles", true)?.iter().enumerate() {
        let o = Obj::new(v, format!("/roles/{i}"), &["id", "name", "partOf"])?;
        let id = o.id("id")?;
        let mut attrs = Vec::new();
        push_text(&mut attrs, &o, "name", "name", &mut reader)?;
        if o.get("partOf").is_some() {
            let island = o.id("partOf")?;
            let ident = Ident { name: island, span: reader.span() };
            attrs.push(attr("part_of", AttrValue::Ref(ident), &mut reader));
        }
        entities.push(entity(DeclKind::Role, id, attrs, &mut reader));
    }

    for (i, v) in top.array("drivers", true)?.iter().enumerate() {
        let o = Obj::new(
            v,
            format!("/drivers/{i}"),
            &["id", "type", "subtype", "distanceType", "distanceSize", "drives"],
        )?;
        let id = o.id("id")?;
        let mut attrs = Vec::new();
        if let Some(t) = o.keyword::<DriverType>("type")? {
            attrs.push(attr("type", AttrValue::DriverType(t), &mut reader));
        }
        push_text(&mut attrs, &o, "subtype", "subtype", &mut reader)?;
        if let Some(t) = o.keyword::<DistanceType>("distanceType")? {
            attrs.push(attr("distance_type", AttrValue::DistanceType(t), &mut reader));
        }
        if let Some(l) = o.keyword::<QualLevel>("distanceSize")? {
            attrs.push(attr("distance_size", AttrValue::Level(l), &mut reader));
        }
        let drives = o.id_list("drives", 1, &mut reader)?;
        attrs.push(attr("drives", AttrValue::Refs(drives), &mut reader));
        entities.push(entity(DeclKind::Driver, id, attrs, &mut reader));
    }

    for (i, v) in top.array("governanceTeams", true)?.iter().enumerate() {
        let o = Obj::new(v, format!("/governanceTeams/{i}"), &["id", "name", "members"])?;
        let id = o.id("id")?;
        let mut attrs = Vec::new();
        push_text(&mut attrs, &o, "name", "name", &mut reader)?;
        let members = o.id_list("members", 0, &mut reader)?;
        attrs.push(attr("members", AttrValue::Refs(members), &mut reader));
        entities.push(entity(DeclKind::Governance, id, attrs, &mut reader));
    }

    for (i, v) in top.array("governsLinks", true)?.iter().enumerate() {
        let o = Obj::new(
            v,
            format!("/governsLinks/{i}"),
            &["team", "bo", "coordinationMechanism", "frequencyOfCoordination"],
        )?;
        let team = o.id("team")?;
        let bo = o.id("bo")?;
        let mut attrs = Vec::new();
        push_text(&mut attrs, &o, "coordinationMechanism", "coordination_mechanism", &mut reader)?;
        push_qual(&mut attrs, &o, "frequencyOfCoordination", "frequency_of_coordination", &mut reader)?;
        let span = reader.span();
        let decl = GovernsDecl {
            bo: Ident { name: bo, span: span.clone() },
            attrs,
            span,
        };
        match entities
            .iter_mut()
            .find(|e| e.kind == DeclKind::Governance && e.id.name == team)
        {
            Some(t) => t.governs.push(decl),
            None => return Err(schema_err(&o.at("team"), format!("`{team}` is not a governance team"))),
        }
    }

    ast.elements.extend(entities.into_iter().map(Element::Entity));

    for (i, v) in top.array("usages", true)?.iter().enumerate() {
        let o = Obj::new(
            v,
            format!("/usages/{i}"),
            &["user", "bo", "accessibility", "stability", "criticality", "fitForPurpose", "crud"],
        )?;
        let user_value = o
            .get("user")
            .ok_or_else(|| schema_err(&o.at("user"), "missing required field"))?;
        let u = Obj::new(user_value, o.at("user"), &["role", "island"])?;
        let user = match (u.get("role").is_some(), u.get("island").is_some()) {
            (true, false) => u.id("role")?,
            (false, true) => u.id("island")?,
            _ => return Err(schema_err(&u.path, "expected exactly one of `role` or `island`")),
        };
        let bo = o.id("bo")?;
        let mut attrs = Vec::new();
        push_qual(&mut attrs, &o, "accessibility", "accessibility", &mut reader)?;
        push_qual(&mut attrs, &o, "stability", "stability", &mut reader)?;
        push_qual(&mut attrs, &o, "criticality", "criticality", &mut reader)?;
        push_qual(&mut attrs, &o, "fitForPurpose", "fit_for_purpose", &mut reader)?;
        let mut crud: Vec<Crud> = o.keyword_list("crud", false)?;
        crud.sort();
        if !crud.is_empty() {
            attrs.push(attr("crud", AttrValue::Crud(crud), &mut reader));
        }
        let span = reader.span();
        ast.elements.push(Element::Usage(UsageDecl {
            user: Ident { name: user, span: span.clone() },
            bo: Ident { name: bo, span: span.clone() },
            attrs,
            span,
        }));
    }

    for (i, v) in top.array("responsibilities", true)?.iter().enumerate() {
        let o = Obj::new(v, format!("/responsibilities/{i}"), &["role", "bo"])?;
        let role = o.id("role")?;
        let bo = o.id("bo")?;
        let span = reader.span();
        ast.elements.push(Element::Responsible(ResponsibleDecl {
            role: Ident { name: role, span: span.clone() },
            bo: Ident { name: bo, span: span.clone() },
            span,
        }));
    }

    Ok(ast)
}

/// Reads a model from canonical JSON. `file` names the source in spans.
pub fn from_json(text: &str, file: &str) -> Result<BomiModel, JsonError> {
    let ast = ast_from_json(text, file)?;
    resolve(&ast).map_err(JsonError::Resolution)
}
