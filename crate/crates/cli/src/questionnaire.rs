//! The `init` questionnaire: guided questions about one boundary object,
//! turned into a `.bomi` model.
//!
//! Questions follow the metamodel: the boundary object and its attributes,
//! the roles that use it, their islands, each usage, responsibility,
//! drivers, and finally the governance team and how it coordinates. Blank
//! answers leave attributes unset.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use bomi::model::types::{
    Crud, DistanceType, DriverType, IslandType, Keyword, KnownSuperType, LifecycleStage, QualAttr,
    QualLevel, SuperType,
};
use bomi::syntax::ast::{
    Ast, Attr, AttrValue, DeclKind, Element, EntityDecl, GovernsDecl, Ident, ResponsibleDecl,
    UsageDecl,
};

/// The shape of answer a question accepts. Blank is always accepted except
/// for `Required`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnswerKind {
    Required,
    Text,
    Level,
    YesNo,
    /// One of the listed words, case-insensitive.
    OneOf(Vec<String>),
    /// Comma-separated subset of the listed words.
    SubsetOf(Vec<String>),
    /// Comma-separated free names.
    Names,
    /// Letters from `CRUD`.
    Crud,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prompt {
    pub text: String,
    pub kind: AnswerKind,
}

/// Source of answers. `None` means the session was aborted.
pub trait PromptIo {
    fn ask(&mut self, prompt: &Prompt) -> Option<String>;
    /// Tells the user why the last answer was rejected.
    fn reject(&mut self, reason: &str);
}

/// Reads answers line by line; prompts go to `out`.
pub struct LineIo<R, W> {
    input: R,
    out: W,
}

impl<R: BufRead, W: Write> LineIo<R, W> {
    pub fn new(input: R, out: W) -> Self {
        Self { input, out }
    }
}

impl<R: BufRead, W: Write> PromptIo for LineIo<R, W> {
    fn ask(&mut self, prompt: &Prompt) -> Option<String> {
        let _ = write!(self.out, "{} ", prompt.text);
        let _ = self.out.flush();
        let mut line = String::new();
        match self.input.read_line(&mut line) {
            Ok(0) | Err(_) => None,
            Ok(_) => Some(line.trim().to_owned()),
        }
    }

    fn reject(&mut self, reason: &str) {
        let _ = writeln!(self.out, "  {reason}");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aborted;

fn words<K: Keyword>() -> Vec<String> {
    K::ALL.iter().map(|k| k.name().to_owned()).collect()
}

fn split_list(answer: &str) -> Vec<String> {
    answer
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}

fn find_word(options: &[String], answer: &str) -> Option<String> {
    options.iter().find(|o| o.eq_ignore_ascii_case(answer)).cloned()
}

/// Checks an answer against its kind; returns the normalized answer or the
/// reason it was rejected.
pub fn validate(kind: &AnswerKind, answer: &str) -> Result<String, String> {
    let answer = answer.trim();
    if answer.is_empty() {
        return match kind {
            AnswerKind::Required => Err("an answer is required".into()),
            _ => Ok(String::new()),
        };
    }
    match kind {
        AnswerKind::Required | AnswerKind::Text => Ok(answer.to_owned()),
        AnswerKind::Level => ["high", "medium", "low"]
            .iter()
            .find(|l| l.eq_ignore_ascii_case(answer))
            .map(|l| (*l).to_owned())
            .ok_or_else(|| "answer high, medium or low (blank to skip)".into()),
        AnswerKind::YesNo => match answer.to_ascii_lowercase().as_str() {
            "y" | "yes" => Ok("yes".into()),
            "n" | "no" => Ok("no".into()),
            _ => Err("answer yes or no (blank to skip)".into()),
        },
        AnswerKind::OneOf(options) => {
            find_word(options, answer).ok_or_else(|| format!("answer one of: {}", options.join(", ")))
        }
        AnswerKind::SubsetOf(options) => {
            let mut picked: Vec<String> = Vec::new();
            for item in split_list(answer) {
                let word = find_word(options, &item)
                    .ok_or_else(|| format!("`{item}` is not one of: {}", options.join(", ")))?;
                if !picked.contains(&word) {
                    picked.push(word);
                }
            }
            Ok(picked.join(", "))
        }
        AnswerKind::Names => Ok(split_list(answer).join(", ")),
        AnswerKind::Crud => {
            if answer.chars().all(|c| Crud::from_letter(c).is_some()) {
                Ok(answer.to_ascii_uppercase())
            } else {
                Err("answer with letters from CRUD, e.g. R or CRU".into())
            }
        }
    }
}

/// CamelCase identifier for a free-form name, or `None` when the name has
/// no letters or digits.
pub fn to_identifier(name: &str) -> Option<String> {
    let mut id = String::new();
    for word in name.split(|c: char| !c.is_alphanumeric()).filter(|w| !w.is_empty()) {
        let mut chars = word.chars();
        let first = chars.next().expect("non-empty word");
        id.extend(first.to_uppercase());
        id.push_str(chars.as_str());
    }
    match id.chars().next() {
        None => None,
        Some(c) if c.is_numeric() => Some(format!("N{id}")),
        Some(_) => Some(id),
    }
}

struct Session<'a> {
    io: &'a mut dyn PromptIo,
    used_ids: BTreeSet<String>,
}

impl Session<'_> {
    fn ask(&mut self, text: impl Into<String>, kind: AnswerKind) -> Result<String, Aborted> {
        let prompt = Prompt {
            text: text.into(),
            kind,
        };
        loop {
            let answer = self.io.ask(&prompt).ok_or(Aborted)?;
            match validate(&prompt.kind, &answer) {
                Ok(v) => return Ok(v),
                Err(reason) => self.io.reject(&reason),
            }
        }
    }

    /// Unique identifier derived from a name.
    fn fresh_id(&mut self, name: &str, fallback: &str) -> String {
        let base = to_identifier(name).unwrap_or_else(|| fallback.to_owned());
        let mut id = base.clone();
        let mut n = 2;
        while self.used_ids.contains(&id) {
            id = format!("{base}{n}");
            n += 1;
        }
        self.used_ids.insert(id.clone());
        id
    }

    fn level(&mut self, text: &str, attrs: &mut Vec<Attr>, key: &str) -> Result<(), Aborted> {
        let answer = self.ask(format!("{text} (high/medium/low, blank to skip)?"), AnswerKind::Level)?;
        if let Some(level) = QualLevel::from_keyword(&answer) {
            attrs.push(Attr::new(key, AttrValue::Qual(QualAttr::new(level))));
        }
        Ok(())
    }

    fn text(&mut self, text: &str, attrs: &mut Vec<Attr>, key: &str) -> Result<(), Aborted> {
        let answer = self.ask(format!("{text} (blank to skip)?"), AnswerKind::Text)?;
        if !answer.is_empty() {
            attrs.push(Attr::new(key, AttrValue::Text(answer)));
        }
        Ok(())
    }
}

struct Member {
    id: String,
    name: String,
}

/// Runs one session. Every generated tree resolves and passes conformance.
pub fn run_questionnaire(io: &mut dyn PromptIo) -> Result<Ast, Aborted> {
    let mut s = Session {
        io,
        used_ids: BTreeSet::new(),
    };

    let bo_name = s.ask("Which BO would you like to focus on?", AnswerKind::Required)?;
    let model_name = bo_name.clone();
    let bo_id = s.fresh_id(&bo_name, "BoundaryObject");
    let mut bo = EntityDecl::new(DeclKind::Bo, &bo_id);
    let attrs = &mut bo.attrs;

    let supertype = s.ask(
        "What is its super type (Technology, Task, Planning or another label, blank to skip)?",
        AnswerKind::Text,
    )?;
    if !supertype.is_empty() {
        let st = KnownSuperType::from_keyword(&supertype)
            .map(SuperType::Known)
            .unwrap_or(SuperType::Other(supertype));
        attrs.push(Attr::new("supertype", AttrValue::SuperType(st)));
    }
    s.text("What is its sub type", attrs, "subtype")?;
    s.text("What is its purpose", attrs, "purpose")?;
    s.level("How detailed is it", attrs, "level_of_detail")?;
    s.level("How often does it change", attrs, "frequency_of_change")?;
    s.level("How modular is it", attrs, "modularity")?;
    s.level("How costly is it to maintain", attrs, "maintainability")?;
    let prescriptive = s.ask("Does it prescribe how to work (yes/no, blank to skip)?", AnswerKind::YesNo)?;
    if !prescriptive.is_empty() {
        attrs.push(Attr::new("prescriptive", AttrValue::Bool(prescriptive == "yes")));
    }
    let stages: Vec<String> = words::<LifecycleStage>().into_iter().filter(|w| w != "Unknown").collect();
    let lifecycle = s.ask(
        format!("Which lifecycle stage is it in ({}, blank to skip)?", stages.join(", ")),
        AnswerKind::OneOf(stages),
    )?;
    if let Some(stage) = LifecycleStage::from_keyword(&lifecycle) {
        attrs.push(Attr::new("lifecycle", AttrValue::Lifecycle(stage)));
    }
    s.text("How is it represented (e.g. text, model, table)", attrs, "representation_format")?;
    s.level("How internally consistent is it", attrs, "internal_consistency")?;
    s.level("How consistent is it with other artifacts", attrs, "external_consistency")?;
    s.text("How is it versioned", attrs, "versioning")?;
    s.level("How connected is it to other artifacts", attrs, "connectedness")?;
    s.level("How up to date is it", attrs, "up_to_date")?;

    let mut roles: Vec<Member> = Vec::new();
    let answer = s.ask(
        "What roles interact with the BO (comma separated, blank for none)?",
        AnswerKind::Names,
    )?;
    for name in split_list(&answer) {
        if roles.iter().any(|r| r.name == name) {
            continue;
        }
        let id = s.fresh_id(&name, "Role");
        roles.push(Member { id, name });
    }

    let mut islands: Vec<EntityDecl> = Vec::new();
    let mut island_names: Vec<String> = Vec::new();
    let mut role_decls = Vec::new();
    for role in &roles {
        let mut decl = EntityDecl::new(DeclKind::Role, &role.id);
        if role.name != role.id {
            decl.attrs.push(Attr::new("name", AttrValue::Text(role.name.clone())));
        }
        let island = s.ask(
            format!("Which island does {} belong to (blank for none)?", role.name),
            AnswerKind::Text,
        )?;
        if !island.is_empty() {
            let index = match island_names.iter().position(|n| *n == island) {
                Some(i) => i,
                None => {
                    let id = s.fresh_id(&island, "Island");
                    let types = s.ask(
                        format!(
                            "What type of island is {island} ({}, comma separated, blank for Team)?",
                            words::<IslandType>().join(", ")
                        ),
                        AnswerKind::SubsetOf(words::<IslandType>()),
                    )?;
                    let mut types: Vec<IslandType> =
                        split_list(&types).iter().filter_map(|t| IslandType::from_keyword(t)).collect();
                    if types.is_empty() {
                        types.push(IslandType::Team);
                    }
                    types.sort();
                    let mut mi = EntityDecl::new(DeclKind::Mi, &id);
                    mi.attrs.push(Attr::new("types", AttrValue::IslandTypes(types)));
                    if island != id {
                        mi.attrs.push(Attr::new("description", AttrValue::Text(island.clone())));
                    }
                    islands.push(mi);
                    island_names.push(island);
                    islands.len() - 1
                }
            };
            let target = Ident::new(islands[index].id.name.clone());
            decl.attrs.push(Attr::new("part_of", AttrValue::Ref(target)));
        }
        role_decls.push(decl);
    }

    let mut usages = Vec::new();
    for role in &roles {
        let mut attrs = Vec::new();
        let who = &role.name;
        s.level(&format!("How accessible is {bo_name} to {who}"), &mut attrs, "accessibility")?;
        s.level(&format!("How stable is {bo_name} for {who}"), &mut attrs, "stability")?;
        s.level(&format!("How critical is {bo_name} to {who}"), &mut attrs, "criticality")?;
        s.level(&format!("How fit for purpose is {bo_name} for {who}"), &mut attrs, "fit_for_purpose")?;
        let crud = s.ask(
            format!("Which rights does {who} have on {bo_name} (letters from CRUD, blank to skip)?"),
            AnswerKind::Crud,
        )?;
        if !crud.is_empty() {
            let mut rights: Vec<Crud> = crud.chars().filter_map(Crud::from_letter).collect();
            rights.sort();
            rights.dedup();
            attrs.push(Attr::new("crud", AttrValue::Crud(rights)));
        }
        usages.push(UsageDecl {
            user: Ident::new(role.id.clone()),
            bo: Ident::new(bo_id.clone()),
            attrs,
            span: Default::default(),
        });
    }

    let mut responsible = None;
    if !roles.is_empty() {
        let names: Vec<String> = roles.iter().map(|r| r.name.clone()).collect();
        let answer = s.ask(
            format!("Which role is responsible for {bo_name} ({}, blank for none)?", names.join(", ")),
            AnswerKind::OneOf(names),
        )?;
        responsible = roles.iter().find(|r| r.name == answer).map(|r| r.id.clone());
    }

    let mut drivers = Vec::new();
    if !islands.is_empty() {
        let answer = s.ask(
            "What drives these islands to work differently (comma separated, blank for none)?",
            AnswerKind::Names,
        )?;
        let mut seen = Vec::new();
        for name in split_list(&answer) {
            if seen.contains(&name) {
                continue;
            }
            seen.push(name.clone());
            let id = s.fresh_id(&name, "Driver");
            let mut d = EntityDecl::new(DeclKind::Driver, &id);
            let kind = s.ask(
                format!("What kind of driver is {name} ({}, blank to skip)?", words::<DriverType>().join(", ")),
                AnswerKind::OneOf(words::<DriverType>()),
            )?;
            if let Some(t) = DriverType::from_keyword(&kind) {
                d.attrs.push(Attr::new("type", AttrValue::DriverType(t)));
            }
            let distance = s.ask(
                format!(
                    "What distance does {name} create ({}, blank to skip)?",
                    words::<DistanceType>().join(", ")
                ),
                AnswerKind::OneOf(words::<DistanceType>()),
            )?;
            if let Some(t) = DistanceType::from_keyword(&distance) {
                d.attrs.push(Attr::new("distance_type", AttrValue::DistanceType(t)));
            }
            let size = s.ask(
                "How large is that distance (high/medium/low, blank to skip)?",
                AnswerKind::Level,
            )?;
            if let Some(l) = QualLevel::from_keyword(&size) {
                d.attrs.push(Attr::new("distance_size", AttrValue::Level(l)));
            }
            let drives = s.ask(
                format!(
                    "Which islands does {name} drive ({}, comma separated, blank for all)?",
                    island_names.join(", ")
                ),
                AnswerKind::SubsetOf(island_names.clone()),
            )?;
            let picked = split_list(&drives);
            let targets: Vec<Ident> = islands
                .iter()
                .zip(&island_names)
                .filter(|(_, n)| picked.is_empty() || picked.contains(n))
                .map(|(mi, _)| Ident::new(mi.id.name.clone()))
                .collect();
            d.attrs.push(Attr::new("drives", AttrValue::Refs(targets)));
            drivers.push(d);
        }
    }

    let mut team = None;
    let team_name = s.ask(
        format!("Which governance team coordinates {bo_name} (blank for none)?"),
        AnswerKind::Text,
    )?;
    if !team_name.is_empty() {
        let id = s.fresh_id(&team_name, "GovernanceTeam");
        let mut t = EntityDecl::new(DeclKind::Governance, &id);
        if team_name != id {
            t.attrs.push(Attr::new("name", AttrValue::Text(team_name.clone())));
        }
        let mut members = Vec::new();
        if !roles.is_empty() {
            let names: Vec<String> = roles.iter().map(|r| r.name.clone()).collect();
            let answer = s.ask(
                format!("Which roles are part of {team_name} ({}, comma separated, blank for none)?", names.join(", ")),
                AnswerKind::SubsetOf(names),
            )?;
            let picked = split_list(&answer);
            members = roles
                .iter()
                .filter(|r| picked.contains(&r.name))
                .map(|r| Ident::new(r.id.clone()))
                .collect();
        }
        t.attrs.push(Attr::new("members", AttrValue::Refs(members)));
        let mut link = GovernsDecl {
            bo: Ident::new(bo_id.clone()),
            attrs: Vec::new(),
            span: Default::default(),
        };
        s.text(&format!("How does {team_name} coordinate {bo_name} (e.g. meetings, tools)"), &mut link.attrs, "coordination_mechanism")?;
        s.level(&format!("How often does {team_name} coordinate {bo_name}"), &mut link.attrs, "frequency_of_coordination")?;
        t.governs.push(link);
        team = Some(t);
    }

    let mut ast = Ast::new(model_name);
    ast.elements.push(Element::Entity(bo));
    ast.elements.extend(islands.into_iter().map(Element::Entity));
    ast.elements.extend(role_decls.into_iter().map(Element::Entity));
    ast.elements.extend(drivers.into_iter().map(Element::Entity));
    ast.elements.extend(team.into_iter().map(Element::Entity));
    ast.elements.extend(usages.into_iter().map(Element::Usage));
    if let Some(role) = responsible {
        ast.elements.push(Element::Responsible(ResponsibleDecl {
            role: Ident::new(role),
            bo: Ident::new(bo_id),
            span: Default::default(),
        }));
    }
    Ok(ast)
}

/// `.bomi` text for a finished session.
pub fn render(ast: &Ast) -> String {
    format!("// Generated by `bomi init`.\n{}", bomi::syntax::print(ast))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::VecDeque;

    struct Scripted {
        answers: VecDeque<&'static str>,
        asked: Vec<String>,
        rejected: usize,
    }

    impl PromptIo for Scripted {
        fn ask(&mut self, prompt: &Prompt) -> Option<String> {
            self.asked.push(prompt.text.clone());
            self.answers.pop_front().map(str::to_owned)
        }

        fn reject(&mut self, _: &str) {
            self.rejected += 1;
        }
    }

    fn script(answers: &[&'static str]) -> Scripted {
        Scripted {
            answers: answers.iter().copied().collect(),
            asked: Vec::new(),
            rejected: 0,
        }
    }

    #[test]
    fn identifiers() {
        assert_eq!(to_identifier("User Story").as_deref(), Some("UserStory"));
        assert_eq!(to_identifier("product-owner").as_deref(), Some("ProductOwner"));
        assert_eq!(to_identifier("2nd line").as_deref(), Some("N2ndLine"));
        assert_eq!(to_identifier("  --  "), None);
    }

    #[test]
    fn answers_are_validated() {
        assert_eq!(validate(&AnswerKind::Level, "HIGH"), Ok("high".into()));
        assert!(validate(&AnswerKind::Level, "mostly").is_err());
        assert!(validate(&AnswerKind::Required, "  ").is_err());
        assert_eq!(validate(&AnswerKind::Crud, "cru"), Ok("CRU".into()));
        assert!(validate(&AnswerKind::Crud, "X").is_err());
        let types = AnswerKind::SubsetOf(words::<IslandType>());
        assert_eq!(validate(&types, "team, silo, Team"), Ok("Team, Silo".into()));
        assert!(validate(&types, "Tribe").is_err());
    }

    #[test]
    fn guiding_questions_come_first_in_order() {
        let mut io = script(&["User Story"]);
        assert_eq!(run_questionnaire(&mut io), Err(Aborted));
        io = script(&["Spec", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "", "Dev", "Team A"]);
        let _ = run_questionnaire(&mut io);
        let first = |needle: &str| io.asked.iter().position(|q| q.contains(needle)).unwrap();
        assert_eq!(first("Which BO would you like to focus on?"), 0);
        assert!(first("What roles interact with the BO") < first("Which island does Dev belong to"));
    }

    #[test]
    fn invalid_answers_are_asked_again() {
        let mut io = script(&["", "Spec", "", "", "", "", "bogus"]);
        let _ = run_questionnaire(&mut io);
        assert_eq!(io.rejected, 2);
        assert_eq!(io.asked[0], io.asked[1]);
    }
}
