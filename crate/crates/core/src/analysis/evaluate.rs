use std::collections::BTreeSet;

use crate::analysis::config::AnalysisConfig;
use crate::analysis::metrics::{complexity, governance_diversity};
use crate::analysis::rules::{
    bo_qual, builtin_rules, AttrInput, BoAttr, Check, FindingSeverity, GovernsAttr, Rule, SubjectKind,
    UsageAttr, INCOMPLETENESS_RULE_ID,
};
use crate::analysis::AnalysisError;
use crate::model::types::{BoRef, GovernsLink, LifecycleStage, QualAttr, UsageLink};
use crate::model::BomiModel;
use crate::span::SourceSpan;

/// One detected smell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub rule_id: &'static str,
    pub severity: FindingSeverity,
    pub subject: SubjectKind,
    pub subject_id: String,
    pub message: String,
    pub span: SourceSpan,
}

fn bo_attr_text(model: &BomiModel, bo: BoRef, attr: BoAttr) -> String {
    let b = model.bo(bo);
    match bo_qual(b, attr) {
        Some(q) => q.to_string(),
        None => b.lifecycle.to_string(),
    }
}

fn usage_attr(u: &UsageLink, attr: UsageAttr) -> &QualAttr {
    match attr {
        UsageAttr::Accessibility => &u.accessibility,
        UsageAttr::Stability => &u.stability,
        UsageAttr::Criticality => &u.criticality,
        UsageAttr::FitForPurpose => &u.fit_for_purpose,
    }
}

fn governs_attr(g: &GovernsLink, attr: GovernsAttr) -> &QualAttr {
    match attr {
        GovernsAttr::FrequencyOfCoordination => &g.frequency_of_coordination,
    }
}

fn bo_message(rule: &Rule, model: &BomiModel, bo: BoRef) -> String {
    let id = &model.bo(bo).id;
    let detail = match rule.id {
        "MS-01" => "no governance team governs it".to_owned(),
        "MS-02" => "no role is responsible for it".to_owned(),
        "MS-03" => {
            let users = model.usages_of(bo).count();
            format!("none of its {users} usage link(s) grants Update")
        }
        "AC-01" => {
            let teams: Vec<String> = model
                .governs_of(bo)
                .map(|g| model.team(g.team))
                .filter(|t| {
                    !t.members.is_empty()
                        && !t
                            .members
                            .iter()
                            .any(|&r| crate::analysis::rules::role_uses(model, r, bo))
                })
                .map(|t| format!("`{}`", t.id))
                .collect();
            format!("governed by {} whose members do not use it", teams.join(", "))
        }
        "AC-02" => {
            let low: Vec<String> = model
                .governs_of(bo)
                .filter(|g| g.frequency_of_coordination.level == crate::model::types::QualLevel::Low)
                .map(|g| format!("`{}` coordinates {}", model.team(g.team).id, g.frequency_of_coordination))
                .collect();
            format!(
                "frequency_of_change = {}; {}",
                model.bo(bo).frequency_of_change,
                low.join(", ")
            )
        }
        _ => rule
            .inputs
            .iter()
            .filter_map(|i| match i {
                AttrInput::Bo(a) => Some(format!("{} = {}", i.key(), bo_attr_text(model, bo, *a))),
                _ => None,
            })
            .collect::<Vec<_>>()
            .join(", "),
    };
    format!("{}: boundary object `{id}` ({detail})", rule.title)
}

fn usage_message(rule: &Rule, model: &BomiModel, u: &UsageLink) -> String {
    let detail = rule
        .inputs
        .iter()
        .filter_map(|i| match i {
            AttrInput::Usage(a) => Some(format!("{} = {}", i.key(), usage_attr(u, *a))),
            _ => None,
        })
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "{}: `{}` uses `{}` ({detail})",
        rule.title,
        model.user_id(u.user),
        model.bo(u.bo).id
    )
}

fn push(out: &mut Vec<Finding>, rule: &Rule, subject: SubjectKind, id: &str, message: String, span: &SourceSpan) {
    out.push(Finding {
        rule_id: rule.id,
        severity: rule.severity,
        subject,
        subject_id: id.to_owned(),
        message,
        span: span.clone(),
    });
}

fn incompleteness(model: &BomiModel, inputs: &BTreeSet<AttrInput>, out: &mut Vec<Finding>) {
    let finding = |subject, id: String, what: String, missing: Vec<&str>, span: &SourceSpan| Finding {
        rule_id: INCOMPLETENESS_RULE_ID,
        severity: FindingSeverity::Info,
        subject,
        subject_id: id,
        message: format!("{what} leaves rule inputs unknown: {}", missing.join(", ")),
        span: span.clone(),
    };
    for bo in model.bo_refs() {
        let b = model.bo(bo);
        let missing: Vec<&str> = inputs
            .iter()
            .filter(|i| match i {
                AttrInput::Bo(a) => match bo_qual(b, *a) {
                    Some(q) => !q.level.is_known(),
                    None => b.lifecycle == LifecycleStage::Unknown,
                },
                _ => false,
            })
            .map(|i| i.key())
            .collect();
        if !missing.is_empty() {
            out.push(finding(
                SubjectKind::BoundaryObject,
                b.id.clone(),
                format!("boundary object `{}`", b.id),
                missing,
                &b.span,
            ));
        }
    }
    for u in model.usages() {
        let missing: Vec<&str> = inputs
            .iter()
            .filter(|i| matches!(i, AttrInput::Usage(a) if !usage_attr(u, *a).level.is_known()))
            .map(|i| i.key())
            .collect();
        if !missing.is_empty() {
            let key = model.usage_key(u);
            out.push(finding(SubjectKind::Usage, key.clone(), format!("usage `{key}`"), missing, &u.span));
        }
    }
    for g in model.governs_links() {
        let missing: Vec<&str> = inputs
            .iter()
            .filter(|i| matches!(i, AttrInput::Governs(a) if !governs_attr(g, *a).level.is_known()))
            .map(|i| i.key())
            .collect();
        if !missing.is_empty() {
            let key = model.governs_key(g);
            out.push(finding(SubjectKind::GovernsLink, key.clone(), format!("governs link `{key}`"), missing, &g.span));
        }
    }
}

/// Runs every enabled rule over the model.
///
/// A rule fires for a subject only when its condition evaluates to `True`
/// under three-valued logic; Unknown inputs never fire a rule and are
/// reported once per element as an `IN-01` info finding instead.
/// Findings are ordered by subject position, then rule id.
pub fn evaluate(model: &BomiModel, config: &AnalysisConfig) -> Result<Vec<Finding>, AnalysisError> {
    config.validate()?;
    let mut out = Vec::new();
    let mut inputs = BTreeSet::new();

    for rule in builtin_rules().iter().filter(|r| config.is_enabled(r.id)) {
        inputs.extend(rule.inputs.iter().copied());
        match rule.check {
            Check::Bo(check) => {
                for bo in model.bo_refs() {
                    if check(model, bo).is_true() {
                        let b = model.bo(bo);
                        push(&mut out, rule, SubjectKind::BoundaryObject, &b.id, bo_message(rule, model, bo), &b.span);
                    }
                }
            }
            Check::Usage(check) => {
                for u in model.usages() {
                    if check(model, u).is_true() {
                        push(&mut out, rule, SubjectKind::Usage, &model.usage_key(u), usage_message(rule, model, u), &u.span);
                    }
                }
            }
            Check::Team(check) => {
                for t in model.team_refs() {
                    if check(model, t).is_true() {
                        let team = model.team(t);
                        let message = format!(
                            "{}: team `{}` has {} members drawn from {} island(s)",
                            rule.title,
                            team.id,
                            team.members.len(),
                            governance_diversity(model, t)
                        );
                        push(&mut out, rule, SubjectKind::GovernanceTeam, &team.id, message, &team.span);
                    }
                }
            }
            Check::Complexity => {
                let metrics = complexity(model);
                let limits = config.thresholds;
                if metrics.element_count > limits.max_elements {
                    let message = format!(
                        "{}: {} elements exceed the limit of {}",
                        rule.title, metrics.element_count, limits.max_elements
                    );
                    push(&mut out, rule, SubjectKind::Model, model.name(), message, model.span());
                }
                for b in model.boundary_objects() {
                    let fan_in = metrics.usage_fan_in[&b.id];
                    if fan_in > limits.max_usage_fan_in {
                        let message = format!(
                            "{}: boundary object `{}` has {fan_in} usage links (limit {})",
                            rule.title, b.id, limits.max_usage_fan_in
                        );
                        push(&mut out, rule, SubjectKind::BoundaryObject, &b.id, message, &b.span);
                    }
                }
            }
        }
    }

    if config.is_enabled(INCOMPLETENESS_RULE_ID) {
        incompleteness(model, &inputs, &mut out);
    }

    out.sort_by(|a, b| {
        (a.span.sort_key(), a.rule_id, &a.subject_id).cmp(&(b.span.sort_key(), b.rule_id, &b.subject_id))
    });
    Ok(out)
}
