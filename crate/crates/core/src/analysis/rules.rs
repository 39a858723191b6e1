//! The built-in smell catalog.
//!
//! Every rule fires when the smell is present. Catalog entries phrased as
//! health invariants ("the BO is governed") are stored negated.

use std::fmt;

use crate::analysis::logic::{level_matches, Truth};
use crate::model::types::{
    BoRef, BoundaryObject, Crud, LifecycleStage, QualAttr, QualLevel, RoleRef, TeamRef, UsageLink,
    UsageUser,
};
use crate::model::BomiModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FindingSeverity {
    Info,
    Warning,
}

impl FindingSeverity {
    pub fn as_str(self) -> &'static str {
        match self {
            FindingSeverity::Info => "info",
            FindingSeverity::Warning => "warning",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "info" => Some(FindingSeverity::Info),
            "warning" => Some(FindingSeverity::Warning),
            _ => None,
        }
    }
}

impl fmt::Display for FindingSeverity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a finding is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubjectKind {
    Model,
    BoundaryObject,
    Usage,
    GovernanceTeam,
    GovernsLink,
}

impl SubjectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SubjectKind::Model => "model",
            SubjectKind::BoundaryObject => "boundaryObject",
            SubjectKind::Usage => "usage",
            SubjectKind::GovernanceTeam => "governanceTeam",
            SubjectKind::GovernsLink => "governsLink",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoAttr {
    LevelOfDetail,
    FrequencyOfChange,
    Modularity,
    MaintenanceBurden,
    Lifecycle,
    InternalConsistency,
    ExternalConsistency,
    UpToDate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UsageAttr {
    Accessibility,
    Stability,
    Criticality,
    FitForPurpose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GovernsAttr {
    FrequencyOfCoordination,
}

/// An attribute a rule reads; Unknown values of these are reported as incompleteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AttrInput {
    Bo(BoAttr),
    Usage(UsageAttr),
    Governs(GovernsAttr),
}

impl AttrInput {
    /// DSL key of the attribute.
    pub fn key(self) -> &'static str {
        match self {
            AttrInput::Bo(BoAttr::LevelOfDetail) => "level_of_detail",
            AttrInput::Bo(BoAttr::FrequencyOfChange) => "frequency_of_change",
            AttrInput::Bo(BoAttr::Modularity) => "modularity",
            AttrInput::Bo(BoAttr::MaintenanceBurden) => "maintainability",
            AttrInput::Bo(BoAttr::Lifecycle) => "lifecycle",
            AttrInput::Bo(BoAttr::InternalConsistency) => "internal_consistency",
            AttrInput::Bo(BoAttr::ExternalConsistency) => "external_consistency",
            AttrInput::Bo(BoAttr::UpToDate) => "up_to_date",
            AttrInput::Usage(UsageAttr::Accessibility) => "accessibility",
            AttrInput::Usage(UsageAttr::Stability) => "stability",
            AttrInput::Usage(UsageAttr::Criticality) => "criticality",
            AttrInput::Usage(UsageAttr::FitForPurpose) => "fit_for_purpose",
            AttrInput::Governs(GovernsAttr::FrequencyOfCoordination) => "frequency_of_coordination",
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Check {
    Bo(fn(&BomiModel, BoRef) -> Truth),
    Usage(fn(&BomiModel, &UsageLink) -> Truth),
    Team(fn(&BomiModel, TeamRef) -> Truth),
    /// Threshold checks against the configured complexity limits.
    Complexity,
}

#[derive(Clone)]
pub struct Rule {
    pub id: &'static str,
    pub name: &'static str,
    pub title: &'static str,
    pub severity: FindingSeverity,
    /// Smell family: OCL catalog, attribute smells, or model-level checks.
    pub origin: &'static str,
    pub subject: SubjectKind,
    pub inputs: &'static [AttrInput],
    pub(crate) check: Check,
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rule")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("severity", &self.severity)
            .finish()
    }
}

/// Id of the informational finding that lists Unknown rule inputs.
pub const INCOMPLETENESS_RULE_ID: &str = "IN-01";

/// The qualitative attribute behind `attr`; `None` for the lifecycle enumeration.
pub(crate) fn bo_qual(b: &BoundaryObject, attr: BoAttr) -> Option<&QualAttr> {
    Some(match attr {
        BoAttr::LevelOfDetail => &b.level_of_detail,
        BoAttr::FrequencyOfChange => &b.frequency_of_change,
        BoAttr::Modularity => &b.modularity,
        BoAttr::MaintenanceBurden => &b.maintenance_burden,
        BoAttr::InternalConsistency => &b.internal_consistency,
        BoAttr::ExternalConsistency => &b.external_consistency,
        BoAttr::UpToDate => &b.up_to_date,
        BoAttr::Lifecycle => return None,
    })
}

fn bo_level(model: &BomiModel, bo: BoRef, attr: BoAttr, target: QualLevel) -> Truth {
    let a = bo_qual(model.bo(bo), attr).expect("qualitative BO attribute");
    level_matches(a, target)
}

fn lifecycle_in(model: &BomiModel, bo: BoRef, stages: &[LifecycleStage]) -> Truth {
    match model.bo(bo).lifecycle {
        LifecycleStage::Unknown => Truth::Unknown,
        stage => Truth::from(stages.contains(&stage)),
    }
}

/// Whether `role` uses `bo`, directly or through a usage link of the island it belongs to.
pub(crate) fn role_uses(model: &BomiModel, role: RoleRef, bo: BoRef) -> bool {
    let island = model.role(role).part_of;
    model.usages_of(bo).any(|u| match u.user {
        UsageUser::Role(r) => r == role,
        UsageUser::Island(i) => Some(i) == island,
    })
}

use AttrInput::{Bo as B, Governs as G, Usage as U};

static CATALOG: &[Rule] = &[
    Rule {
        id: "BO-01",
        name: "LowModularity",
        title: "Boundary object has low modularity",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within BO: Low modularity",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::Modularity)],
        check: Check::Bo(|m, b| bo_level(m, b, BoAttr::Modularity, QualLevel::Low)),
    },
    Rule {
        id: "BO-02",
        name: "InternalInconsistency",
        title: "Boundary object is not internally consistent",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within BO: Not internally consistent",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::InternalConsistency)],
        check: Check::Bo(|m, b| bo_level(m, b, BoAttr::InternalConsistency, QualLevel::Low)),
    },
    Rule {
        id: "BO-03",
        name: "ExternalInconsistency",
        title: "Boundary object is not externally consistent",
        severity: FindingSeverity::Warning,
        origin: "within-attribute smells: not externally consistent",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::ExternalConsistency)],
        check: Check::Bo(|m, b| bo_level(m, b, BoAttr::ExternalConsistency, QualLevel::Low)),
    },
    Rule {
        id: "BO-04",
        name: "HighMaintenanceBurden",
        title: "Boundary object is costly to maintain",
        severity: FindingSeverity::Warning,
        origin: "within-attribute smells: high maintainability",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::MaintenanceBurden)],
        check: Check::Bo(|m, b| bo_level(m, b, BoAttr::MaintenanceBurden, QualLevel::High)),
    },
    Rule {
        id: "BO-05",
        name: "NotUpToDate",
        title: "Boundary object is not up to date",
        severity: FindingSeverity::Warning,
        origin: "within-attribute smells: not up to date",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::UpToDate)],
        check: Check::Bo(|m, b| bo_level(m, b, BoAttr::UpToDate, QualLevel::Low)),
    },
    Rule {
        id: "BO-06",
        name: "DetailedHighChange",
        title: "Highly detailed boundary object changes frequently",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within BO: High level of detail and frequent change",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::LevelOfDetail), B(BoAttr::FrequencyOfChange)],
        check: Check::Bo(|m, b| {
            bo_level(m, b, BoAttr::LevelOfDetail, QualLevel::High)
                & bo_level(m, b, BoAttr::FrequencyOfChange, QualLevel::High)
        }),
    },
    Rule {
        id: "BO-07",
        name: "LateHighChanges",
        title: "Boundary object late in its lifecycle changes frequently",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within BO: Later lifecycle and frequent change",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::Lifecycle), B(BoAttr::FrequencyOfChange)],
        check: Check::Bo(|m, b| {
            lifecycle_in(m, b, &[LifecycleStage::Deprecate, LifecycleStage::Retire])
                & bo_level(m, b, BoAttr::FrequencyOfChange, QualLevel::High)
        }),
    },
    Rule {
        id: "BO-08",
        name: "EarlyLowChange",
        title: "Boundary object in planning rarely changes",
        severity: FindingSeverity::Warning,
        origin: "between-attribute smells: early lifecycle stage (planning) yet very infrequently changed",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::Lifecycle), B(BoAttr::FrequencyOfChange)],
        check: Check::Bo(|m, b| {
            lifecycle_in(m, b, &[LifecycleStage::Planning])
                & bo_level(m, b, BoAttr::FrequencyOfChange, QualLevel::Low)
        }),
    },
    Rule {
        id: "US-01",
        name: "NotFitForPurpose",
        title: "Boundary object is not fit for purpose for this user",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within Usage: Not fit for purpose",
        subject: SubjectKind::Usage,
        inputs: &[U(UsageAttr::FitForPurpose)],
        check: Check::Usage(|_, u| level_matches(&u.fit_for_purpose, QualLevel::Low)),
    },
    Rule {
        id: "US-02",
        name: "CriticalUnstable",
        title: "Critical usage of an unstable boundary object",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, within Usage: High criticality and low stability",
        subject: SubjectKind::Usage,
        inputs: &[U(UsageAttr::Criticality), U(UsageAttr::Stability)],
        check: Check::Usage(|_, u| {
            level_matches(&u.criticality, QualLevel::High) & level_matches(&u.stability, QualLevel::Low)
        }),
    },
    Rule {
        id: "US-03",
        name: "CriticalInaccessible",
        title: "Critical usage of a hard-to-access boundary object",
        severity: FindingSeverity::Warning,
        origin: "usage smells: high criticality with low accessibility",
        subject: SubjectKind::Usage,
        inputs: &[U(UsageAttr::Criticality), U(UsageAttr::Accessibility)],
        check: Check::Usage(|_, u| {
            level_matches(&u.criticality, QualLevel::High)
                & level_matches(&u.accessibility, QualLevel::Low)
        }),
    },
    Rule {
        id: "MS-01",
        name: "NoGovernanceTeam",
        title: "Boundary object has no governance team",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, missing elements: No governance team (negated invariant Governed)",
        subject: SubjectKind::BoundaryObject,
        inputs: &[],
        check: Check::Bo(|m, b| Truth::from(m.governs_of(b).next().is_none())),
    },
    Rule {
        id: "MS-02",
        name: "NoResponsibleRole",
        title: "No one is responsible for the boundary object",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, missing elements: No one responsible for BO (negated invariant Responsible)",
        subject: SubjectKind::BoundaryObject,
        inputs: &[],
        check: Check::Bo(|m, b| Truth::from(m.responsibilities_of(b).next().is_none())),
    },
    Rule {
        id: "MS-03",
        name: "NoUpdater",
        title: "No one can update the boundary object",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, missing elements: No one can update BO (negated invariant Updated)",
        subject: SubjectKind::BoundaryObject,
        inputs: &[],
        check: Check::Bo(|m, b| Truth::from(!m.usages_of(b).any(|u| u.can(Crud::Update)))),
    },
    Rule {
        id: "AC-01",
        name: "GovernorsDontUse",
        title: "A governing team has no member that uses the boundary object",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, across elements: Governing roles should use BO (negated invariant GovernsUses)",
        subject: SubjectKind::BoundaryObject,
        inputs: &[],
        check: Check::Bo(|m, b| {
            Truth::from(m.governs_of(b).any(|g| {
                let members = &m.team(g.team).members;
                !members.is_empty() && !members.iter().any(|&r| role_uses(m, r, b))
            }))
        }),
    },
    Rule {
        id: "AC-02",
        name: "HighChangeLowCoordination",
        title: "Frequently changing boundary object is rarely coordinated",
        severity: FindingSeverity::Warning,
        origin: "OCL catalog, across elements: High frequency of change but low frequency of coord",
        subject: SubjectKind::BoundaryObject,
        inputs: &[B(BoAttr::FrequencyOfChange), G(GovernsAttr::FrequencyOfCoordination)],
        check: Check::Bo(|m, b| {
            bo_level(m, b, BoAttr::FrequencyOfChange, QualLevel::High)
                & Truth::any(
                    m.governs_of(b)
                        .map(|g| level_matches(&g.frequency_of_coordination, QualLevel::Low)),
                )
        }),
    },
    Rule {
        id: "WS-01",
        name: "GovernanceHomogeneity",
        title: "Governance team members all come from one island",
        severity: FindingSeverity::Warning,
        origin: "model-level check: governance team drawn from a single island",
        subject: SubjectKind::GovernanceTeam,
        inputs: &[],
        check: Check::Team(|m, t| {
            Truth::from(
                m.team(t).members.len() >= 2
                    && crate::analysis::metrics::governance_diversity(m, t) == 1,
            )
        }),
    },
    Rule {
        id: "WS-02",
        name: "ExcessiveComplexity",
        title: "Model is too large or a boundary object has too many users",
        severity: FindingSeverity::Info,
        origin: "model-level check: size and coupling over configured limits",
        subject: SubjectKind::Model,
        inputs: &[],
        check: Check::Complexity,
    },
];

/// The built-in catalog in its stable order.
pub fn builtin_rules() -> &'static [Rule] {
    CATALOG
}

pub fn find_rule(id: &str) -> Option<&'static Rule> {
    CATALOG.iter().find(|r| r.id == id)
}

/// Every id accepted in an analysis configuration.
pub fn known_rule_ids() -> impl Iterator<Item = &'static str> {
    CATALOG
        .iter()
        .map(|r| r.id)
        .chain(std::iter::once(INCOMPLETENESS_RULE_ID))
}
