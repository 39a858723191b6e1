//! Element and attribute types of the BOMI metamodel.

use std::fmt;

use crate::span::SourceSpan;

/// Closed enumerations that have a single canonical spelling in both the DSL
/// and the JSON interchange format. Parsing is case-insensitive.
pub trait Keyword: Sized + Copy + 'static {
    const ALL: &'static [Self];

    fn name(self) -> &'static str;

    fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s))
    }

    /// `A|B|C`, used in diagnostics hints.
    fn choices() -> String {
        Self::ALL
            .iter()
            .map(|v| v.name())
            .collect::<Vec<_>>()
            .join("|")
    }
}

macro_rules! keyword_enum {
    ($(#[$meta:meta])* $name:ident { $($(#[$vmeta:meta])* $variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name {
            $($(#[$vmeta])* $variant),+
        }

        impl Keyword for $name {
            const ALL: &'static [Self] = &[$($name::$variant),+];

            fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

keyword_enum!(
    /// Qualitative High/Medium/Low scale. `Unknown` stands for an attribute
    /// that was left blank.
    #[derive(Default)]
    QualLevel {
        High => "High",
        Medium => "Medium",
        Low => "Low",
        #[default]
        Unknown => "Unknown",
    }
);

impl QualLevel {
    pub fn is_known(self) -> bool {
        self != QualLevel::Unknown
    }
}

keyword_enum!(
    #[derive(Default)]
    LifecycleStage {
        Planning => "Planning",
        Operation => "Operation",
        Deprecate => "Deprecate",
        Retire => "Retire",
        #[default]
        Unknown => "Unknown",
    }
);

keyword_enum!(IslandType {
    Team => "Team",
    Silo => "Silo",
    Department => "Department",
    Organization => "Organization",
});

keyword_enum!(Crud {
    Create => "Create",
    Read => "Read",
    Update => "Update",
    Delete => "Delete",
});

impl Crud {
    pub fn letter(self) -> char {
        self.name().as_bytes()[0] as char
    }

    pub fn from_letter(c: char) -> Option<Crud> {
        Crud::ALL
            .iter()
            .copied()
            .find(|v| v.letter().eq_ignore_ascii_case(&c))
    }
}

keyword_enum!(DriverType {
    Technology => "Technology",
    Process => "Process",
    Organization => "Organization",
});

keyword_enum!(DistanceType {
    Culture => "Culture",
    Geography => "Geography",
    Organization => "Organization",
});

keyword_enum!(
    /// The closed part of the BO super type enumeration.
    KnownSuperType {
        Technology => "Technology",
        Task => "Task",
        Planning => "Planning",
    }
);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SuperType {
    Known(KnownSuperType),
    /// Any super type outside the closed set; the label must be non-empty.
    Other(String),
}

impl fmt::Display for SuperType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperType::Known(k) => f.write_str(k.name()),
            SuperType::Other(label) => write!(f, "Other({label})"),
        }
    }
}

/// A qualitative value plus an optional explanatory note. The note is only
/// ever reported, never evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QualAttr {
    pub level: QualLevel,
    pub note: Option<String>,
}

impl QualAttr {
    pub fn new(level: QualLevel) -> Self {
        Self { level, note: None }
    }

    pub fn with_note(level: QualLevel, note: impl Into<String>) -> Self {
        Self {
            level,
            note: Some(note.into()),
        }
    }

    pub fn is_unset(&self) -> bool {
        self.level == QualLevel::Unknown && self.note.is_none()
    }
}

impl fmt::Display for QualAttr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.note {
            Some(note) => write!(f, "{} ({note:?})", self.level),
            None => write!(f, "{}", self.level),
        }
    }
}

macro_rules! index_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub(crate) usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }
    };
}

index_type!(
    /// Checked reference to a boundary object of the owning model.
    BoRef
);
index_type!(IslandRef);
index_type!(RoleRef);
index_type!(TeamRef);

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryObject {
    pub id: String,
    pub super_type: Option<SuperType>,
    pub sub_type: Option<String>,
    pub purpose: Option<String>,
    pub level_of_detail: QualAttr,
    pub frequency_of_change: QualAttr,
    pub modularity: QualAttr,
    /// Maintenance effort; High is the undesirable end. Written `maintainability` in sources.
    pub maintenance_burden: QualAttr,
    pub prescriptive: Option<bool>,
    pub lifecycle: LifecycleStage,
    pub representation_format: Option<String>,
    pub internal_consistency: QualAttr,
    pub external_consistency: QualAttr,
    pub versioning: Option<String>,
    pub connectedness: QualAttr,
    pub up_to_date: QualAttr,
    pub span: SourceSpan,
}

impl BoundaryObject {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            super_type: None,
            sub_type: None,
            purpose: None,
            level_of_detail: QualAttr::default(),
            frequency_of_change: QualAttr::default(),
            modularity: QualAttr::default(),
            maintenance_burden: QualAttr::default(),
            prescriptive: None,
            lifecycle: LifecycleStage::Unknown,
            representation_format: None,
            internal_consistency: QualAttr::default(),
            external_consistency: QualAttr::default(),
            versioning: None,
            connectedness: QualAttr::default(),
            up_to_date: QualAttr::default(),
            span: SourceSpan::synthetic(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodologicalIsland {
    pub id: String,
    /// Kept sorted and duplicate-free.
    pub types: Vec<IslandType>,
    pub description: Option<String>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Role {
    pub id: String,
    pub name: Option<String>,
    pub part_of: Option<IslandRef>,
    /// Derived from governance team membership lists.
    pub member_of: Vec<TeamRef>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UsageUser {
    Role(RoleRef),
    Island(IslandRef),
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageLink {
    pub user: UsageUser,
    pub bo: BoRef,
    pub accessibility: QualAttr,
    pub stability: QualAttr,
    pub criticality: QualAttr,
    pub fit_for_purpose: QualAttr,
    /// Sorted, duplicate-free; empty means rights were not stated.
    pub crud: Vec<Crud>,
    pub span: SourceSpan,
}

impl UsageLink {
    pub fn can(&self, right: Crud) -> bool {
        self.crud.contains(&right)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Responsibility {
    pub role: RoleRef,
    pub bo: BoRef,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Driver {
    pub id: String,
    pub driver_type: Option<DriverType>,
    pub sub_type: Option<String>,
    pub distance_type: Option<DistanceType>,
    pub distance_size: QualLevel,
    pub drives: Vec<IslandRef>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GovernanceTeam {
    pub id: String,
    pub name: Option<String>,
    pub members: Vec<RoleRef>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GovernsLink {
    pub team: TeamRef,
    pub bo: BoRef,
    pub coordination_mechanism: Option<String>,
    pub frequency_of_coordination: QualAttr,
    pub span: SourceSpan,
}

/// Kinds of named elements, used in resolution errors and findings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKind {
    BoundaryObject,
    Island,
    Role,
    Driver,
    GovernanceTeam,
}

impl ElementKind {
    pub fn keyword(self) -> &'static str {
        match self {
            ElementKind::BoundaryObject => "bo",
            ElementKind::Island => "mi",
            ElementKind::Role => "role",
            ElementKind::Driver => "driver",
            ElementKind::GovernanceTeam => "governance",
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementKind::BoundaryObject => "boundary object",
            ElementKind::Island => "methodological island",
            ElementKind::Role => "role",
            ElementKind::Driver => "driver",
            ElementKind::GovernanceTeam => "governance team",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keywords_are_case_insensitive() {
        assert_eq!(QualLevel::from_keyword("hIgH"), Some(QualLevel::High));
        assert_eq!(LifecycleStage::from_keyword("retire"), Some(LifecycleStage::Retire));
        assert_eq!(LifecycleStage::from_keyword("Shipped"), None);
    }

    #[test]
    fn choices_list_all_values() {
        assert_eq!(IslandType::choices(), "Team|Silo|Department|Organization");
    }

    #[test]
    fn crud_letters() {
        assert_eq!(Crud::from_letter('u'), Some(Crud::Update));
        assert_eq!(Crud::from_letter('x'), None);
        assert_eq!(Crud::Delete.letter(), 'D');
    }

    #[test]
    fn unknown_is_default_level() {
        assert_eq!(QualAttr::default().level, QualLevel::Unknown);
        assert!(QualAttr::default().is_unset());
        assert!(!QualAttr::with_note(QualLevel::Unknown, "tbd").is_unset());
    }
}
