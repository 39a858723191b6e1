//! Attribute keys accepted in each block and the shape of their values.

use crate::syntax::ast::DeclKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    /// `high|medium|low|unknown` with an optional `("note")`.
    Qual,
    /// Bare level without a note.
    Level,
    Text,
    Bool,
    SuperType,
    Lifecycle,
    DriverType,
    DistanceType,
    IslandTypes,
    Crud,
    Ref,
    Refs,
}

/// Block kinds that carry attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Decl(DeclKind),
    Usage,
    Governs,
}

const BO_KEYS: &[(&str, ValueKind)] = &[
    ("supertype", ValueKind::SuperType),
    ("subtype", ValueKind::Text),
    ("purpose", ValueKind::Text),
    ("level_of_detail", ValueKind::Qual),
    ("frequency_of_change", ValueKind::Qual),
    ("modularity", ValueKind::Qual),
    ("maintainability", ValueKind::Qual),
    ("prescriptive", ValueKind::Bool),
    ("lifecycle", ValueKind::Lifecycle),
    ("representation_format", ValueKind::Text),
    ("internal_consistency", ValueKind::Qual),
    ("external_consistency", ValueKind::Qual),
    ("versioning", ValueKind::Text),
    ("connectedness", ValueKind::Qual),
    ("up_to_date", ValueKind::Qual),
];

const MI_KEYS: &[(&str, ValueKind)] = &[
    ("types", ValueKind::IslandTypes),
    ("description", ValueKind::Text),
];

const ROLE_KEYS: &[(&str, ValueKind)] = &[
    ("name", ValueKind::Text),
    ("part_of", ValueKind::Ref),
];

const DRIVER_KEYS: &[(&str, ValueKind)] = &[
    ("type", ValueKind::DriverType),
    ("subtype", ValueKind::Text),
    ("distance_type", ValueKind::DistanceType),
    ("distance_size", ValueKind::Level),
    ("drives", ValueKind::Refs),
];

const GOVERNANCE_KEYS: &[(&str, ValueKind)] = &[
    ("name", ValueKind::Text),
    ("members", ValueKind::Refs),
];

const USAGE_KEYS: &[(&str, ValueKind)] = &[
    ("accessibility", ValueKind::Qual),
    ("stability", ValueKind::Qual),
    ("criticality", ValueKind::Qual),
    ("fit_for_purpose", ValueKind::Qual),
    ("crud", ValueKind::Crud),
];

const GOVERNS_KEYS: &[(&str, ValueKind)] = &[
    ("coordination_mechanism", ValueKind::Text),
    ("frequency_of_coordination", ValueKind::Qual),
];

pub fn keys(block: BlockKind) -> &'static [(&'static str, ValueKind)] {
    match block {
        BlockKind::Decl(DeclKind::Bo) => BO_KEYS,
        BlockKind::Decl(DeclKind::Mi) => MI_KEYS,
        BlockKind::Decl(DeclKind::Role) => ROLE_KEYS,
        BlockKind::Decl(DeclKind::Driver) => DRIVER_KEYS,
        BlockKind::Decl(DeclKind::Governance) => GOVERNANCE_KEYS,
        BlockKind::Usage => USAGE_KEYS,
        BlockKind::Governs => GOVERNS_KEYS,
    }
}

/// Case-insensitive lookup; returns the canonical key.
pub fn lookup(block: BlockKind, key: &str) -> Option<(&'static str, ValueKind)> {
    keys(block)
        .iter()
        .copied()
        .find(|(k, _)| k.eq_ignore_ascii_case(key))
}

/// Closest candidate by edit distance, if reasonably close.
pub fn nearest<'a>(word: &str, candidates: impl IntoIterator<Item = &'a str>) -> Option<&'a str> {
    let word = word.to_ascii_lowercase();
    candidates
        .into_iter()
        .map(|c| (strsim::levenshtein(&word, &c.to_ascii_lowercase()), c))
        .filter(|(d, c)| *d <= (c.len() / 3).max(2))
        .min_by_key(|(d, _)| *d)
        .map(|(_, c)| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_ignores_case() {
        assert_eq!(
            lookup(BlockKind::Decl(DeclKind::Bo), "Modularity"),
            Some(("modularity", ValueKind::Qual))
        );
        assert_eq!(lookup(BlockKind::Usage, "modularity"), None);
    }

    #[test]
    fn nearest_suggests_typos() {
        let keys = keys(BlockKind::Decl(DeclKind::Bo)).iter().map(|(k, _)| *k);
        assert_eq!(nearest("modularty", keys), Some("modularity"));
        let keys = keys_of_bo();
        assert_eq!(nearest("zzzzzzzz", keys), None);
    }

    fn keys_of_bo() -> impl Iterator<Item = &'static str> {
        keys(BlockKind::Decl(DeclKind::Bo)).iter().map(|(k, _)| *k)
    }
}
