//! Kleene three-valued logic used to evaluate rules over partially filled models.

use std::ops::{BitAnd, BitOr, Not};

use crate::model::types::{QualAttr, QualLevel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    /// Existential quantifier: Kleene disjunction over the items.
    pub fn any<I: IntoIterator<Item = Truth>>(items: I) -> Truth {
        items.into_iter().fold(Truth::False, |acc, t| acc | t)
    }

    /// Universal quantifier: Kleene conjunction over the items.
    pub fn all<I: IntoIterator<Item = Truth>>(items: I) -> Truth {
        items.into_iter().fold(Truth::True, |acc, t| acc & t)
    }
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl Not for Truth {
    type Output = Truth;

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

impl BitAnd for Truth {
    type Output = Truth;

    fn bitand(self, rhs: Truth) -> Truth {
        match (self, rhs) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }
}

impl BitOr for Truth {
    type Output = Truth;

    fn bitor(self, rhs: Truth) -> Truth {
        match (self, rhs) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }
}

/// Compares a qualitative attribute with a known level.
///
/// # Panics
///
/// If `target` is [`QualLevel::Unknown`]; "is unknown" is not a comparison.
pub fn level_matches(attr: &QualAttr, target: QualLevel) -> Truth {
    assert!(target.is_known(), "level_matches target must be a known level");
    if attr.level.is_known() {
        Truth::from(attr.level == target)
    } else {
        Truth::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: [Truth; 3] = [Truth::True, Truth::False, Truth::Unknown];

    #[test]
    fn level_matches_cases() {
        assert_eq!(level_matches(&QualAttr::new(QualLevel::Low), QualLevel::Low), Truth::True);
        assert_eq!(level_matches(&QualAttr::new(QualLevel::High), QualLevel::Low), Truth::False);
        assert_eq!(level_matches(&QualAttr::default(), QualLevel::Low), Truth::Unknown);
        // notes never change the outcome
        assert_eq!(
            level_matches(&QualAttr::with_note(QualLevel::Unknown, "low-ish"), QualLevel::Low),
            Truth::Unknown
        );
    }

    #[test]
    #[should_panic]
    fn unknown_target_is_a_precondition_violation() {
        level_matches(&QualAttr::default(), QualLevel::Unknown);
    }

    #[test]
    fn kleene_conjunction() {
        assert_eq!(Truth::Unknown & Truth::True, Truth::Unknown);
        assert_eq!(Truth::Unknown & Truth::False, Truth::False);
        assert_eq!(Truth::False & Truth::Unknown, Truth::False);
    }

    #[test]
    fn kleene_laws() {
        for a in ALL {
            assert_eq!(!!a, a);
            for b in ALL {
                assert_eq!(a & b, b & a);
                assert_eq!(a | b, b | a);
                assert_eq!(!(a & b), !a | !b);
            }
        }
    }

    #[test]
    fn quantifiers_over_empty() {
        assert_eq!(Truth::any([]), Truth::False);
        assert_eq!(Truth::all([]), Truth::True);
        assert_eq!(Truth::any([Truth::False, Truth::Unknown]), Truth::Unknown);
    }
}
