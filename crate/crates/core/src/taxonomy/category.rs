use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// The ten basic requirement categories. Closed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Behavior,
    Component,
    Constraint,
    Goal,
    Lack,
    Limit,
    MetaRequirement,
    Product,
    Role,
    Task,
}

impl Category {
    pub const ALL: [Category; 10] = [
        Category::Behavior,
        Category::Component,
        Category::Constraint,
        Category::Goal,
        Category::Lack,
        Category::Limit,
        Category::MetaRequirement,
        Category::Product,
        Category::Role,
        Category::Task,
    ];

    /// Keyword used in `.srs` files.
    pub fn keyword(self) -> &'static str {
        match self {
            Category::Behavior => "behavior",
            Category::Component => "component",
            Category::Constraint => "constraint",
            Category::Goal => "goal",
            Category::Lack => "lack",
            Category::Limit => "limit",
            Category::MetaRequirement => "meta",
            Category::Product => "product",
            Category::Role => "role",
            Category::Task => "task",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Category::Behavior => "Behavior",
            Category::Component => "Component",
            Category::Constraint => "Constraint",
            Category::Goal => "Goal",
            Category::Lack => "Lack",
            Category::Limit => "Limit",
            Category::MetaRequirement => "Meta-requirement",
            Category::Product => "Product",
            Category::Role => "Role",
            Category::Task => "Task",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Category> {
        Category::ALL.into_iter().find(|c| c.keyword() == word)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Category {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.keyword())
    }
}

/// Nature of a constraint: what the environment is known to do, assumed to
/// do, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintNature {
    Assumption,
    Obligation,
    Invariant,
}

/// Where a constraint comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintSource {
    BusinessRule,
    EngineeringDecision,
    PhysicalRule,
}

/// Any label that may appear in the subcategory slot(s) of a classification.
///
/// The first six are ordinary subcategories with a single compatible parent
/// category. `Nature` and `Source` are the two orthogonal constraint-only
/// classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subcategory {
    Actor,
    Justification,
    Obstacle,
    Responsibility,
    Functional,
    NonFunctional,
    Nature(ConstraintNature),
    Source(ConstraintSource),
}

impl Subcategory {
    pub const ALL: [Subcategory; 12] = [
        Subcategory::Actor,
        Subcategory::Justification,
        Subcategory::Obstacle,
        Subcategory::Responsibility,
        Subcategory::Functional,
        Subcategory::NonFunctional,
        Subcategory::Nature(ConstraintNature::Assumption),
        Subcategory::Nature(ConstraintNature::Obligation),
        Subcategory::Nature(ConstraintNature::Invariant),
        Subcategory::Source(ConstraintSource::BusinessRule),
        Subcategory::Source(ConstraintSource::EngineeringDecision),
        Subcategory::Source(ConstraintSource::PhysicalRule),
    ];

    /// The single basic category this label may refine.
    pub fn parent(self) -> Category {
        match self {
            Subcategory::Actor => Category::Component,
            Subcategory::Justification => Category::MetaRequirement,
            Subcategory::Obstacle => Category::Goal,
            Subcategory::Responsibility => Category::Role,
            Subcategory::Functional | Subcategory::NonFunctional => Category::Behavior,
            Subcategory::Nature(_) | Subcategory::Source(_) => Category::Constraint,
        }
    }

    pub fn slot(self) -> Slot {
        match self {
            Subcategory::Nature(_) => Slot::Nature,
            Subcategory::Source(_) => Slot::Source,
            _ => Slot::Subcategory,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Subcategory::Actor => "actor",
            Subcategory::Justification => "justification",
            Subcategory::Obstacle => "obstacle",
            Subcategory::Responsibility => "responsibility",
            Subcategory::Functional => "functional",
            Subcategory::NonFunctional => "non-functional",
            Subcategory::Nature(ConstraintNature::Assumption) => "assumption",
            Subcategory::Nature(ConstraintNature::Obligation) => "obligation",
            Subcategory::Nature(ConstraintNature::Invariant) => "invariant",
            Subcategory::Source(ConstraintSource::BusinessRule) => "business-rule",
            Subcategory::Source(ConstraintSource::EngineeringDecision) => "engineering-decision",
            Subcategory::Source(ConstraintSource::PhysicalRule) => "physical-rule",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Subcategory::Actor => "Actor",
            Subcategory::Justification => "Justification",
            Subcategory::Obstacle => "Obstacle",
            Subcategory::Responsibility => "Responsibility",
            Subcategory::Functional => "Functional",
            Subcategory::NonFunctional => "Non-functional",
            Subcategory::Nature(ConstraintNature::Assumption) => "Assumption",
            Subcategory::Nature(ConstraintNature::Obligation) => "Obligation",
            Subcategory::Nature(ConstraintNature::Invariant) => "Invariant",
            Subcategory::Source(ConstraintSource::BusinessRule) => "Business rule",
            Subcategory::Source(ConstraintSource::EngineeringDecision) => "Engineering decision",
            Subcategory::Source(ConstraintSource::PhysicalRule) => "Physical rule",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Subcategory> {
        Subcategory::ALL.into_iter().find(|s| s.keyword() == word)
    }
}

impl fmt::Display for Subcategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Subcategory {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.keyword())
    }
}

/// The three places a label can go in a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Subcategory,
    Nature,
    Source,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Subcategory => "subcategory",
            Slot::Nature => "nature",
            Slot::Source => "source",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown category `{0}`")]
pub struct UnknownCategory(pub String);

impl FromStr for Category {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::from_keyword(s).ok_or_else(|| UnknownCategory(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_categories_with_distinct_keywords() {
        let mut words: Vec<_> = Category::ALL.iter().map(|c| c.keyword()).collect();
        words.sort();
        words.dedup();
        assert_eq!(words.len(), 10);
        for c in Category::ALL {
            assert_eq!(Category::from_keyword(c.keyword()), Some(c));
        }
    }

    #[test]
    fn subcategory_parent_table() {
        let expected = [
            ("actor", Category::Component),
            ("justification", Category::MetaRequirement),
            ("obstacle", Category::Goal),
            ("responsibility", Category::Role),
            ("functional", Category::Behavior),
            ("non-functional", Category::Behavior),
            ("assumption", Category::Constraint),
            ("obligation", Category::Constraint),
            ("invariant", Category::Constraint),
            ("business-rule", Category::Constraint),
            ("engineering-decision", Category::Constraint),
            ("physical-rule", Category::Constraint),
        ];
        assert_eq!(expected.len(), Subcategory::ALL.len());
        for (word, parent) in expected {
            let sub = Subcategory::from_keyword(word).expect(word);
            assert_eq!(sub.parent(), parent, "{word}");
            assert_eq!(sub.keyword(), word);
        }
    }

    #[test]
    fn subcategory_order_puts_nature_before_source() {
        let nature = Subcategory::Nature(ConstraintNature::Invariant);
        let source = Subcategory::Source(ConstraintSource::BusinessRule);
        assert!(Subcategory::NonFunctional < nature);
        assert!(nature < source);
    }
}
