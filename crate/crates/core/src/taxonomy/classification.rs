use std::fmt;

use super::category::{Category, ConstraintNature, ConstraintSource, Slot, Subcategory};

/// A basic category plus whatever subcategory labels were written for it.
///
/// Labels are kept in canonical order (ordinary subcategory, then nature,
/// then source). The label list may hold combinations the taxonomy forbids;
/// [`validate_classification`] reports them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Classification {
    category: Category,
    labels: Vec<Subcategory>,
}

impl Classification {
    pub fn new(category: Category, labels: impl IntoIterator<Item = Subcategory>) -> Self {
        let mut labels: Vec<Subcategory> = labels.into_iter().collect();
        labels.sort();
        Classification { category, labels }
    }

    pub fn bare(category: Category) -> Self {
        Classification {
            category,
            labels: Vec::new(),
        }
    }

    pub fn constraint(nature: Option<ConstraintNature>, source: Option<ConstraintSource>) -> Self {
        Classification::new(
            Category::Constraint,
            nature
                .map(Subcategory::Nature)
                .into_iter()
                .chain(source.map(Subcategory::Source)),
        )
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn labels(&self) -> &[Subcategory] {
        &self.labels
    }

    /// First ordinary subcategory, if any.
    pub fn subcategory(&self) -> Option<Subcategory> {
        self.labels.iter().copied().find(|s| s.slot() == Slot::Subcategory)
    }

    pub fn nature(&self) -> Option<ConstraintNature> {
        self.labels.iter().find_map(|s| match s {
            Subcategory::Nature(n) => Some(*n),
            _ => None,
        })
    }

    pub fn source(&self) -> Option<ConstraintSource> {
        self.labels.iter().find_map(|s| match s {
            Subcategory::Source(n) => Some(*n),
            _ => None,
        })
    }

    pub fn is_valid(&self) -> bool {
        validate_classification(self).is_empty()
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.category.keyword())?;
        if !self.labels.is_empty() {
            f.write_str("(")?;
            for (i, label) in self.labels.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(label.keyword())?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// One violated classification rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationIssue {
    /// An ordinary subcategory used under the wrong basic category.
    IncompatibleSubcategory { label: Subcategory, required: Category },
    /// A nature or source label on something that is not a constraint.
    ConstraintOnlySlot { slot: Slot, label: Subcategory },
    /// More than one label in a slot that holds at most one.
    CrowdedSlot { slot: Slot, labels: Vec<Subcategory> },
    /// Assumption and obligation together; the combined case is `invariant`.
    AssumptionWithObligation,
}

impl ClassificationIssue {
    pub fn slot(&self) -> Slot {
        match self {
            ClassificationIssue::IncompatibleSubcategory { .. } => Slot::Subcategory,
            ClassificationIssue::ConstraintOnlySlot { slot, .. } => *slot,
            ClassificationIssue::CrowdedSlot { slot, .. } => *slot,
            ClassificationIssue::AssumptionWithObligation => Slot::Nature,
        }
    }
}

impl fmt::Display for ClassificationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationIssue::IncompatibleSubcategory { label, required } => {
                write!(f, "{label} requires {required}")
            }
            ClassificationIssue::ConstraintOnlySlot { slot, label } => {
                write!(f, "{slot} slot is constraint-only (found {label})")
            }
            ClassificationIssue::CrowdedSlot { slot, labels } => {
                let names: Vec<_> = labels.iter().map(|l| l.keyword()).collect();
                write!(f, "{slot} slot holds at most one label (found {})", names.join(", "))
            }
            ClassificationIssue::AssumptionWithObligation => {
                f.write_str("nature slot: assumption and obligation are mutually exclusive (use invariant)")
            }
        }
    }
}

/// Checks a classification against the category/subcategory table.
///
/// Returns one issue per violated rule; an empty result means the
/// classification is acceptable.
pub fn validate_classification(c: &Classification) -> Vec<ClassificationIssue> {
    let mut issues = Vec::new();
    let is_constraint = c.category == Category::Constraint;

    let mut ordinary = Vec::new();
    let mut natures = Vec::new();
    let mut sources = Vec::new();
    for &label in &c.labels {
        match label.slot() {
            Slot::Subcategory => ordinary.push(label),
            Slot::Nature => natures.push(label),
            Slot::Source => sources.push(label),
        }
    }

    for &label in &ordinary {
        if label.parent() != c.category {
            issues.push(ClassificationIssue::IncompatibleSubcategory {
                label,
                required: label.parent(),
            });
        }
    }
    if ordinary.len() > 1 {
        issues.push(ClassificationIssue::CrowdedSlot {
            slot: Slot::Subcategory,
            labels: ordinary,
        });
    }

    for (slot, labels) in [(Slot::Nature, natures), (Slot::Source, sources)] {
        if labels.is_empty() {
            continue;
        }
        if !is_constraint {
            for &label in &labels {
                issues.push(ClassificationIssue::ConstraintOnlySlot { slot, label });
            }
        }
        if labels.len() > 1 {
            let assumption = Subcategory::Nature(ConstraintNature::Assumption);
            let obligation = Subcategory::Nature(ConstraintNature::Obligation);
            if slot == Slot::Nature && labels.contains(&assumption) && labels.contains(&obligation) {
                issues.push(ClassificationIssue::AssumptionWithObligation);
            } else {
                issues.push(ClassificationIssue::CrowdedSlot { slot, labels });
            }
        }
    }

    issues
}
