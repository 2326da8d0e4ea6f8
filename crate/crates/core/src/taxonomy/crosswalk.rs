//! Mappings from two textbook requirement vocabularies onto the basic
//! categories: Wiegers-Beatty (`wb`) and van Lamsweerde (`avl`).

use std::fmt;
use std::str::FromStr;

use super::category::Category;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    WiegersBeatty,
    VanLamsweerde,
}

impl Scheme {
    pub fn table(self) -> &'static [CrosswalkEntry] {
        match self {
            Scheme::WiegersBeatty => WIEGERS_BEATTY,
            Scheme::VanLamsweerde => VAN_LAMSWEERDE,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Scheme::WiegersBeatty => "wb",
            Scheme::VanLamsweerde => "avl",
        }
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "wb" => Ok(Scheme::WiegersBeatty),
            "avl" => Ok(Scheme::VanLamsweerde),
            other => Err(format!("unknown crosswalk scheme `{other}` (expected wb or avl)")),
        }
    }
}

/// One row of a crosswalk table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrosswalkEntry {
    /// Row label in the external vocabulary.
    pub label: &'static str,
    pub category: Category,
    /// The mapping column as tabulated, which sometimes qualifies the
    /// category ("Constraint on behavior or Task").
    pub mapping: &'static str,
    pub note: Option<&'static str>,
}

impl fmt::Display for CrosswalkEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.category)?;
        if let Some(note) = self.note {
            write!(f, " \u{2014} {note}")?;
        }
        Ok(())
    }
}

const fn row(
    label: &'static str,
    category: Category,
    mapping: &'static str,
    note: Option<&'static str>,
) -> CrosswalkEntry {
    CrosswalkEntry {
        label,
        category,
        mapping,
        note,
    }
}

pub const WIEGERS_BEATTY: &[CrosswalkEntry] = &[
    row(
        "Business requirement",
        Category::Goal,
        "Goal",
        Some("Can also include limits"),
    ),
    row(
        "Business rule",
        Category::Constraint,
        "Constraint",
        Some("See also business rule subcategory"),
    ),
    row(
        "Constraint",
        Category::Constraint,
        "Constraint on behavior or Task",
        None,
    ),
    row("External interface requirement", Category::Component, "Component", None),
    row(
        "Feature",
        Category::Behavior,
        "Behavior",
        Some("From viewpoint of actor (e.g. user)"),
    ),
    row("Functional requirement", Category::Behavior, "Behavior", None),
    row(
        "Nonfunctional requirement",
        Category::Constraint,
        "Constraint on the system or products",
        None,
    ),
    row(
        "Quality attribute",
        Category::Constraint,
        "System constraint (Note: not clear what the difference is with the previous category)",
        Some("From viewpoint of actor (e.g. user)"),
    ),
    row("System requirement", Category::Component, "Component", None),
    row("User requirement", Category::Goal, "Goal", None),
];

pub const VAN_LAMSWEERDE: &[CrosswalkEntry] = &[
    row(
        "Functional requirements",
        Category::Constraint,
        "Constraint or Behavior",
        Some("Or Behavior"),
    ),
    row(
        "Non-functional requirements",
        Category::Task,
        "Task",
        Some("Can also be product"),
    ),
    row(
        "Quality requirements",
        Category::Constraint,
        "Constraint",
        Some("Usually engineering decisions"),
    ),
    row(
        "Compliance requirements",
        Category::Constraint,
        "Constraint",
        Some("Usually business rule"),
    ),
    row("Architectural requirements", Category::Component, "Component", None),
    row(
        "Development requirements",
        Category::Task,
        "Task",
        Some("Can also be product"),
    ),
    row("Goals", Category::Goal, "Goal", None),
    row("Expectations", Category::Goal, "Goal", None),
    row(
        "Domain properties",
        Category::Constraint,
        "Constraint",
        Some("Or Component if the property holds on a structural description"),
    ),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {scheme} label `{label}`; valid labels: {}", valid.join(", "))]
pub struct UnknownLabel {
    pub scheme: &'static str,
    pub label: String,
    pub valid: Vec<&'static str>,
}

fn normalize(label: &str) -> String {
    label.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

pub fn crosswalk(scheme: Scheme, label: &str) -> Result<&'static CrosswalkEntry, UnknownLabel> {
    let wanted = normalize(label);
    scheme
        .table()
        .iter()
        .find(|e| normalize(e.label) == wanted)
        .ok_or_else(|| UnknownLabel {
            scheme: scheme.code(),
            label: label.to_string(),
            valid: scheme.table().iter().map(|e| e.label).collect(),
        })
}

pub fn crosswalk_wb(label: &str) -> Result<&'static CrosswalkEntry, UnknownLabel> {
    crosswalk(Scheme::WiegersBeatty, label)
}

pub fn crosswalk_avl(label: &str) -> Result<&'static CrosswalkEntry, UnknownLabel> {
    crosswalk(Scheme::VanLamsweerde, label)
}
