use std::fmt;

use super::edge::RelationEdge;
use super::index::DocIndex;
use super::kind::RelationKind;
use crate::taxonomy::Category;

/// Why a single edge is not well-formed for its document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeIssue {
    DanglingEndpoint {
        id: String,
    },
    SelfEdge,
    /// `CHARACTERIZES` / `CONSTRAINS` with the wrong kind of first operand.
    WrongFirstOperand {
        kind: RelationKind,
        required: Category,
        found: Category,
    },
    /// Declared `BELONGS` that the nesting does not back up.
    BelongsNotNested,
}

impl EdgeIssue {
    pub fn describe(&self, edge: &RelationEdge) -> String {
        match self {
            EdgeIssue::DanglingEndpoint { id } => {
                format!("{edge}: endpoint `{id}` is not defined")
            }
            EdgeIssue::SelfEdge => format!("{edge}: relation from an element to itself"),
            EdgeIssue::WrongFirstOperand { kind, required, found } => {
                let article = match required {
                    Category::MetaRequirement => "a meta-requirement",
                    Category::Constraint => "a constraint",
                    _ => "the required category",
                };
                format!("{edge}: x must be {article} for {kind} (found {found})")
            }
            EdgeIssue::BelongsNotNested => format!(
                "{edge}: declared BELONGS does not match nesting ({} is not inside {})",
                edge.from, edge.to
            ),
        }
    }
}

impl fmt::Display for EdgeIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeIssue::DanglingEndpoint { id } => write!(f, "endpoint `{id}` is not defined"),
            EdgeIssue::SelfEdge => f.write_str("self-edge"),
            EdgeIssue::WrongFirstOperand { required, kind, .. } => {
                write!(f, "{kind} requires x to be {required}")
            }
            EdgeIssue::BelongsNotNested => f.write_str("BELONGS does not match nesting"),
        }
    }
}

/// Endpoint typing for one edge.
///
/// `CHARACTERIZES` needs a meta-requirement and `CONSTRAINS` a constraint as
/// first operand; a declared `BELONGS` must follow the nesting (direct or
/// transitive). Other kinds accept any categories.
pub fn validate_edge(edge: &RelationEdge, index: &DocIndex<'_>) -> Vec<EdgeIssue> {
    let mut issues = Vec::new();
    let from = index.position(edge.from.as_str());
    let to = index.position(edge.to.as_str());
    for (pos, id) in [(from, &edge.from), (to, &edge.to)] {
        if pos.is_none() {
            issues.push(EdgeIssue::DanglingEndpoint { id: id.to_string() });
        }
    }
    if edge.from == edge.to {
        issues.push(EdgeIssue::SelfEdge);
    }
    let (Some(from), Some(to)) = (from, to) else {
        return issues;
    };

    let required = match edge.kind {
        RelationKind::Characterizes => Some(Category::MetaRequirement),
        RelationKind::Constrains => Some(Category::Constraint),
        _ => None,
    };
    if let Some(required) = required {
        let found = index.node(from).element.category();
        if found != required {
            issues.push(EdgeIssue::WrongFirstOperand {
                kind: edge.kind,
                required,
                found,
            });
        }
    }
    if edge.kind == RelationKind::Belongs && from != to && !index.is_ancestor(to, from) {
        issues.push(EdgeIssue::BelongsNotNested);
    }
    issues
}
