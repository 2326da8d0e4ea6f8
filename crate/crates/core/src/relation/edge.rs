use std::fmt;

use serde::Serialize;

use super::kind::RelationKind;
use crate::taxonomy::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Declared,
    Derived,
}

/// A typed, directed edge `from KIND to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RelationEdge {
    pub from: ElementId,
    pub kind: RelationKind,
    pub to: ElementId,
    pub provenance: Provenance,
    /// 1-based line of the declaration, if it came from a file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
}

impl RelationEdge {
    pub fn declared(from: impl Into<ElementId>, kind: RelationKind, to: impl Into<ElementId>) -> Self {
        RelationEdge {
            from: from.into(),
            kind,
            to: to.into(),
            provenance: Provenance::Declared,
            line: None,
        }
    }

    pub fn derived(from: impl Into<ElementId>, kind: RelationKind, to: impl Into<ElementId>) -> Self {
        RelationEdge {
            provenance: Provenance::Derived,
            ..RelationEdge::declared(from, kind, to)
        }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        self.line = Some(line);
        self
    }

    /// Sort key `(from, kind keyword, to)`.
    pub fn key(&self) -> (&str, &'static str, &str) {
        (self.from.as_str(), self.kind.keyword(), self.to.as_str())
    }

    /// The endpoints as an unordered pair, smaller id first.
    pub fn pair(&self) -> (&ElementId, &ElementId) {
        if self.from <= self.to {
            (&self.from, &self.to)
        } else {
            (&self.to, &self.from)
        }
    }

    /// Reorients symmetric kinds so that `from <= to`.
    pub fn canonical(mut self) -> Self {
        if self.kind.is_symmetric() && self.to < self.from {
            std::mem::swap(&mut self.from, &mut self.to);
        }
        self
    }
}

impl fmt::Display for RelationEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.from, self.kind, self.to)
    }
}
