use std::collections::BTreeSet;

use crate::relation::RelationEdge;
use crate::taxonomy::{ElementId, Glossary, NotationTag, RequirementElement, Walk};

/// A parsed requirements document: the unit of parsing and analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SrsDocument {
    pub title: String,
    /// Notation tags declared on top of the canonical set.
    pub notations: BTreeSet<NotationTag>,
    pub glossary: Glossary,
    pub roots: Vec<RequirementElement>,
    pub relations: Vec<RelationEdge>,
    /// File name used in diagnostics.
    pub source: Option<String>,
}

impl SrsDocument {
    pub fn new() -> Self {
        SrsDocument::default()
    }

    /// Every element in document order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            roots: self.roots.iter(),
            current: None,
        }
    }

    pub fn element_count(&self) -> usize {
        self.elements().count()
    }

    pub fn find(&self, id: &str) -> Option<&RequirementElement> {
        self.elements().find(|e| e.id.as_str() == id)
    }

    pub fn is_empty(&self) -> bool {
        self.title.is_empty()
            && self.notations.is_empty()
            && self.glossary.is_empty()
            && self.roots.is_empty()
            && self.relations.is_empty()
    }

    pub fn source_name(&self) -> &str {
        self.source.as_deref().unwrap_or("-")
    }

    pub fn notation_allowed(&self, tag: &NotationTag) -> bool {
        tag.is_canonical() || self.notations.contains(tag)
    }

    /// The document with source positions cleared and relations sorted.
    ///
    /// Two documents with equal normalized forms render to the same text.
    pub fn normalized(&self) -> SrsDocument {
        fn strip(e: &RequirementElement) -> RequirementElement {
            RequirementElement {
                line: 0,
                children: e.children.iter().map(strip).collect(),
                ..e.clone()
            }
        }
        let mut relations: Vec<RelationEdge> = self
            .relations
            .iter()
            .map(|r| RelationEdge {
                line: None,
                ..r.clone()
            })
            .collect();
        relations.sort_by(|a, b| a.key().cmp(&b.key()));
        SrsDocument {
            title: self.title.clone(),
            notations: self.notations.clone(),
            glossary: self.glossary.clone(),
            roots: self.roots.iter().map(strip).collect(),
            relations,
            source: None,
        }
    }

    pub fn ids(&self) -> impl Iterator<Item = &ElementId> {
        self.elements().map(|e| &e.id)
    }
}

pub struct Elements<'a> {
    roots: std::slice::Iter<'a, RequirementElement>,
    current: Option<Walk<'a>>,
}

impl<'a> Iterator for Elements<'a> {
    type Item = &'a RequirementElement;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(walk) = &mut self.current {
                if let Some(e) = walk.next() {
                    return Some(e);
                }
            }
            self.current = Some(self.roots.next()?.walk());
        }
    }
}
