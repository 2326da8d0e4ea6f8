use super::document::SrsDocument;
use crate::lint::{Diagnostic, RuleId};
use crate::relation::{
    derive_belongs, derive_shares_indexed, refine_repeats_indexed, validate_edge, DocIndex, RelationEdge, RelationKind,
};

/// A document with its index, derived edges and edge diagnostics.
#[derive(Debug, Clone)]
pub struct LinkedDocument<'a> {
    pub doc: &'a SrsDocument,
    pub index: DocIndex<'a>,
    /// Derived BELONGS, SHARES and the DUPLICATES/EXPLAINS refinement.
    pub derived: Vec<RelationEdge>,
    /// R2 findings, at default severity.
    pub diagnostics: Vec<Diagnostic>,
}

impl<'a> LinkedDocument<'a> {
    pub fn derived_of(&self, kind: RelationKind) -> impl Iterator<Item = &RelationEdge> {
        self.derived.iter().filter(move |e| e.kind == kind)
    }

    /// Declared edges followed by derived ones.
    pub fn all_edges(&self) -> impl Iterator<Item = &RelationEdge> {
        self.doc.relations.iter().chain(self.derived.iter())
    }
}

/// Validates every declared edge and attaches the derived relations.
pub fn link(doc: &SrsDocument) -> LinkedDocument<'_> {
    let index = DocIndex::new(doc);
    let file = doc.source_name().to_string();
    let mut diagnostics = Vec::new();
    for edge in &doc.relations {
        for issue in validate_edge(edge, &index) {
            diagnostics.push(Diagnostic::new(
                RuleId::R2,
                vec![edge.from.to_string(), edge.to.to_string()],
                issue.describe(edge),
                &file,
                edge.line,
            ));
        }
    }
    let mut derived = derive_belongs(doc);
    derived.extend(derive_shares_indexed(doc, &index));
    derived.extend(refine_repeats_indexed(doc, &index));
    LinkedDocument {
        doc,
        index,
        derived,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    #[test]
    fn dangling_edge_in_constructed_document() {
        let mut doc = parse("[a] goal :: x\n").unwrap();
        doc.relations
            .push(RelationEdge::declared("a", RelationKind::Extends, "ghost"));
        let linked = link(&doc);
        assert_eq!(linked.diagnostics.len(), 1);
        assert!(linked.diagnostics[0].message.contains("ghost"));
    }

    #[test]
    fn belongs_matching_nesting_is_silent() {
        let doc = parse("[p] meta :: P\n  [c] goal :: C\n@relations\nc BELONGS p\n@end\n").unwrap();
        let linked = link(&doc);
        assert!(linked.diagnostics.is_empty());
        assert_eq!(linked.derived_of(RelationKind::Belongs).count(), 1);
    }

    #[test]
    fn belongs_against_nesting_is_reported() {
        let doc = parse("[p] meta :: P\n  [c] goal :: C\n@relations\np BELONGS c\n@end\n").unwrap();
        let linked = link(&doc);
        assert_eq!(linked.diagnostics.len(), 1);
        assert_eq!(linked.diagnostics[0].rule, RuleId::R2);
        assert_eq!(linked.diagnostics[0].line, Some(4));
    }
}
