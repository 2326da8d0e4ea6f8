use std::collections::{BTreeSet, HashSet};

use super::edge::{Provenance, RelationEdge};
use super::index::DocIndex;
use super::kind::RelationKind;
use crate::format::SrsDocument;
use crate::taxonomy::ElementId;

/// Stores each symmetric pair once, smaller id first, and drops repeated
/// edges. Directed kinds keep their orientation. Output is sorted by
/// `(from, kind, to)`.
pub fn normalize_symmetry(edges: &[RelationEdge]) -> Vec<RelationEdge> {
    let mut seen: HashSet<(ElementId, RelationKind, ElementId, Provenance)> = HashSet::new();
    let mut out: Vec<RelationEdge> = edges
        .iter()
        .cloned()
        .map(RelationEdge::canonical)
        .filter(|e| seen.insert((e.from.clone(), e.kind, e.to.clone(), e.provenance)))
        .collect();
    out.sort_by(|a, b| a.key().cmp(&b.key()).then(a.provenance.cmp(&b.provenance)));
    out
}

/// One derived `child BELONGS parent` edge per direct nesting link, in
/// document order. Transitive inclusion is not materialized.
pub fn derive_belongs(doc: &SrsDocument) -> Vec<RelationEdge> {
    let mut out = Vec::new();
    let mut stack: Vec<&crate::taxonomy::RequirementElement> = doc.roots.iter().rev().collect();
    while let Some(parent) = stack.pop() {
        for child in &parent.children {
            let mut edge = RelationEdge::derived(child.id.clone(), RelationKind::Belongs, parent.id.clone());
            if child.line > 0 {
                edge.line = Some(child.line);
            }
            out.push(edge);
        }
        stack.extend(parent.children.iter().rev());
    }
    out
}

/// Declared repetition edges (`REPEATS` and its refinements), normalized.
fn repetition_edges(doc: &SrsDocument) -> Vec<RelationEdge> {
    let reps: Vec<RelationEdge> = doc
        .relations
        .iter()
        .filter(|e| e.kind.is_repetition())
        .map(|e| RelationEdge {
            kind: RelationKind::Repeats,
            provenance: Provenance::Declared,
            ..e.clone()
        })
        .collect();
    normalize_symmetry(&reps)
}

/// `SHARES(X, Y)` for every pair of distinct elements, neither inside the
/// other, such that some descendant-or-self of `X` repeats some
/// descendant-or-self of `Y`.
pub fn derive_shares(doc: &SrsDocument) -> Vec<RelationEdge> {
    derive_shares_indexed(doc, &DocIndex::new(doc))
}

pub(crate) fn derive_shares_indexed(doc: &SrsDocument, index: &DocIndex<'_>) -> Vec<RelationEdge> {
    let mut pairs: BTreeSet<(&ElementId, &ElementId)> = BTreeSet::new();
    for edge in repetition_edges(doc) {
        let (Some(a), Some(b)) = (index.position(edge.from.as_str()), index.position(edge.to.as_str())) else {
            continue;
        };
        for x in index.ancestors_or_self(a) {
            for y in index.ancestors_or_self(b) {
                if index.in_same_line(x, y) {
                    continue;
                }
                let (x, y) = (index.id(x), index.id(y));
                pairs.insert(if x < y { (x, y) } else { (y, x) });
            }
        }
    }
    pairs
        .into_iter()
        .map(|(x, y)| RelationEdge::derived(x.clone(), RelationKind::Shares, y.clone()))
        .collect()
}

/// Splits the declared `REPEATS` edges into `DUPLICATES` (same notation)
/// and `EXPLAINS` (different notation). Every resolvable `REPEATS` edge
/// yields exactly one refined edge.
pub fn refine_repeats(doc: &SrsDocument) -> Vec<RelationEdge> {
    refine_repeats_indexed(doc, &DocIndex::new(doc))
}

pub(crate) fn refine_repeats_indexed(doc: &SrsDocument, index: &DocIndex<'_>) -> Vec<RelationEdge> {
    let repeats: Vec<RelationEdge> = doc
        .relations
        .iter()
        .filter(|e| e.kind == RelationKind::Repeats)
        .cloned()
        .collect();
    normalize_symmetry(&repeats)
        .into_iter()
        .filter_map(|e| {
            let same = index.notation(e.from.as_str())? == index.notation(e.to.as_str())?;
            let kind = if same {
                RelationKind::Duplicates
            } else {
                RelationKind::Explains
            };
            Some(RelationEdge {
                kind,
                provenance: Provenance::Derived,
                ..e
            })
        })
        .collect()
}
