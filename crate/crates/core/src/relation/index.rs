use std::collections::HashMap;

use crate::format::SrsDocument;
use crate::taxonomy::{Category, ElementId, NotationTag, RequirementElement};

#[derive(Debug, Clone)]
pub struct IndexedElement<'a> {
    pub element: &'a RequirementElement,
    pub parent: Option<usize>,
    pub depth: usize,
    /// One past the pre-order position of the last descendant.
    pub subtree_end: usize,
}

/// Flat pre-order view of a document's element forest.
///
/// Positions are pre-order numbers, so `a` is an ancestor of `d` exactly
/// when `a < d < subtree_end(a)`.
#[derive(Debug, Clone)]
pub struct DocIndex<'a> {
    nodes: Vec<IndexedElement<'a>>,
    by_id: HashMap<&'a str, usize>,
}

impl<'a> DocIndex<'a> {
    pub fn new(doc: &'a SrsDocument) -> Self {
        let mut nodes: Vec<IndexedElement<'a>> = Vec::new();
        let mut by_id = HashMap::new();
        // (element, parent position, depth)
        let mut stack: Vec<(&'a RequirementElement, Option<usize>, usize)> =
            doc.roots.iter().rev().map(|e| (e, None, 0)).collect();
        while let Some((element, parent, depth)) = stack.pop() {
            let pos = nodes.len();
            // First occurrence wins; duplicates are a parse error upstream.
            by_id.entry(element.id.as_str()).or_insert(pos);
            nodes.push(IndexedElement {
                element,
                parent,
                depth,
                subtree_end: pos + 1,
            });
            stack.extend(element.children.iter().rev().map(|c| (c, Some(pos), depth + 1)));
        }
        // Children follow their parent in pre-order, so a reverse sweep
        // sees every subtree before its root.
        for pos in (0..nodes.len()).rev() {
            if let Some(parent) = nodes[pos].parent {
                let end = nodes[pos].subtree_end;
                if end > nodes[parent].subtree_end {
                    nodes[parent].subtree_end = end;
                }
            }
        }
        DocIndex { nodes, by_id }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.by_id.contains_key(id)
    }

    pub fn node(&self, pos: usize) -> &IndexedElement<'a> {
        &self.nodes[pos]
    }

    pub fn nodes(&self) -> &[IndexedElement<'a>] {
        &self.nodes
    }

    pub fn get(&self, id: &str) -> Option<&'a RequirementElement> {
        self.position(id).map(|p| self.nodes[p].element)
    }

    pub fn id(&self, pos: usize) -> &'a ElementId {
        &self.nodes[pos].element.id
    }

    pub fn category(&self, id: &str) -> Option<Category> {
        self.get(id).map(|e| e.category())
    }

    pub fn notation(&self, id: &str) -> Option<&'a NotationTag> {
        self.get(id).map(|e| &e.notation)
    }

    pub fn parent(&self, pos: usize) -> Option<usize> {
        self.nodes[pos].parent
    }

    /// Strict ancestor test on positions.
    pub fn is_ancestor(&self, ancestor: usize, descendant: usize) -> bool {
        ancestor < descendant && descendant < self.nodes[ancestor].subtree_end
    }

    /// True when one position is an ancestor of, or equal to, the other.
    pub fn in_same_line(&self, a: usize, b: usize) -> bool {
        a == b || self.is_ancestor(a, b) || self.is_ancestor(b, a)
    }

    /// `pos` followed by its ancestors up to the root.
    pub fn ancestors_or_self(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(pos), move |&p| self.nodes[p].parent)
    }

    /// Positions of `pos` and all of its descendants.
    pub fn subtree(&self, pos: usize) -> std::ops::Range<usize> {
        pos..self.nodes[pos].subtree_end
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::Classification;

    fn el(id: &str) -> RequirementElement {
        RequirementElement::new(id, Classification::bare(Category::Goal), id)
    }

    #[test]
    fn ancestry_from_preorder_ranges() {
        let doc = SrsDocument {
            roots: vec![
                el("a").with_children(vec![el("b").with_children(vec![el("c")]), el("d")]),
                el("e"),
            ],
            ..SrsDocument::default()
        };
        let idx = DocIndex::new(&doc);
        let p = |id| idx.position(id).unwrap();
        assert!(idx.is_ancestor(p("a"), p("c")));
        assert!(idx.is_ancestor(p("b"), p("c")));
        assert!(!idx.is_ancestor(p("b"), p("d")));
        assert!(!idx.is_ancestor(p("a"), p("e")));
        assert_eq!(idx.subtree(p("a")).len(), 4);
        let chain: Vec<_> = idx.ancestors_or_self(p("c")).map(|q| idx.id(q).as_str()).collect();
        assert_eq!(chain, ["c", "b", "a"]);
        assert_eq!(idx.node(p("c")).depth, 2);
    }
}
