use std::fmt::Write;

use serde::Serialize;

use crate::format::LinkedDocument;
use crate::relation::{Provenance, RelationEdge};
use crate::taxonomy::{Category, NotationTag, Subcategory};

#[derive(Debug, Clone, Serialize)]
pub struct GraphNode<'a> {
    pub id: &'a str,
    pub category: Category,
    pub subcategories: &'a [Subcategory],
    pub notation: &'a NotationTag,
    pub parent: Option<&'a str>,
    pub line: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Graph<'a> {
    pub version: u32,
    pub title: &'a str,
    pub nodes: Vec<GraphNode<'a>>,
    pub edges: Vec<&'a RelationEdge>,
}

/// Node and edge view of a linked document. Derived edges are left out when
/// `declared_only` is set.
pub fn graph<'a>(linked: &'a LinkedDocument<'a>, declared_only: bool) -> Graph<'a> {
    let index = &linked.index;
    let nodes = index
        .nodes()
        .iter()
        .map(|n| GraphNode {
            id: n.element.id.as_str(),
            category: n.element.category(),
            subcategories: n.element.classification.labels(),
            notation: &n.element.notation,
            parent: n.parent.map(|p| index.id(p).as_str()),
            line: (n.element.line > 0).then_some(n.element.line),
        })
        .collect();
    let edges = linked
        .all_edges()
        .filter(|e| !declared_only || e.provenance == Provenance::Declared)
        .collect();
    Graph {
        version: super::REPORT_VERSION,
        title: &linked.doc.title,
        nodes,
        edges,
    }
}

fn dot_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Graph<'_> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    /// Graphviz digraph. Node labels are `id` over the category name;
    /// derived edges are dashed and symmetric kinds drawn without arrows.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = if self.title.is_empty() { "srs" } else { self.title };
        let _ = writeln!(out, "digraph {} {{", dot_string(name));
        let _ = writeln!(out, "  node [shape=box];");
        for n in &self.nodes {
            let label = format!("{}\n{}", n.id, n.category.name());
            let _ = writeln!(out, "  {} [label={}];", dot_string(n.id), dot_string(&label));
        }
        for e in &self.edges {
            let mut attrs = vec![format!("label={}", dot_string(e.kind.keyword()))];
            if e.provenance == Provenance::Derived {
                attrs.push("style=dashed".to_string());
            }
            if e.kind.is_symmetric() {
                attrs.push("dir=none".to_string());
            }
            let _ = writeln!(
                out,
                "  {} -> {} [{}];",
                dot_string(e.from.as_str()),
                dot_string(e.to.as_str()),
                attrs.join(", ")
            );
        }
        out.push_str("}\n");
        out
    }
}
