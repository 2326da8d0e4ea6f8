use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::edge::RelationEdge;
use super::index::DocIndex;
use super::kind::RelationKind;
use crate::format::SrsDocument;
use crate::lint::Severity;
use crate::taxonomy::ElementId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureIssue {
    /// A pair related by two or more distinct primary relations.
    MultiPrimary {
        pair: (ElementId, ElementId),
        kinds: Vec<RelationKind>,
        line: Option<usize>,
    },
    /// A pair related by two or more distinct derived relations.
    MultiDerived {
        pair: (ElementId, ElementId),
        kinds: Vec<RelationKind>,
        line: Option<usize>,
    },
    /// A pair declared unrelated and also related.
    DisjoinsConflict {
        pair: (ElementId, ElementId),
        others: Vec<RelationKind>,
        line: Option<usize>,
    },
    BelongsCycle {
        members: Vec<ElementId>,
        line: Option<usize>,
    },
    ExtendsCycle {
        members: Vec<ElementId>,
        line: Option<usize>,
    },
}

impl StructureIssue {
    pub fn severity(&self) -> Severity {
        match self {
            StructureIssue::MultiPrimary { .. }
            | StructureIssue::MultiDerived { .. }
            | StructureIssue::ExtendsCycle { .. } => Severity::Warning,
            StructureIssue::DisjoinsConflict { .. } | StructureIssue::BelongsCycle { .. } => Severity::Error,
        }
    }

    /// Short kebab-case name of the finding.
    pub fn code(&self) -> &'static str {
        match self {
            StructureIssue::MultiPrimary { .. } => "multi-primary",
            StructureIssue::MultiDerived { .. } => "multi-derived",
            StructureIssue::DisjoinsConflict { .. } => "disjoins-conflict",
            StructureIssue::BelongsCycle { .. } => "belongs-cycle",
            StructureIssue::ExtendsCycle { .. } => "extends-cycle",
        }
    }

    pub fn subjects(&self) -> Vec<ElementId> {
        match self {
            StructureIssue::MultiPrimary { pair, .. }
            | StructureIssue::MultiDerived { pair, .. }
            | StructureIssue::DisjoinsConflict { pair, .. } => vec![pair.0.clone(), pair.1.clone()],
            StructureIssue::BelongsCycle { members, .. } | StructureIssue::ExtendsCycle { members, .. } => {
                members.clone()
            }
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            StructureIssue::MultiPrimary { line, .. }
            | StructureIssue::MultiDerived { line, .. }
            | StructureIssue::DisjoinsConflict { line, .. }
            | StructureIssue::BelongsCycle { line, .. }
            | StructureIssue::ExtendsCycle { line, .. } => *line,
        }
    }
}

fn kind_list(kinds: &[RelationKind]) -> String {
    kinds.iter().map(|k| k.keyword()).collect::<Vec<_>>().join(", ")
}

fn member_list(members: &[ElementId]) -> String {
    members.iter().map(|m| m.as_str()).collect::<Vec<_>>().join(" -> ")
}

impl fmt::Display for StructureIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureIssue::MultiPrimary { pair, kinds, .. } => write!(
                f,
                "multi-primary: {} and {} are related by more than one primary relation ({})",
                pair.0,
                pair.1,
                kind_list(kinds)
            ),
            StructureIssue::MultiDerived { pair, kinds, .. } => write!(
                f,
                "multi-derived: {} and {} are related by more than one derived relation ({})",
                pair.0,
                pair.1,
                kind_list(kinds)
            ),
            StructureIssue::DisjoinsConflict { pair, others, .. } => write!(
                f,
                "disjoins-conflict: {} and {} are declared DISJOINS but also {}",
                pair.0,
                pair.1,
                kind_list(others)
            ),
            StructureIssue::BelongsCycle { members, .. } => {
                write!(
                    f,
                    "belongs-cycle: textual inclusion cycle among {}",
                    member_list(members)
                )
            }
            StructureIssue::ExtendsCycle { members, .. } => {
                write!(f, "extends-cycle: EXTENDS/DETAILS cycle among {}", member_list(members))
            }
        }
    }
}

fn min_line(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

#[derive(Default)]
struct PairKinds {
    primary: BTreeSet<RelationKind>,
    derived: BTreeSet<RelationKind>,
    all: BTreeSet<RelationKind>,
    line: Option<usize>,
}

/// Structural findings over declared relations and nesting.
pub fn check_structure(doc: &SrsDocument) -> Vec<StructureIssue> {
    check_structure_indexed(doc, &DocIndex::new(doc))
}

pub(crate) fn check_structure_indexed(doc: &SrsDocument, index: &DocIndex<'_>) -> Vec<StructureIssue> {
    let mut issues = Vec::new();

    let mut by_pair: BTreeMap<(ElementId, ElementId), PairKinds> = BTreeMap::new();
    for edge in &doc.relations {
        if edge.from == edge.to {
            continue;
        }
        let (a, b) = edge.pair();
        let entry = by_pair.entry((a.clone(), b.clone())).or_default();
        entry.all.insert(edge.kind);
        entry.line = min_line(entry.line, edge.line);
        if edge.kind.is_derived() {
            entry.derived.insert(edge.kind);
        }
        // DISJOINS overlaps are reported separately below.
        if let Some(primary) = edge.kind.primary() {
            if primary != RelationKind::Disjoins {
                entry.primary.insert(primary);
            }
        }
    }
    for (pair, kinds) in by_pair {
        if kinds.primary.len() > 1 {
            issues.push(StructureIssue::MultiPrimary {
                pair: pair.clone(),
                kinds: kinds.primary.iter().copied().collect(),
                line: kinds.line,
            });
        }
        if kinds.derived.len() > 1 {
            issues.push(StructureIssue::MultiDerived {
                pair: pair.clone(),
                kinds: kinds.derived.iter().copied().collect(),
                line: kinds.line,
            });
        }
        if kinds.all.contains(&RelationKind::Disjoins) && kinds.all.len() > 1 {
            issues.push(StructureIssue::DisjoinsConflict {
                pair,
                others: kinds
                    .all
                    .iter()
                    .copied()
                    .filter(|k| *k != RelationKind::Disjoins)
                    .collect(),
                line: kinds.line,
            });
        }
    }

    let nesting = (0..index.len()).filter_map(|p| index.parent(p).map(|parent| (p, parent, None)));
    let declared_belongs = declared_positions(doc, index, |k| k == RelationKind::Belongs);
    for (members, line) in cycles(index, nesting.chain(declared_belongs)) {
        issues.push(StructureIssue::BelongsCycle { members, line });
    }

    let extends = declared_positions(doc, index, |k| {
        matches!(k, RelationKind::Extends | RelationKind::Details)
    });
    for (members, line) in cycles(index, extends) {
        issues.push(StructureIssue::ExtendsCycle { members, line });
    }

    issues
}

fn declared_positions<'d>(
    doc: &'d SrsDocument,
    index: &'d DocIndex<'_>,
    keep: impl Fn(RelationKind) -> bool + 'd,
) -> impl Iterator<Item = (usize, usize, Option<usize>)> + 'd {
    doc.relations
        .iter()
        .filter(move |e| keep(e.kind))
        .filter_map(|e: &RelationEdge| Some((index.position(e.from.as_str())?, index.position(e.to.as_str())?, e.line)))
}

/// Strongly connected components with more than one member. Members are
/// sorted by id; the line is the earliest declared edge inside the cycle.
fn cycles(
    index: &DocIndex<'_>,
    edges: impl Iterator<Item = (usize, usize, Option<usize>)>,
) -> Vec<(Vec<ElementId>, Option<usize>)> {
    let mut graph: DiGraph<(), Option<usize>, u32> = DiGraph::with_capacity(index.len(), index.len());
    for _ in 0..index.len() {
        graph.add_node(());
    }
    for (a, b, line) in edges {
        graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), line);
    }
    let mut found = Vec::new();
    for scc in tarjan_scc(&graph) {
        if scc.len() < 2 {
            continue;
        }
        let inside: BTreeSet<NodeIndex> = scc.iter().copied().collect();
        let line = graph
            .edge_indices()
            .filter(|&e| {
                let (a, b) = graph.edge_endpoints(e).expect("edge exists");
                inside.contains(&a) && inside.contains(&b)
            })
            .filter_map(|e| graph[e])
            .min();
        let mut members: Vec<ElementId> = scc.iter().map(|n| index.id(n.index()).clone()).collect();
        members.sort();
        found.push((members, line));
    }
    found.sort();
    found
}
