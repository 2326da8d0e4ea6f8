use std::collections::BTreeMap;

use super::config::LintConfig;
use super::diagnostic::{Diagnostic, RuleId};
use super::terms::statement_terms;
use crate::format::LinkedDocument;
use crate::relation::{check_structure_indexed, normalize_symmetry, RelationKind};
use crate::taxonomy::{fold_term, is_heterogeneous, validate_classification, Category};

/// Runs every enabled rule and orders the findings by location.
pub fn lint(linked: &LinkedDocument<'_>, cfg: &LintConfig) -> Vec<Diagnostic> {
    let file = linked.doc.source_name();
    let mut out: Vec<Diagnostic> = Vec::new();
    for rule in RuleId::ALL {
        if !cfg.is_enabled(rule) {
            continue;
        }
        let mut found = match rule {
            RuleId::R1 => invalid_classification(linked, file),
            RuleId::R2 => linked.diagnostics.clone(),
            RuleId::R3 => heterogeneous(linked, file),
            RuleId::R4 => duplicates(linked, file),
            RuleId::R5 => contradictions(linked, file),
            RuleId::R6 => lacks(linked, cfg, file),
            RuleId::R7 => structure(linked, file),
            RuleId::R8 => unglossed_components(linked, cfg, file),
            RuleId::R9 => unrefined_constraints(linked, file),
        };
        if let Some(severity) = cfg.severity_of(rule) {
            for d in &mut found {
                d.severity = severity;
            }
        }
        out.extend(found);
    }
    out.sort_by(|a, b| {
        (a.line.is_none(), a.line, a.rule, &a.subjects, &a.message).cmp(&(
            b.line.is_none(),
            b.line,
            b.rule,
            &b.subjects,
            &b.message,
        ))
    });
    out
}

fn line_of(line: usize) -> Option<usize> {
    (line > 0).then_some(line)
}

fn invalid_classification(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for e in linked.doc.elements() {
        for issue in validate_classification(&e.classification) {
            out.push(Diagnostic::new(
                RuleId::R1,
                vec![e.id.to_string()],
                format!("`{}` is classified {}: {issue}", e.id, e.classification),
                file,
                line_of(e.line),
            ));
        }
    }
    out
}

fn heterogeneous(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    linked
        .doc
        .elements()
        .filter(|e| e.is_composite() && e.category() != Category::MetaRequirement && is_heterogeneous(e))
        .map(|e| {
            let mut cats: Vec<&str> = e
                .children
                .iter()
                .map(|c| c.category())
                .filter(|c| !matches!(c, Category::Lack | Category::MetaRequirement))
                .map(|c| c.keyword())
                .collect();
            cats.sort_unstable();
            cats.dedup();
            Diagnostic::new(
                RuleId::R3,
                vec![e.id.to_string()],
                format!("composite `{}` mixes categories: {}", e.id, cats.join(", ")),
                file,
                line_of(e.line),
            )
        })
        .collect()
}

fn duplicates(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    linked
        .derived_of(RelationKind::Duplicates)
        .map(|e| {
            Diagnostic::new(
                RuleId::R4,
                vec![e.from.to_string(), e.to.to_string()],
                format!(
                    "`{}` and `{}` state the same property in the same notation ({})",
                    e.from,
                    e.to,
                    linked.index.notation(e.from.as_str()).map_or("text", |n| n.as_str())
                ),
                file,
                e.line,
            )
        })
        .collect()
}

fn contradictions(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    let declared: Vec<_> = linked
        .doc
        .relations
        .iter()
        .filter(|e| e.kind == RelationKind::Contradicts)
        .cloned()
        .collect();
    normalize_symmetry(&declared)
        .into_iter()
        .map(|e| {
            Diagnostic::new(
                RuleId::R5,
                vec![e.from.to_string(), e.to.to_string()],
                format!("`{}` and `{}` are declared contradictory", e.from, e.to),
                file,
                e.line,
            )
        })
        .collect()
}

fn lacks(linked: &LinkedDocument<'_>, cfg: &LintConfig, file: &str) -> Vec<Diagnostic> {
    // term -> (count, ids of elements using it, first line)
    let mut seen: BTreeMap<String, (usize, Vec<String>, usize)> = BTreeMap::new();
    for e in linked.doc.elements() {
        for term in statement_terms(&e.text, &cfg.lack_stopwords) {
            let entry = seen.entry(term).or_insert((0, Vec::new(), e.line));
            entry.0 += 1;
            if entry.1.last().map(String::as_str) != Some(e.id.as_str()) {
                entry.1.push(e.id.to_string());
            }
        }
    }
    seen.into_iter()
        .filter(|(term, (count, _, _))| *count >= cfg.lack_min_occurrences && !linked.doc.glossary.contains(term))
        .map(|(term, (count, ids, line))| {
            Diagnostic::new(
                RuleId::R6,
                ids,
                format!("term \"{term}\" occurs {count} times but has no glossary entry"),
                file,
                line_of(line),
            )
        })
        .collect()
}

fn structure(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    check_structure_indexed(linked.doc, &linked.index)
        .into_iter()
        .map(|issue| {
            Diagnostic::new(
                RuleId::R7,
                issue.subjects().iter().map(|s| s.to_string()).collect(),
                format!("{}: {issue}", issue.code()),
                file,
                issue.line(),
            )
            .with_severity(issue.severity())
        })
        .collect()
}

/// The longest candidate term of a statement, first occurrence on ties.
pub fn head_term(text: &str, cfg: &LintConfig) -> Option<String> {
    let mut best: Option<String> = None;
    for term in statement_terms(text, &cfg.lack_stopwords) {
        if best.as_ref().is_none_or(|b| term.chars().count() > b.chars().count()) {
            best = Some(term);
        }
    }
    best
}

fn unglossed_components(linked: &LinkedDocument<'_>, cfg: &LintConfig, file: &str) -> Vec<Diagnostic> {
    let glossary = &linked.doc.glossary;
    linked
        .doc
        .elements()
        .filter(|e| e.category() == Category::Component && !glossary.contains(&fold_term(&e.text)))
        .filter_map(|e| {
            let head = head_term(&e.text, cfg)?;
            if glossary.contains(&head) {
                return None;
            }
            Some(Diagnostic::new(
                RuleId::R8,
                vec![e.id.to_string()],
                format!("component `{}` names \"{head}\", which is not in the glossary", e.id),
                file,
                line_of(e.line),
            ))
        })
        .collect()
}

fn unrefined_constraints(linked: &LinkedDocument<'_>, file: &str) -> Vec<Diagnostic> {
    linked
        .doc
        .elements()
        .filter(|e| {
            e.category() == Category::Constraint
                && e.classification.nature().is_none()
                && e.classification.source().is_none()
        })
        .map(|e| {
            Diagnostic::new(
                RuleId::R9,
                vec![e.id.to_string()],
                format!("constraint `{}` has neither a nature nor a source", e.id),
                file,
                line_of(e.line),
            )
        })
        .collect()
}
