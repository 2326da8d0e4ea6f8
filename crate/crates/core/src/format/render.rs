use std::fmt::Write;

use super::document::SrsDocument;
use super::lex::quote;
use crate::relation::RelationEdge;
use crate::taxonomy::RequirementElement;

/// Canonical text form of a document.
///
/// Statements are always quoted, the default `text` notation is omitted,
/// the glossary is sorted by folded term and relations by `(x, kind, y)`.
/// Sections are separated by one blank line.
pub fn render(doc: &SrsDocument) -> String {
    let mut sections: Vec<String> = Vec::new();

    let mut header = String::new();
    if !doc.title.is_empty() {
        writeln!(header, "@document {}", quote(&doc.title)).unwrap();
    }
    if !doc.notations.is_empty() {
        let tags: Vec<&str> = doc.notations.iter().map(|t| t.as_str()).collect();
        writeln!(header, "@notations {}", tags.join(" ")).unwrap();
    }
    if !header.is_empty() {
        sections.push(header);
    }

    if !doc.glossary.is_empty() {
        let mut out = String::from("@glossary\n");
        for (_, entry) in doc.glossary.iter() {
            writeln!(out, "term {}: {}", quote(&entry.term), quote(&entry.definition)).unwrap();
        }
        out.push_str("@end\n");
        sections.push(out);
    }

    if !doc.roots.is_empty() {
        let mut out = String::new();
        let mut stack: Vec<(&RequirementElement, usize)> = doc.roots.iter().rev().map(|e| (e, 0)).collect();
        while let Some((e, depth)) = stack.pop() {
            render_element(&mut out, e, depth);
            stack.extend(e.children.iter().rev().map(|c| (c, depth + 1)));
        }
        sections.push(out);
    }

    if !doc.relations.is_empty() {
        let mut edges: Vec<&RelationEdge> = doc.relations.iter().collect();
        edges.sort_by(|a, b| a.key().cmp(&b.key()));
        let mut out = String::from("@relations\n");
        for e in edges {
            writeln!(out, "{} {} {}", e.from, e.kind, e.to).unwrap();
        }
        out.push_str("@end\n");
        sections.push(out);
    }

    sections.join("\n")
}

fn render_element(out: &mut String, e: &RequirementElement, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    write!(out, "[{}] {}", e.id, e.classification).unwrap();
    if e.notation.as_str() != "text" {
        write!(out, " {}", e.notation).unwrap();
    }
    writeln!(out, " :: {}", quote(&e.text)).unwrap();
}
