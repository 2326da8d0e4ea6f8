use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::category::Category;
use super::classification::Classification;

/// Document-unique element identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(id: impl Into<String>) -> Self {
        ElementId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Characters allowed in an id token: ASCII alphanumerics and `_ - . :`.
    pub fn is_valid_char(c: char) -> bool {
        c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | ':')
    }

    pub fn is_valid(id: &str) -> bool {
        !id.is_empty() && id.chars().all(ElementId::is_valid_char)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for ElementId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl From<&str> for ElementId {
    fn from(s: &str) -> Self {
        ElementId(s.to_string())
    }
}

/// The notation a statement is written in, as a lowercase token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct NotationTag(String);

impl NotationTag {
    pub const CANONICAL: [&'static str; 5] = ["text", "diagram", "table", "formula", "code"];

    /// Returns `None` unless `tag` is a nonempty token of `[a-z0-9_-]`.
    pub fn new(tag: &str) -> Option<Self> {
        let ok = !tag.is_empty()
            && tag
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' || c == '-');
        ok.then(|| NotationTag(tag.to_string()))
    }

    pub fn text() -> Self {
        NotationTag("text".to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_canonical(&self) -> bool {
        NotationTag::CANONICAL.contains(&self.0.as_str())
    }
}

impl Default for NotationTag {
    fn default() -> Self {
        NotationTag::text()
    }
}

impl fmt::Display for NotationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Lowercases and collapses runs of whitespace.
pub fn fold_term(phrase: &str) -> String {
    phrase
        .split_whitespace()
        .map(|w| w.to_lowercase())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlossaryEntry {
    /// The term as written.
    pub term: String,
    pub definition: String,
}

/// Terms and their definitions, keyed by the case-folded term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Glossary {
    entries: BTreeMap<String, GlossaryEntry>,
}

impl Glossary {
    pub fn new() -> Self {
        Glossary::default()
    }

    /// Adds an entry. Returns the rejected entry if its folded term is
    /// already present.
    pub fn insert(&mut self, term: impl Into<String>, definition: impl Into<String>) -> Result<(), GlossaryEntry> {
        let entry = GlossaryEntry {
            term: term.into(),
            definition: definition.into(),
        };
        let key = fold_term(&entry.term);
        if self.entries.contains_key(&key) {
            return Err(entry);
        }
        self.entries.insert(key, entry);
        Ok(())
    }

    pub fn contains(&self, term: &str) -> bool {
        self.entries.contains_key(&fold_term(term))
    }

    pub fn get(&self, term: &str) -> Option<&GlossaryEntry> {
        self.entries.get(&fold_term(term))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries ordered by folded term.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &GlossaryEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }
}

/// One classified statement, possibly with nested sub-requirements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequirementElement {
    pub id: ElementId,
    pub text: String,
    pub notation: NotationTag,
    pub classification: Classification,
    pub children: Vec<RequirementElement>,
    /// 1-based source line; 0 when the element was not parsed from a file.
    pub line: usize,
}

impl RequirementElement {
    pub fn new(id: impl Into<ElementId>, classification: Classification, text: impl Into<String>) -> Self {
        RequirementElement {
            id: id.into(),
            text: text.into(),
            notation: NotationTag::text(),
            classification,
            children: Vec::new(),
            line: 0,
        }
    }

    pub fn with_notation(mut self, notation: NotationTag) -> Self {
        self.notation = notation;
        self
    }

    pub fn with_children(mut self, children: Vec<RequirementElement>) -> Self {
        self.children = children;
        self
    }

    pub fn category(&self) -> Category {
        self.classification.category()
    }

    pub fn is_composite(&self) -> bool {
        !self.children.is_empty()
    }

    pub fn is_elementary(&self) -> bool {
        self.children.is_empty()
    }

    /// Visits this element and all descendants in document order.
    pub fn walk(&self) -> Walk<'_> {
        Walk { stack: vec![self] }
    }
}

impl From<String> for ElementId {
    fn from(s: String) -> Self {
        ElementId(s)
    }
}

/// Pre-order iterator over an element subtree.
pub struct Walk<'a> {
    stack: Vec<&'a RequirementElement>,
}

impl<'a> Iterator for Walk<'a> {
    type Item = &'a RequirementElement;

    fn next(&mut self) -> Option<Self::Item> {
        let next = self.stack.pop()?;
        self.stack.extend(next.children.iter().rev());
        Some(next)
    }
}

/// Whether the direct children of a composite mix basic categories.
///
/// Lack and meta-requirement children are left out of the comparison: a
/// heading inside a composite does not state a property of its own.
/// Subcategories are ignored.
///
/// # Panics
///
/// Panics if `element` is elementary; callers check `is_composite` first.
pub fn is_heterogeneous(element: &RequirementElement) -> bool {
    assert!(
        element.is_composite(),
        "is_heterogeneous called on elementary element `{}`",
        element.id
    );
    let categories: BTreeSet<Category> = element
        .children
        .iter()
        .map(|c| c.category())
        .filter(|c| !matches!(c, Category::Lack | Category::MetaRequirement))
        .collect();
    categories.len() > 1
}
