use std::collections::BTreeMap;

use serde::Serialize;

use crate::format::LinkedDocument;
use crate::relation::{Provenance, RelationKind};
use crate::taxonomy::{is_heterogeneous, Category, Subcategory};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RelationCount {
    pub declared: usize,
    pub derived: usize,
}

/// Counts over one or more documents. Every category, subcategory and
/// relation kind is present, zero or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub documents: usize,
    pub elements: usize,
    pub composite: usize,
    pub elementary: usize,
    pub heterogeneous: usize,
    pub glossary_terms: usize,
    pub categories: BTreeMap<&'static str, usize>,
    pub subcategories: BTreeMap<&'static str, usize>,
    pub relations: BTreeMap<&'static str, RelationCount>,
}

impl Default for Summary {
    fn default() -> Self {
        Summary {
            documents: 0,
            elements: 0,
            composite: 0,
            elementary: 0,
            heterogeneous: 0,
            glossary_terms: 0,
            categories: Category::ALL.iter().map(|c| (c.keyword(), 0)).collect(),
            subcategories: Subcategory::ALL.iter().map(|s| (s.keyword(), 0)).collect(),
            relations: RelationKind::ALL
                .iter()
                .map(|k| (k.keyword(), RelationCount::default()))
                .collect(),
        }
    }
}

impl Summary {
    pub fn of(linked: &LinkedDocument<'_>) -> Summary {
        let mut s = Summary {
            documents: 1,
            glossary_terms: linked.doc.glossary.len(),
            ..Summary::default()
        };
        for e in linked.doc.elements() {
            s.elements += 1;
            if e.is_composite() {
                s.composite += 1;
                if is_heterogeneous(e) {
                    s.heterogeneous += 1;
                }
            } else {
                s.elementary += 1;
            }
            *s.categories.get_mut(e.category().keyword()).expect("all categories") += 1;
            for label in e.classification.labels() {
                *s.subcategories.get_mut(label.keyword()).expect("all subcategories") += 1;
            }
        }
        for edge in linked.all_edges() {
            let slot = s.relations.get_mut(edge.kind.keyword()).expect("all kinds");
            match edge.provenance {
                Provenance::Declared => slot.declared += 1,
                Provenance::Derived => slot.derived += 1,
            }
        }
        s
    }

    pub fn category(&self, c: Category) -> usize {
        self.categories[c.keyword()]
    }

    pub fn relation(&self, k: RelationKind) -> RelationCount {
        self.relations[k.keyword()]
    }

    /// The category with the highest count; ties go to the earlier keyword.
    pub fn most_frequent_category(&self) -> Option<Category> {
        Category::ALL
            .into_iter()
            .filter(|c| self.category(*c) > 0)
            .max_by(|a, b| {
                self.category(*a)
                    .cmp(&self.category(*b))
                    .then(b.keyword().cmp(a.keyword()))
            })
    }

    pub fn merge(&mut self, other: &Summary) {
        self.documents += other.documents;
        self.elements += other.elements;
        self.composite += other.composite;
        self.elementary += other.elementary;
        self.heterogeneous += other.heterogeneous;
        self.glossary_terms += other.glossary_terms;
        for (k, v) in &other.categories {
            *self.categories.entry(k).or_default() += v;
        }
        for (k, v) in &other.subcategories {
            *self.subcategories.entry(k).or_default() += v;
        }
        for (k, v) in &other.relations {
            let slot = self.relations.entry(k).or_default();
            slot.declared += v.declared;
            slot.derived += v.derived;
        }
    }

    /// Plain-text table.
    pub fn table(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "{:<22}{:>8}", "elements", self.elements);
        let _ = writeln!(out, "{:<22}{:>8}", "composite", self.composite);
        let _ = writeln!(out, "{:<22}{:>8}", "elementary", self.elementary);
        let _ = writeln!(out, "{:<22}{:>8}", "heterogeneous", self.heterogeneous);
        let _ = writeln!(out, "{:<22}{:>8}", "glossary terms", self.glossary_terms);
        let _ = writeln!(out, "\n{:<22}{:>8}", "category", "count");
        for c in Category::ALL {
            let _ = writeln!(out, "{:<22}{:>8}", c.name(), self.category(c));
        }
        let _ = writeln!(out, "\n{:<22}{:>8}", "subcategory", "count");
        for sub in Subcategory::ALL {
            let _ = writeln!(out, "{:<22}{:>8}", sub.name(), self.subcategories[sub.keyword()]);
        }
        let _ = writeln!(out, "\n{:<22}{:>8}{:>8}", "relation", "declared", "derived");
        for k in RelationKind::ALL {
            let n = self.relation(k);
            let _ = writeln!(out, "{:<22}{:>8}{:>8}", k.keyword(), n.declared, n.derived);
        }
        out
    }
}
