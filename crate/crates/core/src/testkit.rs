//! Seeded random generators for documents and classifications, shared by
//! the property and acceptance suites.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::SrsDocument;
use crate::relation::{RelationEdge, RelationKind};
use crate::taxonomy::{
    Category, Classification, ConstraintNature, ConstraintSource, Glossary, NotationTag, RequirementElement,
    Subcategory,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Any category with zero to three arbitrary labels; valid or not.
pub fn random_classification<R: Rng>(rng: &mut R) -> Classification {
    let category = *Category::ALL.choose(rng).unwrap();
    let n = rng.random_range(0..=3);
    let labels: Vec<Subcategory> = (0..n).map(|_| *Subcategory::ALL.choose(rng).unwrap()).collect();
    Classification::new(category, labels)
}

/// A classification accepted by the category table.
pub fn random_valid_classification<R: Rng>(rng: &mut R) -> Classification {
    let category = *Category::ALL.choose(rng).unwrap();
    if category == Category::Constraint {
        let natures = [
            ConstraintNature::Assumption,
            ConstraintNature::Obligation,
            ConstraintNature::Invariant,
        ];
        let sources = [
            ConstraintSource::BusinessRule,
            ConstraintSource::EngineeringDecision,
            ConstraintSource::PhysicalRule,
        ];
        let nature = rng.random_bool(0.6).then(|| *natures.choose(rng).unwrap());
        let source = rng.random_bool(0.6).then(|| *sources.choose(rng).unwrap());
        return Classification::constraint(nature, source);
    }
    let compatible: Vec<Subcategory> = Subcategory::ALL
        .into_iter()
        .filter(|s| s.parent() == category)
        .collect();
    if !compatible.is_empty() && rng.random_bool(0.5) {
        Classification::new(category, [*compatible.choose(rng).unwrap()])
    } else {
        Classification::bare(category)
    }
}

#[derive(Debug, Clone)]
pub struct GenOptions {
    pub min_elements: usize,
    pub max_elements: usize,
    pub max_depth: usize,
    /// Declared edges per element, on average.
    pub edge_ratio: f64,
    /// Share of declared edges that are `REPEATS`.
    pub repeats_share: f64,
    pub glossary: bool,
    /// Statements drawn from an awkward alphabet (quotes, `#`, `\`, escapes).
    pub hostile_text: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            min_elements: 1,
            max_elements: 40,
            max_depth: 5,
            edge_ratio: 1.0,
            repeats_share: 0.3,
            glossary: true,
            hostile_text: true,
        }
    }
}

const WORDS: &[&str] = &[
    "order",
    "customer",
    "invoice",
    "agent",
    "system",
    "report",
    "account",
    "shipping",
    "product",
    "payment",
    "login",
    "session",
    "catalog",
    "warehouse",
    "price",
    "search",
    "alert",
    "backup",
];

fn random_text<R: Rng>(rng: &mut R, hostile: bool) -> String {
    let n = rng.random_range(0..8);
    let mut words: Vec<String> = (0..n).map(|_| WORDS.choose(rng).unwrap().to_string()).collect();
    if hostile {
        const ODD: &[&str] = &[
            "\"",
            "\\",
            "#",
            "# not a comment",
            "::",
            "\n",
            "\t",
            "\r",
            " ",
            "  ",
            "é",
            "’",
            "“x”",
            "@end",
            "[id]",
            "\\n",
            "x%",
        ];
        for _ in 0..rng.random_range(0..4) {
            let at = rng.random_range(0..=words.len());
            words.insert(at, ODD.choose(rng).unwrap().to_string());
        }
    }
    words.join(" ")
}

/// A random document satisfying every parser invariant: unique ids, valid
/// classifications, declared notations, resolvable non-self edges.
pub fn random_document<R: Rng>(rng: &mut R, opts: &GenOptions) -> SrsDocument {
    let n = rng.random_range(opts.min_elements..=opts.max_elements.max(opts.min_elements));
    let mut doc = SrsDocument {
        title: if rng.random_bool(0.7) {
            random_text(rng, opts.hostile_text)
        } else {
            String::new()
        },
        ..SrsDocument::default()
    };
    let extra = ["sketch", "uml", "bpmn-2"];
    for tag in extra {
        if rng.random_bool(0.3) {
            doc.notations.insert(NotationTag::new(tag).unwrap());
        }
    }
    let mut notations: Vec<NotationTag> = NotationTag::CANONICAL
        .iter()
        .map(|t| NotationTag::new(t).unwrap())
        .collect();
    notations.extend(doc.notations.iter().cloned());

    if opts.glossary {
        let mut g = Glossary::new();
        for _ in 0..rng.random_range(0..5) {
            let term = format!("{} {}", WORDS.choose(rng).unwrap(), rng.random_range(0..20));
            let def = random_text(rng, opts.hostile_text);
            let _ = g.insert(term, def);
        }
        doc.glossary = g;
    }

    // Parent links with parent index < child index, depth-limited.
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut depth: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        let p = if i > 0 && rng.random_bool(0.6) {
            let cand = rng.random_range(0..i);
            (depth[cand] < opts.max_depth).then_some(cand)
        } else {
            None
        };
        depth.push(p.map_or(0, |p| depth[p] + 1));
        parent.push(p);
    }
    let ids: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut built: Vec<Option<RequirementElement>> = (0..n)
        .map(|i| {
            let notation = if rng.random_bool(0.5) {
                NotationTag::text()
            } else {
                notations.choose(rng).unwrap().clone()
            };
            Some(
                RequirementElement::new(
                    ids[i].as_str(),
                    random_valid_classification(rng),
                    random_text(rng, opts.hostile_text),
                )
                .with_notation(notation),
            )
        })
        .collect();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(i);
        }
    }
    for i in (0..n).rev() {
        let kids: Vec<RequirementElement> = children[i].iter().map(|&c| built[c].take().unwrap()).collect();
        if let Some(e) = built[i].as_mut() {
            e.children = kids;
        }
    }
    doc.roots = (0..n)
        .filter(|&i| parent[i].is_none())
        .map(|i| built[i].take().unwrap())
        .collect();

    if n >= 2 {
        let m = (n as f64 * opts.edge_ratio * rng.random_range(0.0..=1.0)).round() as usize;
        for _ in 0..m {
            let a = rng.random_range(0..n);
            let mut b = rng.random_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let kind = if rng.random_bool(opts.repeats_share) {
                RelationKind::Repeats
            } else {
                *RelationKind::ALL.choose(rng).unwrap()
            };
            doc.relations
                .push(RelationEdge::declared(ids[a].as_str(), kind, ids[b].as_str()));
        }
    }
    doc
}

/// Flat-ish document of exactly `elements` elements and `edges` declared
/// edges, for timing.
pub fn scale_document(seed: u64, elements: usize, edges: usize) -> SrsDocument {
    let mut r = rng(seed);
    let opts = GenOptions {
        min_elements: elements,
        max_elements: elements,
        max_depth: 4,
        edge_ratio: 0.0,
        repeats_share: 0.0,
        glossary: true,
        hostile_text: false,
    };
    let mut doc = random_document(&mut r, &opts);
    let ids: Vec<String> = doc.ids().map(|i| i.to_string()).collect();
    for _ in 0..edges {
        let a = r.random_range(0..elements);
        let mut b = r.random_range(0..elements - 1);
        if b >= a {
            b += 1;
        }
        let kind = *RelationKind::ALL.choose(&mut r).unwrap();
        doc.relations
            .push(RelationEdge::declared(ids[a].as_str(), kind, ids[b].as_str()));
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::validate_classification;

    #[test]
    fn valid_generator_is_valid() {
        let mut r = rng(7);
        for _ in 0..500 {
            let c = random_valid_classification(&mut r);
            assert!(validate_classification(&c).is_empty(), "{c}");
        }
    }

    #[test]
    fn documents_are_reproducible() {
        let a = random_document(&mut rng(3), &GenOptions::default());
        let b = random_document(&mut rng(3), &GenOptions::default());
        assert_eq!(a, b);
    }

    #[test]
    fn scale_shape() {
        let d = scale_document(1, 100, 250);
        assert_eq!(d.element_count(), 100);
        assert_eq!(d.relations.len(), 250);
    }
}
