//! Oracles written against the category table and the SHARES definition
//! alone. Shared by the property tests and the acceptance suite.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use reqtax_core::format::SrsDocument;
use reqtax_core::relation::RelationKind;
use reqtax_core::taxonomy::{Classification, RequirementElement};

/// Every valid (category, labels) combination, spelled out by hand from the
/// category table. Labels are listed in canonical order.
pub fn valid_classifications() -> BTreeSet<(String, Vec<String>)> {
    let ordinary = [
        ("component", "actor"),
        ("meta", "justification"),
        ("goal", "obstacle"),
        ("role", "responsibility"),
        ("behavior", "functional"),
        ("behavior", "non-functional"),
    ];
    let mut set = BTreeSet::new();
    for cat in [
        "behavior",
        "component",
        "constraint",
        "goal",
        "lack",
        "limit",
        "meta",
        "product",
        "role",
        "task",
    ] {
        set.insert((cat.to_string(), vec![]));
    }
    for (cat, sub) in ordinary {
        set.insert((cat.to_string(), vec![sub.to_string()]));
    }
    let natures = [None, Some("assumption"), Some("obligation"), Some("invariant")];
    let sources = [
        None,
        Some("business-rule"),
        Some("engineering-decision"),
        Some("physical-rule"),
    ];
    for n in natures {
        for s in sources {
            let labels: Vec<String> = [n, s].into_iter().flatten().map(String::from).collect();
            set.insert(("constraint".to_string(), labels));
        }
    }
    set
}

pub fn oracle_accepts(valid: &BTreeSet<(String, Vec<String>)>, c: &Classification) -> bool {
    // Canonical order: ordinary labels, then nature, then source.
    let rank = |k: &str| match k {
        "assumption" | "obligation" | "invariant" => 1,
        "business-rule" | "engineering-decision" | "physical-rule" => 2,
        _ => 0,
    };
    let mut labels: Vec<&str> = c.labels().iter().map(|l| l.keyword()).collect();
    labels.sort_by_key(|k| rank(k));
    let key = (
        c.category().keyword().to_string(),
        labels.into_iter().map(String::from).collect::<Vec<_>>(),
    );
    valid.contains(&key)
}

/// All unordered pairs {X, Y}, neither inside the other, such that some
/// descendant-or-self of X repeats some descendant-or-self of Y.
pub fn shares_oracle(doc: &SrsDocument) -> BTreeSet<(String, String)> {
    fn collect(e: &RequirementElement, desc: &mut HashMap<String, BTreeSet<String>>) -> BTreeSet<String> {
        let mut mine: BTreeSet<String> = [e.id.to_string()].into_iter().collect();
        for c in &e.children {
            mine.extend(collect(c, desc));
        }
        desc.insert(e.id.to_string(), mine.clone());
        mine
    }
    let mut desc = HashMap::new();
    for r in &doc.roots {
        collect(r, &mut desc);
    }
    let mut reps: BTreeSet<(String, String)> = BTreeSet::new();
    for e in &doc.relations {
        if matches!(
            e.kind,
            RelationKind::Repeats | RelationKind::Duplicates | RelationKind::Explains
        ) {
            reps.insert((e.from.to_string(), e.to.to_string()));
            reps.insert((e.to.to_string(), e.from.to_string()));
        }
    }
    let ids: Vec<String> = desc.keys().cloned().collect();
    let mut out = BTreeSet::new();
    for x in &ids {
        for y in &ids {
            if x >= y || desc[x].contains(y) || desc[y].contains(x) {
                continue;
            }
            let hit = desc[x]
                .iter()
                .any(|a| desc[y].iter().any(|b| reps.contains(&(a.clone(), b.clone()))));
            if hit {
                out.insert((x.clone(), y.clone()));
            }
        }
    }
    out
}
