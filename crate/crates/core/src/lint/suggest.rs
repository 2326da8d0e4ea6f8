use std::sync::OnceLock;

use regex::Regex;
use serde::Serialize;

use crate::taxonomy::{Category, Subcategory};

/// One advisory label with the cascade step that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Suggestion {
    pub category: Category,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcategory: Option<Subcategory>,
    pub pattern: &'static str,
}

struct Rule {
    name: &'static str,
    category: Category,
    subcategory: Option<Subcategory>,
    test: fn(&Patterns, &str) -> bool,
}

struct Patterns {
    heading: Regex,
    verb: Regex,
    limit: Regex,
    role: Regex,
    shall_verb: Regex,
    constraint: Regex,
    goal: Regex,
    person: Regex,
}

fn patterns() -> &'static Patterns {
    static PATTERNS: OnceLock<Patterns> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let re = |p: &str| Regex::new(p).expect("built-in pattern");
        Patterns {
            heading: re(r#"(?i)^\W*(?:(?:section|chapter|part|appendix)\s+)?\d+(?:\.\d+)*\.?[:.]?\s*\W*\p{L}"#),
            verb: re(r"(?i)\b(?:shall|must|will|should|is|are|was|were|be|can|may|has|have|does|do)\b"),
            limit: re(r"(?i)\bnot\s+(?:be\s+)?part\s+of\b|\boutside\s+(?:of\s+)?the\s+scope\b|\bwill\s+be\s+performed\s+in\s+a\s+follow-up\b"),
            role: re(r"(?i)\bshall\s+be\s+responsible\b|\bshall\s+be\s+designed\s+for\s+operation\s+by\b"),
            shall_verb: re(r"(?i)\bshall\s+([a-z]+)\b"),
            constraint: re(r"(?i)\b(?:must|shall)\s+not\s+exceed\b|\bat\s+least\s+\S+?\s*%|\brequires?\s+(?:that|authori[sz]ation|approval)\b"),
            goal: re(r"(?i)\bthe\s+goal\b|\ballow\s+(?:\S+\s+){1,3}?to\b|\bthis\s+will\s+reduce\b"),
            person: re(r"(?i)\b(?:agent|agents|customer|customers|user|users|staff|employee|employees|manager|managers|administrator|administrators|person|people|team|department|group|company|clerk|operator|operators|client|clients|buyer|seller|owner|owners|representative|organization|organisation|accounting|shipping|marketing)\b"),
        }
    })
}

fn words(s: &str) -> usize {
    s.split_whitespace().count()
}

const CASCADE: &[Rule] = &[
    Rule {
        name: "heading",
        category: Category::MetaRequirement,
        subcategory: None,
        test: |p, s| p.heading.is_match(s) && !p.verb.is_match(s) && words(s) <= 8 && !s.ends_with('.'),
    },
    Rule {
        name: "scope-exclusion",
        category: Category::Limit,
        subcategory: None,
        test: |p, s| p.limit.is_match(s),
    },
    Rule {
        name: "responsibility",
        category: Category::Role,
        subcategory: None,
        test: |p, s| p.role.is_match(s),
    },
    Rule {
        name: "shall-verb",
        category: Category::Behavior,
        subcategory: None,
        test: |p, s| {
            p.shall_verb.captures_iter(s).any(|c| {
                let verb = c[1].to_ascii_lowercase();
                verb != "be" && verb != "not"
            })
        },
    },
    Rule {
        name: "bound",
        category: Category::Constraint,
        subcategory: None,
        test: |p, s| p.constraint.is_match(s),
    },
    Rule {
        name: "objective",
        category: Category::Goal,
        subcategory: None,
        test: |p, s| p.goal.is_match(s),
    },
    Rule {
        name: "person-or-group",
        category: Category::Component,
        subcategory: Some(Subcategory::Actor),
        test: |p, s| words(s) <= 4 && !p.verb.is_match(s) && p.person.is_match(s),
    },
];

/// Advisory labels for a statement, from a fixed pattern cascade. The first
/// matching step is ranked first; an empty result means no pattern applied.
pub fn suggest_category(statement: &str) -> Vec<Suggestion> {
    let p = patterns();
    let s = statement
        .trim()
        .trim_matches(|c| matches!(c, '"' | '\u{201c}' | '\u{201d}' | '*'));
    let s = s.trim();
    let mut out: Vec<Suggestion> = Vec::new();
    if s.is_empty() {
        return out;
    }
    for rule in CASCADE {
        if out.iter().any(|x| x.category == rule.category) {
            continue;
        }
        if (rule.test)(p, s) {
            out.push(Suggestion {
                category: rule.category,
                subcategory: rule.subcategory,
                pattern: rule.name,
            });
        }
    }
    out
}
