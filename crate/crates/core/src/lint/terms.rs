use std::collections::{BTreeMap, BTreeSet};

use super::config::LintConfig;
use crate::format::SrsDocument;

/// Built-in English stopwords, sorted for binary search. Includes modal and
/// auxiliary verbs, which carry no domain meaning in requirement statements.
const STOPWORDS: &[&str] = &[
    "a",
    "about",
    "above",
    "after",
    "again",
    "against",
    "all",
    "also",
    "am",
    "an",
    "and",
    "any",
    "are",
    "as",
    "at",
    "be",
    "because",
    "been",
    "before",
    "being",
    "below",
    "between",
    "both",
    "but",
    "by",
    "can",
    "cannot",
    "could",
    "did",
    "do",
    "does",
    "doing",
    "down",
    "during",
    "each",
    "either",
    "else",
    "etc",
    "every",
    "few",
    "for",
    "from",
    "further",
    "had",
    "has",
    "have",
    "having",
    "he",
    "her",
    "here",
    "hers",
    "herself",
    "him",
    "himself",
    "his",
    "how",
    "i",
    "if",
    "in",
    "into",
    "is",
    "it",
    "its",
    "itself",
    "just",
    "may",
    "me",
    "might",
    "more",
    "most",
    "must",
    "my",
    "myself",
    "neither",
    "no",
    "nor",
    "not",
    "now",
    "of",
    "off",
    "on",
    "once",
    "only",
    "or",
    "other",
    "ought",
    "our",
    "ours",
    "ourselves",
    "out",
    "over",
    "own",
    "same",
    "shall",
    "she",
    "should",
    "so",
    "some",
    "such",
    "than",
    "that",
    "the",
    "their",
    "theirs",
    "them",
    "themselves",
    "then",
    "there",
    "these",
    "they",
    "this",
    "those",
    "through",
    "thus",
    "to",
    "too",
    "under",
    "until",
    "up",
    "upon",
    "us",
    "very",
    "via",
    "was",
    "we",
    "were",
    "what",
    "when",
    "where",
    "whether",
    "which",
    "while",
    "who",
    "whom",
    "whose",
    "why",
    "will",
    "with",
    "within",
    "without",
    "would",
    "you",
    "your",
    "yours",
    "yourself",
    "yourselves",
];

pub fn is_stopword(word: &str) -> bool {
    STOPWORDS.binary_search(&word).is_ok()
}

/// Lowercased word tokens of `text`, with `None` marking a break
/// (punctuation or a discarded word) between runs.
fn tokens<'a>(text: &'a str, extra: &'a BTreeSet<String>) -> impl Iterator<Item = Option<String>> + 'a {
    let is_word_char = |c: char| c.is_alphanumeric() || c == '\'' || c == '-';
    let mut pieces = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let start = rest
            .find(|c: char| is_word_char(c) || c == '\u{2019}')
            .unwrap_or(rest.len());
        if start > 0 {
            // Whitespace alone does not break a run; other punctuation does.
            if rest[..start].chars().any(|c| !c.is_whitespace()) {
                pieces.push(None);
            }
        }
        rest = &rest[start..];
        let end = rest
            .find(|c: char| !(is_word_char(c) || c == '\u{2019}'))
            .unwrap_or(rest.len());
        if end > 0 {
            pieces.push(Some(&rest[..end]));
        }
        rest = &rest[end..];
    }
    pieces.into_iter().map(move |piece| {
        let raw = piece?;
        let mut word = raw.replace('\u{2019}', "'").to_lowercase();
        if let Some(stem) = word.strip_suffix("'s") {
            word = stem.to_string();
        }
        let word = word.trim_matches(|c| c == '\'' || c == '-');
        // Remaining apostrophes mark contractions, which are function words.
        let keep = word.chars().count() >= 2
            && !word.contains('\'')
            && !word.chars().all(|c| c.is_ascii_digit() || c == '-')
            && !is_stopword(word)
            && !extra.contains(word);
        keep.then(|| word.to_string())
    })
}

/// Candidate terms of one statement in order of occurrence.
///
/// Maximal runs of content words of length two or more yield their
/// overlapping bigrams; isolated content words yield a unigram.
pub fn statement_terms(text: &str, extra: &BTreeSet<String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut run: Vec<String> = Vec::new();
    let flush = |run: &mut Vec<String>, out: &mut Vec<String>| match run.len() {
        0 => {}
        1 => out.push(run.pop().unwrap()),
        _ => {
            for pair in run.windows(2) {
                out.push(format!("{} {}", pair[0], pair[1]));
            }
            run.clear();
        }
    };
    for token in tokens(text, extra) {
        match token {
            Some(word) => run.push(word),
            None => flush(&mut run, &mut out),
        }
    }
    flush(&mut run, &mut out);
    out
}

/// Case-folded unigram and bigram counts over every statement.
pub fn extract_terms(doc: &SrsDocument, cfg: &LintConfig) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for e in doc.elements() {
        for term in statement_terms(&e.text, &cfg.lack_stopwords) {
            *counts.entry(term).or_insert(0) += 1;
        }
    }
    counts
}
