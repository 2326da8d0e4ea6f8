use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use thiserror::Error;

use super::diagnostic::{RuleId, Severity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintConfig {
    pub severity: BTreeMap<RuleId, Severity>,
    /// Occurrences needed before an unglossed term is reported; at least 2.
    pub lack_min_occurrences: usize,
    /// Extra words ignored by term extraction.
    pub lack_stopwords: BTreeSet<String>,
    pub enabled: BTreeSet<RuleId>,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            severity: BTreeMap::new(),
            lack_min_occurrences: 3,
            lack_stopwords: BTreeSet::new(),
            enabled: RuleId::ALL.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("config line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl LintConfig {
    pub fn is_enabled(&self, rule: RuleId) -> bool {
        self.enabled.contains(&rule)
    }

    /// The override for `rule`, if any.
    pub fn severity_of(&self, rule: RuleId) -> Option<Severity> {
        self.severity.get(&rule).copied()
    }

    pub fn set_lack_min_occurrences(&mut self, n: usize) -> Result<(), String> {
        if n < 2 {
            return Err(format!("lack_min_occurrences must be at least 2 (got {n})"));
        }
        self.lack_min_occurrences = n;
        Ok(())
    }
}

fn rule_list(value: &str) -> Result<BTreeSet<RuleId>, String> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(RuleId::from_str)
        .collect()
}

/// Parses the `key = value` config format:
///
/// ```text
/// lack_min_occurrences = 4
/// lack_stopwords = system, user
/// rules = R1 R2 R4      # enabled set; default is all
/// disable = R9
/// severity.R3 = error
/// ```
impl FromStr for LintConfig {
    type Err = ConfigError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let mut cfg = LintConfig::default();
        for (i, raw) in input.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| ConfigError { line, message };
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let (key, value) = text
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, found `{text}`")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "lack_min_occurrences" => {
                    let n: usize = value
                        .parse()
                        .map_err(|_| err(format!("`{value}` is not a non-negative integer")))?;
                    cfg.set_lack_min_occurrences(n).map_err(err)?;
                }
                "lack_stopwords" => {
                    cfg.lack_stopwords.extend(
                        value
                            .split(|c: char| c == ',' || c.is_whitespace())
                            .filter(|w| !w.is_empty())
                            .map(str::to_lowercase),
                    );
                }
                "rules" => cfg.enabled = rule_list(value).map_err(err)?,
                "disable" => {
                    for rule in rule_list(value).map_err(err)? {
                        cfg.enabled.remove(&rule);
                    }
                }
                _ => {
                    let Some(rule) = key.strip_prefix("severity.") else {
                        return Err(err(format!("unknown key `{key}`")));
                    };
                    let rule = RuleId::from_str(rule).map_err(err)?;
                    let severity = Severity::from_str(value).map_err(err)?;
                    cfg.severity.insert(rule, severity);
                }
            }
        }
        Ok(cfg)
    }
}
