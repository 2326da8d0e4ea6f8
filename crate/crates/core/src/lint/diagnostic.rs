use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "error" => Ok(Severity::Error),
            "warning" | "warn" => Ok(Severity::Warning),
            "info" => Ok(Severity::Info),
            other => Err(format!("unknown severity `{other}` (expected error, warning or info)")),
        }
    }
}

/// Registered lint rules. The ids are stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::R1 => "invalid-classification",
            RuleId::R2 => "relation-endpoint",
            RuleId::R3 => "heterogeneous-composite",
            RuleId::R4 => "duplicate",
            RuleId::R5 => "contradiction",
            RuleId::R6 => "lack-glossary",
            RuleId::R7 => "structure",
            RuleId::R8 => "component-not-in-glossary",
            RuleId::R9 => "unrefined-constraint",
        }
    }

    /// Severity before config overrides. R7 findings carry their own
    /// severity; this is the one used for the most serious of them.
    pub fn default_severity(self) -> Severity {
        match self {
            RuleId::R1 | RuleId::R2 | RuleId::R4 | RuleId::R7 => Severity::Error,
            RuleId::R3 | RuleId::R6 | RuleId::R8 => Severity::Warning,
            RuleId::R5 | RuleId::R9 => Severity::Info,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for RuleId {
    type Err = String;

    /// Accepts the code (`R3`, `r3`) or the rule name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        RuleId::ALL
            .into_iter()
            .find(|r| r.code().eq_ignore_ascii_case(s) || r.name() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub rule: RuleId,
    pub severity: Severity,
    /// Element ids the finding is about; never empty.
    pub subjects: Vec<String>,
    pub message: String,
    pub file: String,
    pub line: Option<usize>,
}

impl Diagnostic {
    pub fn new(
        rule: RuleId,
        subjects: Vec<String>,
        message: impl Into<String>,
        file: &str,
        line: Option<usize>,
    ) -> Self {
        debug_assert!(!subjects.is_empty(), "diagnostic without subjects");
        Diagnostic {
            rule,
            severity: rule.default_severity(),
            subjects,
            message: message.into(),
            file: file.to_string(),
            line,
        }
    }

    pub fn with_severity(mut self, severity: Severity) -> Self {
        self.severity = severity;
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{line}: ", self.file)?,
            None => write!(f, "{}: ", self.file)?,
        }
        write!(
            f,
            "{} {} [{}] {}",
            self.severity,
            self.rule,
            self.rule.name(),
            self.message
        )
    }
}
