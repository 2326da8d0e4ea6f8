use std::fmt::Write;

use serde::Serialize;

use super::summary::Summary;
use crate::format::{link, parse_named, ParseError};
use crate::lint::{lint, Diagnostic, LintConfig, Severity};

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExitClass {
    Clean,
    WarningsOnly,
    Errors,
    ParseFailed,
}

impl ExitClass {
    /// Info findings do not change the class.
    pub fn of(diagnostics: &[Diagnostic]) -> ExitClass {
        let worst = diagnostics.iter().map(|d| d.severity).min();
        match worst {
            Some(Severity::Error) => ExitClass::Errors,
            Some(Severity::Warning) => ExitClass::WarningsOnly,
            _ => ExitClass::Clean,
        }
    }

    /// Process exit code. `strict` turns warnings into a failing run.
    pub fn exit_code(self, strict: bool) -> i32 {
        match self {
            ExitClass::Clean => 0,
            ExitClass::WarningsOnly => i32::from(strict),
            ExitClass::Errors => 1,
            ExitClass::ParseFailed => 2,
        }
    }
}

/// A file that could not be read or parsed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub file: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub kind: String,
    pub message: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            file: e.file,
            line: Some(e.line),
            column: Some(e.column),
            kind: e.kind.name().to_string(),
            message: e.message,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub files: Vec<String>,
    pub exit_class: ExitClass,
    pub summary: Summary,
    pub diagnostics: Vec<Diagnostic>,
    pub failures: Vec<Failure>,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            version: REPORT_VERSION,
            files: Vec::new(),
            exit_class: ExitClass::Clean,
            summary: Summary::default(),
            diagnostics: Vec::new(),
            failures: Vec::new(),
        }
    }
}

impl Report {
    /// Parses, links and lints one file's text.
    pub fn check(file: &str, text: &str, cfg: &LintConfig) -> Report {
        let mut report = Report {
            files: vec![file.to_string()],
            ..Report::default()
        };
        match parse_named(file, text) {
            Ok(doc) => {
                let linked = link(&doc);
                report.summary = Summary::of(&linked);
                report.diagnostics = lint(&linked, cfg);
                report.exit_class = ExitClass::of(&report.diagnostics);
            }
            Err(errors) => {
                report.failures = errors.into_iter().map(Failure::from).collect();
                report.exit_class = ExitClass::ParseFailed;
            }
        }
        report
    }

    /// A report for a file that could not be read.
    pub fn unreadable(file: &str, message: impl Into<String>) -> Report {
        Report {
            files: vec![file.to_string()],
            exit_class: ExitClass::ParseFailed,
            failures: vec![Failure {
                file: file.to_string(),
                line: None,
                column: None,
                kind: "io".to_string(),
                message: message.into(),
            }],
            ..Report::default()
        }
    }

    /// Folds another file's report into this one; the class is the worst.
    pub fn merge(&mut self, other: Report) {
        self.files.extend(other.files);
        self.exit_class = self.exit_class.max(other.exit_class);
        self.summary.merge(&other.summary);
        self.diagnostics.extend(other.diagnostics);
        self.failures.extend(other.failures);
    }

    pub fn count(&self, severity: Severity) -> usize {
        self.diagnostics.iter().filter(|d| d.severity == severity).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable form: one line per finding, then a tally.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            match (f.line, f.column) {
                (Some(l), Some(c)) => {
                    let _ = writeln!(out, "{}:{l}:{c}: {}: {}", f.file, f.kind, f.message);
                }
                _ => {
                    let _ = writeln!(out, "{}: {}: {}", f.file, f.kind, f.message);
                }
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "{d}");
        }
        let _ = writeln!(
            out,
            "{} file(s), {} element(s): {} error(s), {} warning(s), {} info, {} parse failure(s)",
            self.files.len(),
            self.summary.elements,
            self.count(Severity::Error),
            self.count(Severity::Warning),
            self.count(Severity::Info),
            self.failures.len()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lint::RuleId;

    #[test]
    fn exit_codes() {
        assert_eq!(ExitClass::Clean.exit_code(false), 0);
        assert_eq!(ExitClass::Clean.exit_code(true), 0);
        assert_eq!(ExitClass::WarningsOnly.exit_code(false), 0);
        assert_eq!(ExitClass::WarningsOnly.exit_code(true), 1);
        assert_eq!(ExitClass::Errors.exit_code(false), 1);
        assert_eq!(ExitClass::ParseFailed.exit_code(true), 2);
    }

    #[test]
    fn duplicate_pair_is_errors() {
        let r = Report::check(
            "d.srs",
            "[a] goal :: x\n[b] goal :: y\n@relations\na REPEATS b\n@end\n",
            &LintConfig::default(),
        );
        assert_eq!(r.exit_class, ExitClass::Errors);
        assert!(r.diagnostics.iter().any(|d| d.rule == RuleId::R4 && d.file == "d.srs"));
    }

    #[test]
    fn parse_failure_still_reports() {
        let r = Report::check("bad.srs", "[x] widget :: \"...\"\n", &LintConfig::default());
        assert_eq!(r.exit_class, ExitClass::ParseFailed);
        assert_eq!(r.failures.len(), 1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["version"], 1);
        assert_eq!(json["exit_class"], "parse_failed");
        assert_eq!(json["failures"][0]["kind"], "unknown-category");
    }

    #[test]
    fn merge_takes_worst() {
        let cfg = LintConfig::default();
        let mut r = Report::check("a.srs", "[a] goal :: x\n", &cfg);
        r.merge(Report::check("b.srs", "[x] widget :: y\n", &cfg));
        assert_eq!(r.exit_class, ExitClass::ParseFailed);
        assert_eq!(r.files, ["a.srs", "b.srs"]);
        assert_eq!(r.summary.documents, 1);
    }
}
