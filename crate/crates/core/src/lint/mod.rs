//! Rule catalog over linked documents, term extraction and the category
//! suggester.

mod config;
mod diagnostic;
mod rules;
mod suggest;
mod terms;

pub use config::{ConfigError, LintConfig};
pub use diagnostic::{Diagnostic, RuleId, Severity};
pub use rules::{head_term, lint};
pub use suggest::{suggest_category, Suggestion};
pub use terms::{extract_terms, is_stopword, statement_terms};
