//! Requirement-element and relation taxonomies as a checked annotation
//! format: parse `.srs` documents, derive relations, lint and report.

pub mod format;
pub mod lint;
pub mod relation;
pub mod report;
pub mod taxonomy;

#[cfg(any(test, feature = "testkit"))]
pub mod testkit;
