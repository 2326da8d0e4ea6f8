//! Reports: summaries, exit classes, JSON/text check output and graph
//! export.

mod check;
mod graph;
mod summary;

pub use check::{ExitClass, Failure, Report, REPORT_VERSION};
pub use graph::{graph, Graph, GraphNode};
pub use summary::{RelationCount, Summary};
