//! The `.srs` annotation format: document model, parser, canonical
//! renderer and linking.

mod document;
mod lex;
mod link;
mod parse;
mod render;

pub use document::{Elements, SrsDocument};
pub use link::{link, LinkedDocument};
pub use parse::{parse, parse_named, ParseError, ParseErrorKind, MAX_DEPTH};
pub use render::render;
