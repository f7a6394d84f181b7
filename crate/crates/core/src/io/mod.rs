//! File formats: algebra text files, DOT export and JSON-lines catalogs.

mod catalog;
mod dot;
mod text;

pub use catalog::{read_catalog, write_catalog};
pub use dot::export_dot;
pub use text::{parse_algebra, serialize_algebra, Diagnostic, ParseError};
