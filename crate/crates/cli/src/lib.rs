//! Parsing, serialization and rendering for the `multishell` binary.

pub mod document;
pub mod parse;
pub mod render;

pub use document::{parse_input, InputDocument, InputError};
pub use parse::{parse_ideal, ParseError};
