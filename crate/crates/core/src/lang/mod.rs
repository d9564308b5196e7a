//! Textual surface: parser, pretty-printer and ASCII renderer.

pub mod parse;
pub mod pretty;

pub use parse::{parse_diagram, parse_word, ParseError, SourceSpan};
pub use pretty::{pretty_print, render_ascii};
