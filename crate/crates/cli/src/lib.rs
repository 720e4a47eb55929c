//! Presentation-file parsing and text rendering for the `fistab` binary.

pub mod format;
pub mod render;

pub use format::{parse_presentation, serialize_presentation, ParseError};
