//! Framed-link diagrams and their colored Jones invariants.

pub mod builtins;
pub mod diagram;
pub mod engine;

pub use builtins::{builtin, builtin_text, BUILTIN_NAMES};
pub use diagram::{parse_diagram, CrossSign, Diagram, Event, Orient, Strand};
pub use engine::{colored_jones, framing_adjust, jones_multilinear};
