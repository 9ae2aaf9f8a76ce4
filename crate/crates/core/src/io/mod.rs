//! Model files, rendering, and random model generation.

pub mod generate;
pub mod parse;
pub mod render;

pub use generate::{generate_model, Family, GeneratorParams};
pub use parse::{parse_event, parse_model, Diagnostic, ModelDocument};
pub use render::{render_fixpoint, render_model, render_reports, render_trace, Format};
