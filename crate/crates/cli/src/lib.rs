pub mod args;
pub mod commands;
pub mod report;

pub use commands::{run, Outcome};
