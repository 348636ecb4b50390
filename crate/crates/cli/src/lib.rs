//! Command-line front end: expression parsing, configuration and suite driving.

pub mod config;
pub mod error;
pub mod parse;
pub mod run;

pub use config::{Caps, ConfigFile, Format, Overrides, RunConfig};
pub use error::CliError;
pub use parse::{parse_element, parse_expr, Element, ParseOptions};
pub use run::{run_args, run_command, Cli, Command, Exit, Outcome};
