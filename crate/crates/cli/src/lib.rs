//! Command-line front end for the `apolarity` engine: a polynomial parser,
//! one subcommand per engine operation, and a `verify-paper` suite.

pub mod commands;
pub mod parse;
pub mod verify;

pub use commands::{run, Outcome};
pub use parse::{parse_poly, ParseError, PolyText};
