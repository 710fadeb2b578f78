//! Command-line front end for the `seshadri` library.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;
pub mod verify;

pub use error::CliError;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}
