//! Command-line front end for `quatfiber-core`: argument parsing, report
//! serialization and the acceptance suite.

pub mod acceptance;
pub mod args;
pub mod commands;
pub mod report;
