//! Command-line front end and verification harness.

pub mod checks;
pub mod commands;
pub mod manifest;
