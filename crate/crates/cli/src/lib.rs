//! Command line and HTTP front end for the `congraph` library.

pub mod commands;
pub mod serve;
