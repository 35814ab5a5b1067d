//! File formats and the command-line front end for `g2kit-core`.

pub mod cli;
pub mod json;
pub mod latex;
