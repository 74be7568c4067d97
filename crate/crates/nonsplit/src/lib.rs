//! File formats, tables, figures and the command line on top of
//! [`nonsplit_core`].

pub use nonsplit_core as core;

pub mod cli;
pub mod figure;
pub mod json;
pub mod parse;
pub mod report;
pub mod table;
