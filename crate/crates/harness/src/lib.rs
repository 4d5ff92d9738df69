//! File formats, instance generation, reports and the command-line driver
//! for [`rpaths_core`].

pub mod cli;
pub mod format;
pub mod generate;
pub mod report;
pub mod runner;

pub use format::{parse_graph, write_graph, FormatError, Instance};
pub use generate::{generate_graph, GenError, WeightMode};
