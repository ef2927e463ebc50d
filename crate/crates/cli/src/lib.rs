//! Library side of the `centrality` command-line tool: edge-list I/O, family
//! spec strings, centrality reports, validation and benchmarking.

pub mod bench;
pub mod edgelist;
pub mod error;
pub mod report;
pub mod spec;
pub mod validate;

use std::path::Path;

use centrality_core::{generate, Graph};

pub use error::{CliError, Result};

/// Resolves a command-line input: a family spec string such as `wheel:7`,
/// or otherwise a path to an edge-list file.
pub fn load_input(input: &str) -> Result<Graph> {
    if spec::is_spec(input) {
        Ok(generate(&spec::parse_spec(input)?)?)
    } else {
        edgelist::read_graph(Path::new(input))
    }
}
