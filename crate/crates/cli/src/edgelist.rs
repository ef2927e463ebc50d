//! Plain-text edge lists.
//!
//! One edge per line as two decimal vertex ids separated by whitespace.
//! `#` starts a comment, blank lines are ignored, and an optional
//! `n=<count>` line fixes the vertex count (otherwise max id + 1).

use std::fs;
use std::path::Path;

use centrality_core::Graph;

use crate::error::{CliError, Result};

/// Parsed edge list before graph construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn into_graph(self) -> Result<Graph> {
        Ok(Graph::from_edges(self.n, self.edges)?)
    }
}

pub fn parse(text: &str) -> Result<EdgeList> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| CliError::Usage(format!("line {}: {what}: {raw:?}", lineno + 1));
        if let Some(count) = line.strip_prefix("n=") {
            if declared.is_some() {
                return Err(bad("duplicate n= header"));
            }
            if !edges.is_empty() {
                return Err(bad("n= header after first edge"));
            }
            declared = Some(
                count
                    .trim()
                    .parse()
                    .map_err(|_| bad("invalid vertex count"))?,
            );
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(u), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected two vertex ids"));
        };
        let u: usize = u.parse().map_err(|_| bad("invalid vertex id"))?;
        let v: usize = v.parse().map_err(|_| bad("invalid vertex id"))?;
        edges.push((u, v));
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(CliError::Usage(format!(
                "header declares n={n} but vertex {} appears",
                inferred - 1
            )))
        }
        Some(n) => n,
        None => inferred,
    };
    if n == 0 {
        return Err(CliError::Usage("edge list describes an empty graph".into()));
    }
    Ok(EdgeList { n, edges })
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)?.into_graph()
}

/// Canonical serialization: `n=<count>` header, then edges `u v` with
/// `u < v` in lexicographic order.
pub fn format(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
