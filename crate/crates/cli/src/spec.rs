//! Family spec strings: `<family>:<p1>[,<p2>]`, e.g. `wheel:7`, `kmn:2,3`,
//! `hypercube:4`, or `tree:@path/to/file.edges` for a tree given as an edge
//! list.

use std::path::Path;

use centrality_core::{Family, FamilySpec};

use crate::edgelist;
use crate::error::{CliError, Result};

/// True if `s` looks like a spec string (known family name before `:`).
pub fn is_spec(s: &str) -> bool {
    s.split_once(':')
        .is_some_and(|(name, _)| Family::from_name(name).is_some())
}

pub fn parse_spec(s: &str) -> Result<FamilySpec> {
    let usage = |msg: String| CliError::Usage(format!("bad spec {s:?}: {msg}"));
    let (name, args) = s
        .split_once(':')
        .ok_or_else(|| usage("expected <family>:<params>".into()))?;
    let family = Family::from_name(name).ok_or_else(|| {
        let known: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        usage(format!(
            "unknown family, expected one of {}",
            known.join(", ")
        ))
    })?;

    if family == Family::Tree {
        let path = args
            .strip_prefix('@')
            .ok_or_else(|| usage("tree takes @<edge-list file>".into()))?;
        let list = edgelist::parse(
            &std::fs::read_to_string(Path::new(path))
                .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?,
        )?;
        let spec = FamilySpec::Tree {
            order: list.n,
            edges: list.edges,
        };
        spec.validate()?;
        return Ok(spec);
    }

    let params = args
        .split(',')
        .map(|p| {
            if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                return Err(usage(format!(
                    "parameter {p:?} is not a nonnegative integer"
                )));
            }
            p.parse::<usize>()
                .map_err(|_| usage(format!("parameter {p:?} is out of range")))
        })
        .collect::<Result<Vec<_>>>()?;
    let spec = match (family, params.as_slice()) {
        (Family::CompleteBipartite, &[m, n]) => FamilySpec::CompleteBipartite(m, n),
        (Family::CompleteBipartite, _) => return Err(usage("kmn takes two parameters".into())),
        (_, &[p]) => FamilySpec::single(family, p)?,
        _ => return Err(usage(format!("{family} takes one parameter"))),
    };
    spec.validate()?;
    Ok(spec)
}
