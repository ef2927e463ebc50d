//! Closed form versus exact engine, instance by instance.

use std::ops::RangeInclusive;
use std::time::Instant;

use centrality_core::engine::betweenness_exact_with;
use centrality_core::generators::random_tree;
use centrality_core::{
    closed_form, default_range, family_grid, generate, graph_centralization, BigRational,
    EngineConfig, Family, FamilySpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;

/// Number of random trees checked when validating the tree family.
pub const DEFAULT_TREE_COUNT: usize = 500;
pub const DEFAULT_SEED: u64 = 20_231_016;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub vertex: usize,
    pub formula: String,
    pub exact: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub spec: String,
    pub vertex_count: usize,
    pub per_vertex_match: bool,
    /// Largest per-vertex `|formula - exact|`, as `p/q`.
    pub max_abs_discrepancy: String,
    pub centralization_match: bool,
    pub engine_runtime_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.per_vertex_match && self.centralization_match
    }

    pub fn csv_header() -> &'static str {
        "spec,vertex_count,per_vertex_match,max_abs_discrepancy,centralization_match,engine_runtime_ms"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3}",
            self.spec,
            self.vertex_count,
            self.per_vertex_match,
            self.max_abs_discrepancy,
            self.centralization_match,
            self.engine_runtime_ms
        )
    }

    /// Human-readable description of the first failure, if any.
    pub fn failure_message(&self) -> Option<String> {
        if self.passed() {
            return None;
        }
        Some(match &self.first_mismatch {
            Some(m) => format!(
                "{}: vertex {} has closed form {} but exact engine {}",
                self.spec, m.vertex, m.formula, m.exact
            ),
            None => format!("{}: centralization disagrees", self.spec),
        })
    }
}

pub fn validate_instance(spec: &FamilySpec, config: &EngineConfig) -> Result<ValidationReport> {
    let g = generate(spec)?;
    let formula = closed_form(spec)?;
    let start = Instant::now();
    let exact = betweenness_exact_with(&g, config);
    let engine_runtime_ms = start.elapsed().as_secs_f64() * 1e3;

    let discrepancy = exact
        .max_abs_difference(&formula.per_vertex)
        .expect("formula covers every vertex");
    let first_mismatch = (0..g.order())
        .find(|&v| exact[v] != formula.per_vertex[v])
        .map(|v| Mismatch {
            vertex: v,
            formula: formula.per_vertex[v].to_string(),
            exact: exact[v].to_string(),
        });
    let exact_centralization = graph_centralization(&exact).ok().map(|s| s.centralization);
    Ok(ValidationReport {
        spec: spec.to_string(),
        vertex_count: g.order(),
        per_vertex_match: discrepancy == BigRational::from_integer(0.into()),
        max_abs_discrepancy: discrepancy.to_string(),
        centralization_match: formula.centralization == exact_centralization,
        engine_runtime_ms,
        first_mismatch,
    })
}

/// What to validate.
#[derive(Debug, Clone)]
pub struct Plan {
    /// `None` means every family.
    pub family: Option<Family>,
    /// Overrides the family's default parameter range.
    pub range: Option<RangeInclusive<usize>>,
    pub seed: u64,
    pub trees: usize,
}

impl Default for Plan {
    fn default() -> Self {
        Plan {
            family: None,
            range: None,
            seed: DEFAULT_SEED,
            trees: DEFAULT_TREE_COUNT,
        }
    }
}

impl Plan {
    /// Instances in deterministic order: families in declaration order, then
    /// ascending parameters; random trees come last.
    pub fn instances(&self) -> Vec<FamilySpec> {
        let families: Vec<Family> = match self.family {
            Some(f) => vec![f],
            None => Family::ALL.to_vec(),
        };
        let mut specs = Vec::new();
        for family in families {
            let range = self.range.clone().unwrap_or_else(|| default_range(family));
            if family == Family::Tree {
                let lo = (*range.start()).max(family.min_param());
                let hi = *range.end();
                if lo > hi {
                    continue;
                }
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                for _ in 0..self.trees {
                    let order = rng.gen_range(lo..=hi);
                    specs.push(random_tree(order, &mut rng));
                }
            } else {
                specs.extend(family_grid(family, range));
            }
        }
        specs
    }
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single value.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range bound {x:?}"))
    };
    let range = if let Some((a, b)) = s.split_once("..") {
        num(a)?..=num(b.trim_start_matches('='))?
    } else {
        let v = num(s)?;
        v..=v
    };
    if range.start() > range.end() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}
