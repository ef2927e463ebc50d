//! Timing sweeps over a family, with the closed form as a free
//! correctness check on every row.

use std::time::Instant;

use centrality_core::engine::{
    betweenness_bruteforce_with, betweenness_exact_with, betweenness_float_with,
};
use centrality_core::{closed_form, generate, EngineConfig, Family, FamilySpec};

use crate::error::{CliError, Result};
use crate::report::Engine;

/// Relative tolerance for float rows against the closed form.
pub const FLOAT_CHECK_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub param: usize,
    pub n: usize,
    pub engine: Engine,
    /// `None` when the row failed before timing completed.
    pub wall_ms: Option<f64>,
    /// `pass`, `fail`, or `error: <reason>`.
    pub check: String,
}

impl BenchRow {
    pub const HEADER: &'static str = "family,param,n,engine,wall_ms,check";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family,
            self.param,
            self.n,
            self.engine.name(),
            self.wall_ms.map_or(String::new(), |ms| format!("{ms:.3}")),
            self.check.replace(',', ";")
        )
    }
}

/// Parses `a..b`, `a..b:step` (inclusive) or a comma-separated list.
pub fn parse_sweep(s: &str) -> std::result::Result<Vec<usize>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid size {x:?}"))
    };
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (num(hi.trim_start_matches('='))?, num(step)?),
            None => (num(rest.trim_start_matches('='))?, 1),
        };
        let lo = num(lo)?;
        if step == 0 || lo > hi {
            return Err(format!("empty sweep {s:?}"));
        }
        Ok((lo..=hi).step_by(step).collect())
    } else {
        s.split(',').map(num).collect()
    }
}

fn spec_for(family: Family, p: usize) -> Result<FamilySpec> {
    match family {
        Family::CompleteBipartite => Ok(FamilySpec::CompleteBipartite(p, p)),
        Family::Tree => Err(CliError::Usage(
            "tree has no size sweep; use validate".into(),
        )),
        f => Ok(FamilySpec::single(f, p)?),
    }
}

pub fn run(
    family: Family,
    sizes: &[usize],
    engine: Engine,
    config: &EngineConfig,
) -> Result<Vec<BenchRow>> {
    if family == Family::Tree {
        return Err(CliError::Usage(
            "tree has no size sweep; use validate".into(),
        ));
    }
    Ok(sizes
        .iter()
        .map(|&p| bench_one(family, p, engine, config))
        .collect())
}

fn bench_one(family: Family, param: usize, engine: Engine, config: &EngineConfig) -> BenchRow {
    let mut row = BenchRow {
        family,
        param,
        n: 0,
        engine,
        wall_ms: None,
        check: String::new(),
    };
    let spec = match spec_for(family, param) {
        Ok(spec) => spec,
        Err(e) => {
            row.check = format!("error: {e}");
            return row;
        }
    };
    let (g, formula) = match (generate(&spec), closed_form(&spec)) {
        (Ok(g), Ok(f)) => (g, f),
        (Err(e), _) | (_, Err(e)) => {
            row.check = format!("error: {e}");
            return row;
        }
    };
    row.n = g.order();
    let start = Instant::now();
    let passed = match engine {
        Engine::Float => {
            let scores = betweenness_float_with(&g, config);
            row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            scores
                .iter()
                .zip(formula.per_vertex.to_f64())
                .all(|(x, want)| (x - want).abs() <= FLOAT_CHECK_TOLERANCE * want.abs().max(1.0))
        }
        Engine::Exact => {
            let scores = betweenness_exact_with(&g, config);
            row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            scores == formula.per_vertex
        }
        Engine::Bruteforce => match betweenness_bruteforce_with(&g, config) {
            Ok(scores) => {
                row.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
                scores == formula.per_vertex
            }
            Err(e) => {
                row.check = format!("error: {e}");
                return row;
            }
        },
    };
    row.check = if passed { "pass" } else { "fail" }.to_string();
    row
}
