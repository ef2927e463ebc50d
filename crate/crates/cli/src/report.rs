//! Centrality reports for a single graph.
//!
//! JSON fields: `n`, `engine`, `scores`, `relative`, `centralization`,
//! `max_vertex`, `disconnected`. Exact values are strings (`"5/2"`, `"3"`);
//! floats are numbers with 17 significant digits. `relative` and
//! `centralization` are `null` below three vertices.

use std::fmt::Write as _;
use std::str::FromStr;

use centrality_core::centralization::{centralization_f64, relative_centrality_f64};
use centrality_core::engine::{
    betweenness_bruteforce_with, betweenness_exact_with, betweenness_float_with,
};
use centrality_core::{graph_centralization, BigRational, EngineConfig, Graph};
use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Exact,
    Float,
    Bruteforce,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Exact => "exact",
            Engine::Float => "float",
            Engine::Bruteforce => "bruteforce",
        }
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(Engine::Exact),
            "float" => Ok(Engine::Float),
            "bruteforce" => Ok(Engine::Bruteforce),
            other => Err(format!(
                "unknown engine {other:?} (exact, float, bruteforce)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (json, csv)")),
        }
    }
}

/// A reported quantity: exact rational or double.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Exact(x) => x.to_string(),
            Value::Float(x) => format_float(*x),
        }
    }
}

/// 17 significant digits, scientific notation.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Exact(x) => serializer.serialize_str(&x.to_string()),
            Value::Float(x) => RawValue::from_string(format_float(*x))
                .map_err(serde::ser::Error::custom)?
                .serialize(serializer),
        }
    }
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Report {
    pub n: usize,
    pub engine: &'static str,
    pub scores: Vec<Value>,
    pub relative: Option<Vec<Value>>,
    pub centralization: Option<Value>,
    pub max_vertex: Option<usize>,
    pub disconnected: bool,
}

pub fn compute(g: &Graph, engine: Engine, config: &EngineConfig) -> Result<Report> {
    let n = g.order();
    let disconnected = !g.is_connected();
    let exact_report = |scores: centrality_core::ScoreVector| -> Report {
        let summary = graph_centralization(&scores).ok();
        Report {
            n,
            engine: engine.name(),
            max_vertex: scores.argmax(),
            relative: summary
                .as_ref()
                .map(|s| s.relative.iter().cloned().map(Value::Exact).collect()),
            centralization: summary.map(|s| Value::Exact(s.centralization)),
            scores: scores.into_inner().into_iter().map(Value::Exact).collect(),
            disconnected,
        }
    };
    Ok(match engine {
        Engine::Exact => exact_report(betweenness_exact_with(g, config)),
        Engine::Bruteforce => exact_report(
            betweenness_bruteforce_with(g, config).map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        Engine::Float => {
            let scores = betweenness_float_with(g, config);
            let mut max_vertex = None;
            for (v, &x) in scores.iter().enumerate() {
                if max_vertex.is_none_or(|m: usize| x > scores[m]) {
                    max_vertex = Some(v);
                }
            }
            Report {
                n,
                engine: engine.name(),
                relative: relative_centrality_f64(&scores)
                    .map(|r| r.into_iter().map(Value::Float).collect()),
                centralization: centralization_f64(&scores).map(Value::Float),
                max_vertex,
                scores: scores.into_iter().map(Value::Float).collect(),
                disconnected,
            }
        }
    })
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// `#`-prefixed summary line followed by `vertex,score,relative` rows.
    pub fn to_csv(&self) -> String {
        let opt = |v: &Option<Value>| v.as_ref().map_or("null".to_string(), Value::render);
        let mut out = format!(
            "# n={} engine={} centralization={} max_vertex={} disconnected={}\n",
            self.n,
            self.engine,
            opt(&self.centralization),
            self.max_vertex
                .map_or("null".to_string(), |v| v.to_string()),
            self.disconnected
        );
        out.push_str("vertex,score,relative\n");
        for (v, score) in self.scores.iter().enumerate() {
            let rel = self
                .relative
                .as_ref()
                .map_or("null".to_string(), |r| r[v].render());
            writeln!(out, "{v},{},{rel}", score.render()).expect("string write");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}
