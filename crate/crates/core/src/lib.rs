//! Exact betweenness centrality for unweighted graphs, Freeman
//! centralization, and closed-form results for special graph families.
//!
//! ```
//! use centrality_core::{betweenness_exact, closed_form, generate, FamilySpec};
//!
//! let spec = FamilySpec::Hypercube(3);
//! let scores = betweenness_exact(&generate(&spec).unwrap());
//! assert_eq!(scores, closed_form(&spec).unwrap().per_vertex);
//! ```

pub mod centralization;
pub mod closed_forms;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;

pub use centralization::{graph_centralization, relative_centrality, CentralizationSummary};
pub use closed_forms::{closed_form, FormulaResult};
pub use engine::{
    betweenness_bruteforce, betweenness_exact, betweenness_float, EngineConfig, ScoreVector,
};
pub use error::{Error, Result};
pub use generators::{default_range, family_grid, generate, verify_family, Family, FamilySpec};
pub use graph::{GeodesicProfile, Graph};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
