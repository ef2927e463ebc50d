//! Freeman measures derived from any per-vertex betweenness vector.
//!
//! Relative betweenness divides each score by the star-hub maximum
//! `C(n-1, 2)`. Graph centralization is the summed gap to the top score,
//! normalized by the star's gap `(n-1) * C(n-1, 2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::engine::ScoreVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizationSummary {
    /// Smallest vertex id attaining the maximum score.
    pub max_vertex: usize,
    pub max_value: BigRational,
    pub relative: Vec<BigRational>,
    pub centralization: BigRational,
    /// False when the centralization falls outside `[0, 1]`, which can only
    /// happen for vectors that are not betweenness scores of a graph.
    pub in_range: bool,
}

fn require_three(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::param(format!(
            "centralization needs n >= 3, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// C'(v) = 2 C(v) / ((n-1)(n-2)).
pub fn relative_centrality(scores: &ScoreVector) -> Result<Vec<BigRational>> {
    let n = scores.n();
    require_three(n)?;
    let scale = int(2) / int((n - 1) * (n - 2));
    Ok(scores.scores().iter().map(|c| c * &scale).collect())
}

/// C(G) = 2 Σ (C(v*) - C(v)) / ((n-1)^2 (n-2)).
pub fn centralization_from_scores(scores: &ScoreVector) -> Result<BigRational> {
    let n = scores.n();
    require_three(n)?;
    let max = scores.get(scores.argmax().expect("n >= 3"));
    let gap = scores
        .scores()
        .iter()
        .fold(BigRational::zero(), |acc, c| acc + (max - c));
    Ok(int(2) * gap / int((n - 1) * (n - 1) * (n - 2)))
}

/// C(G) = Σ (C'(v*) - C'(v)) / (n-1), from relative scores.
pub fn centralization_from_relative(relative: &[BigRational]) -> Result<BigRational> {
    let n = relative.len();
    require_three(n)?;
    let max = relative.iter().max().expect("n >= 3");
    let gap = relative
        .iter()
        .fold(BigRational::zero(), |acc, c| acc + (max - c));
    Ok(gap / int(n - 1))
}

/// Computes relative scores and centralization, checking that both
/// normalizations of the centralization index agree.
pub fn graph_centralization(scores: &ScoreVector) -> Result<CentralizationSummary> {
    let relative = relative_centrality(scores)?;
    let centralization = centralization_from_scores(scores)?;
    let via_relative = centralization_from_relative(&relative)?;
    assert_eq!(
        centralization, via_relative,
        "centralization routes disagree"
    );
    let max_vertex = scores.argmax().expect("n >= 3");
    let in_range = centralization >= BigRational::zero() && centralization <= BigRational::one();
    Ok(CentralizationSummary {
        max_vertex,
        max_value: scores.get(max_vertex).clone(),
        relative,
        centralization,
        in_range,
    })
}

/// Floating-point relative scores; `None` for fewer than three vertices.
pub fn relative_centrality_f64(scores: &[f64]) -> Option<Vec<f64>> {
    let n = scores.len();
    if n < 3 {
        return None;
    }
    let scale = 2.0 / ((n - 1) * (n - 2)) as f64;
    Some(scores.iter().map(|c| c * scale).collect())
}

/// Floating-point centralization; `None` for fewer than three vertices.
pub fn centralization_f64(scores: &[f64]) -> Option<f64> {
    let n = scores.len();
    if n < 3 {
        return None;
    }
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let gap: f64 = scores.iter().map(|c| max - c).sum();
    Some(2.0 * gap / ((n - 1) * (n - 1) * (n - 2)) as f64)
}
