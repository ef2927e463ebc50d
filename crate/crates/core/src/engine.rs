//! Exact and floating-point betweenness engines.
//!
//! Scores follow the unordered-pair convention: for each pair `{s, t}` with
//! `s != v != t`, vertex `v` receives `σ_st(v) / σ_st`. The star hub on `n`
//! vertices scores `C(n-1, 2)`. Disconnected pairs contribute nothing.
//!
//! [`betweenness_exact`] accumulates per-source dependencies over the
//! shortest-path DAG in exact rationals. [`betweenness_bruteforce`] walks
//! every geodesic explicitly and shares no code with it beyond [`Graph`],
//! so the two can be used as oracles for each other.

use std::collections::VecDeque;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`betweenness_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 14;

/// Sources per block in the float engine. Partial sums are formed per block
/// in ascending source order and then added block by block, so the result is
/// bit-identical for any thread count.
const FLOAT_BLOCK: usize = 64;

/// Per-vertex exact betweenness scores.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreVector {
    scores: Vec<BigRational>,
}

impl ScoreVector {
    pub fn new(scores: Vec<BigRational>) -> Self {
        ScoreVector { scores }
    }

    pub fn zeros(n: usize) -> Self {
        ScoreVector {
            scores: vec![BigRational::zero(); n],
        }
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_ratios(values: &[(i64, i64)]) -> Self {
        ScoreVector::new(values.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    pub fn n(&self) -> usize {
        self.scores.len()
    }

    pub fn scores(&self) -> &[BigRational] {
        &self.scores
    }

    pub fn into_inner(self) -> Vec<BigRational> {
        self.scores
    }

    pub fn get(&self, v: usize) -> &BigRational {
        &self.scores[v]
    }

    pub fn total(&self) -> BigRational {
        self.scores
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Smallest vertex id attaining the maximum score.
    pub fn argmax(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (v, x) in self.scores.iter().enumerate() {
            if best.is_none_or(|b| *x > self.scores[b]) {
                best = Some(v);
            }
        }
        best
    }

    pub fn is_uniform(&self) -> bool {
        self.scores.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.scores.iter().map(rational_to_f64).collect()
    }

    /// Largest `|self[v] - other[v]|`; `None` when the lengths differ.
    pub fn max_abs_difference(&self, other: &ScoreVector) -> Option<BigRational> {
        if self.n() != other.n() {
            return None;
        }
        Some(
            self.scores
                .iter()
                .zip(&other.scores)
                .map(|(a, b)| (a - b).abs())
                .fold(BigRational::zero(), |acc, d| if d > acc { d } else { acc }),
        )
    }
}

impl std::ops::Index<usize> for ScoreVector {
    type Output = BigRational;

    fn index(&self, v: usize) -> &BigRational {
        &self.scores[v]
    }
}

pub(crate) fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Execution settings shared by the engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// `0` uses the global rayon pool, `1` runs on the calling thread only,
    /// any other value runs on a dedicated pool of that size.
    pub threads: usize,
    /// Vertex limit for [`betweenness_bruteforce`].
    pub bruteforce_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            threads: 0,
            bruteforce_cap: BRUTEFORCE_CAP,
        }
    }
}

impl EngineConfig {
    pub fn single_threaded() -> Self {
        EngineConfig {
            threads: 1,
            ..Default::default()
        }
    }

    pub fn with_threads(threads: usize) -> Self {
        EngineConfig {
            threads,
            ..Default::default()
        }
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            0 | 1 => job(),
            k => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool.install(job),
                Err(_) => job(),
            },
        }
    }
}

/// Exact betweenness by per-source dependency accumulation.
pub fn betweenness_exact(g: &Graph) -> ScoreVector {
    betweenness_exact_with(g, &EngineConfig::default())
}

pub fn betweenness_exact_with(g: &Graph, config: &EngineConfig) -> ScoreVector {
    let n = g.order();
    let merge = |mut acc: Vec<BigRational>, part: Vec<BigRational>| {
        for (a, p) in acc.iter_mut().zip(part) {
            *a += p;
        }
        acc
    };
    let doubled = if config.threads == 1 {
        (0..n)
            .map(|s| exact_dependencies(g, s))
            .fold(vec![BigRational::zero(); n], merge)
    } else {
        config.run(|| {
            (0..n)
                .into_par_iter()
                .map(|s| exact_dependencies(g, s))
                .reduce(|| vec![BigRational::zero(); n], merge)
        })
    };
    // each unordered pair was counted from both endpoints
    let two = BigRational::from_integer(BigInt::from(2));
    ScoreVector::new(doubled.into_iter().map(|x| x / &two).collect())
}

/// δ_s(v) = Σ_t σ_st(v)/σ_st for one source, with δ_s(s) reset to zero.
fn exact_dependencies(g: &Graph, s: usize) -> Vec<BigRational> {
    let profile = g.bfs_profile(s).expect("source in range");
    let mut delta = vec![BigRational::zero(); g.order()];
    for &w in profile.order.iter().rev() {
        if profile.predecessors[w].is_empty() {
            continue;
        }
        let sigma_w = BigInt::from(profile.sigma[w].clone());
        let coeff = (BigRational::one() + &delta[w]) / BigRational::from_integer(sigma_w);
        for &p in &profile.predecessors[w] {
            let sigma_p = BigRational::from_integer(BigInt::from(profile.sigma[p].clone()));
            delta[p] += sigma_p * &coeff;
        }
    }
    delta[s] = BigRational::zero();
    delta
}

/// Exact betweenness by enumerating every geodesic of every pair.
///
/// Distances come from Floyd–Warshall and paths from a depth-first walk, so
/// nothing is shared with the accumulation engine. Fails above
/// `config.bruteforce_cap` vertices.
pub fn betweenness_bruteforce(g: &Graph) -> Result<ScoreVector> {
    betweenness_bruteforce_with(g, &EngineConfig::default())
}

pub fn betweenness_bruteforce_with(g: &Graph, config: &EngineConfig) -> Result<ScoreVector> {
    let n = g.order();
    if n > config.bruteforce_cap {
        return Err(Error::TooLarge {
            n,
            cap: config.bruteforce_cap,
        });
    }
    const INF: usize = usize::MAX / 4;
    let mut dist = vec![vec![INF; n]; n];
    for (u, row) in dist.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }

    let mut scores = vec![BigRational::zero(); n];
    let mut through = vec![0u64; n];
    for s in 0..n {
        for t in s + 1..n {
            let d = dist[s][t];
            if d == INF || d < 2 {
                continue;
            }
            through.iter_mut().for_each(|c| *c = 0);
            let mut path = vec![s];
            let total = walk_geodesics(g, &dist, t, &mut path, &mut through);
            for (v, &count) in through.iter().enumerate() {
                if count > 0 {
                    scores[v] += ratio(count as i64, total as i64);
                }
            }
        }
    }
    Ok(ScoreVector::new(scores))
}

/// Extends `path` towards `t` along distance-decreasing edges; returns the
/// number of completed geodesics and tallies their interior vertices.
fn walk_geodesics(
    g: &Graph,
    dist: &[Vec<usize>],
    t: usize,
    path: &mut Vec<usize>,
    through: &mut [u64],
) -> u64 {
    let v = *path.last().expect("nonempty");
    if v == t {
        for &x in &path[1..path.len() - 1] {
            through[x] += 1;
        }
        return 1;
    }
    let mut found = 0;
    for &w in g.neighbors(v) {
        if dist[w][t] + 1 == dist[v][t] {
            path.push(w);
            found += walk_geodesics(g, dist, t, path, through);
            path.pop();
        }
    }
    found
}

/// Double-precision betweenness with a fixed summation order.
pub fn betweenness_float(g: &Graph) -> Vec<f64> {
    betweenness_float_with(g, &EngineConfig::default())
}

pub fn betweenness_float_with(g: &Graph, config: &EngineConfig) -> Vec<f64> {
    let n = g.order();
    let blocks: Vec<Range<usize>> = (0..n)
        .step_by(FLOAT_BLOCK)
        .map(|start| start..(start + FLOAT_BLOCK).min(n))
        .collect();
    let partials: Vec<Vec<f64>> = if config.threads == 1 {
        blocks.into_iter().map(|b| float_block(g, b)).collect()
    } else {
        config.run(|| blocks.into_par_iter().map(|b| float_block(g, b)).collect())
    };
    let mut scores = vec![0.0; n];
    for part in partials {
        for (acc, x) in scores.iter_mut().zip(part) {
            *acc += x;
        }
    }
    for x in &mut scores {
        *x /= 2.0;
    }
    scores
}

fn float_block(g: &Graph, sources: Range<usize>) -> Vec<f64> {
    let n = g.order();
    let mut acc = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0f64; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    for s in sources {
        for &v in &order {
            dist[v] = usize::MAX;
            sigma[v] = 0.0;
            delta[v] = 0.0;
        }
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        for &w in order.iter().rev() {
            let coeff = (1.0 + delta[w]) / sigma[w];
            for &p in g.neighbors(w) {
                if dist[p] != usize::MAX && dist[p] + 1 == dist[w] {
                    delta[p] += sigma[p] * coeff;
                }
            }
            if w != s {
                acc[w] += delta[w];
            }
        }
    }
    acc
}

/// Σ over unordered connected pairs of `d(s, t) - 1`: the total interior
/// credit every betweenness vector on `g` must add up to.
pub fn interior_credit(g: &Graph) -> BigInt {
    let mut total = BigInt::zero();
    for s in 0..g.order() {
        for (t, d) in g
            .distances_from(s)
            .expect("in range")
            .into_iter()
            .enumerate()
        {
            if let Some(d) = d {
                if t > s {
                    total += BigInt::from(d - 1);
                }
            }
        }
    }
    total
}
