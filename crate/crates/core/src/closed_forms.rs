//! Closed-form betweenness, relative betweenness and centralization for the
//! special families, indexed by the canonical labelings in
//! [`crate::generators`].
//!
//! Where a family has its own display for relative scores or centralization
//! it is evaluated directly; otherwise the value is derived from the
//! per-vertex scores through [`crate::centralization`]. Both fields are
//! `None` for graphs with fewer than three vertices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::centralization::{centralization_from_scores, relative_centrality};
use crate::engine::{ratio, ScoreVector};
use crate::error::{Error, Result};
use crate::generators::{generate, FamilySpec};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub per_vertex: ScoreVector,
    pub relative: Option<Vec<BigRational>>,
    pub centralization: Option<BigRational>,
}

impl FormulaResult {
    /// Fills relative scores and centralization from the per-vertex scores.
    fn derived(per_vertex: ScoreVector) -> Self {
        let relative = relative_centrality(&per_vertex).ok();
        let centralization = centralization_from_scores(&per_vertex).ok();
        FormulaResult {
            per_vertex,
            relative,
            centralization,
        }
    }

    fn with_displays(
        per_vertex: ScoreVector,
        relative: impl Fn(&BigRational) -> BigRational,
        centralization: BigRational,
    ) -> Self {
        if per_vertex.n() < 3 {
            return Self::derived(per_vertex);
        }
        let relative = per_vertex.scores().iter().map(relative).collect();
        FormulaResult {
            per_vertex,
            relative: Some(relative),
            centralization: Some(centralization),
        }
    }
}

fn int(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(p: usize, q: usize) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::param(format!(
            "{name} requires parameter >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

/// Wheel on `n` vertices (hub 0). Hub `(n-1)(n-5)/2` and rim `1/2` for
/// `n > 5`; `W_4 = K_4` scores zero and `W_5` has hub `2/3`, rim `1/3`.
pub fn wheel_centrality(n: usize) -> Result<FormulaResult> {
    at_least("wheel", n, 4)?;
    let rim = |value: BigRational| vec![value; n];
    match n {
        4 => Ok(FormulaResult::derived(ScoreVector::zeros(4))),
        5 => {
            let mut scores = rim(ratio(1, 3));
            scores[0] = ratio(2, 3);
            Ok(FormulaResult::derived(ScoreVector::new(scores)))
        }
        _ => {
            let mut scores = rim(ratio(1, 2));
            scores[0] = frac((n - 1) * (n - 5), 2);
            let mut relative = vec![frac(1, (n - 1) * (n - 2)); n];
            relative[0] = frac(n - 5, n - 2);
            let centralization = frac(n * n - 6 * n + 4, (n - 1) * (n - 2));
            Ok(FormulaResult {
                per_vertex: ScoreVector::new(scores),
                relative: Some(relative),
                centralization: Some(centralization),
            })
        }
    }
}

/// `K_n` minus the edge `(0, 1)`: the two endpoints score zero, every other
/// vertex `1/(n-2)`.
pub fn complete_minus_edge_centrality(n: usize) -> Result<FormulaResult> {
    at_least("kminus", n, 3)?;
    let mut scores = vec![frac(1, n - 2); n];
    scores[0] = BigRational::zero();
    scores[1] = BigRational::zero();
    let mut relative = vec![frac(2, (n - 1) * (n - 2) * (n - 2)); n];
    relative[0] = BigRational::zero();
    relative[1] = BigRational::zero();
    Ok(FormulaResult {
        per_vertex: ScoreVector::new(scores),
        relative: Some(relative),
        centralization: Some(frac(4, (n - 1) * (n - 1) * (n - 2) * (n - 2))),
    })
}

/// `K_{m,n}` with side U = `0..m` (degree `n`) and side W = `m..m+n`.
pub fn complete_bipartite_centrality(m: usize, n: usize) -> Result<FormulaResult> {
    at_least("kmn", m, 1)?;
    at_least("kmn", n, 1)?;
    let u_score = frac(choose2(n), m);
    let w_score = frac(choose2(m), n);
    let scores: Vec<BigRational> = (0..m)
        .map(|_| u_score.clone())
        .chain((0..n).map(|_| w_score.clone()))
        .collect();
    let total = m + n;
    let centralization = if total < 3 {
        BigRational::zero()
    } else {
        let (m3, n3) = (BigInt::from(m).pow(3), BigInt::from(n).pow(3));
        let (m2, n2) = (BigInt::from(m * m), BigInt::from(n * n));
        let tail = BigInt::from((total - 1) * (total - 1) * (total - 2));
        use std::cmp::Ordering::*;
        match m.cmp(&n) {
            Greater => BigRational::new(m3 - n3 - (m2 - n2), BigInt::from(n) * tail),
            Less => BigRational::new(
                n2 * BigInt::from(n - 1) - m2 * BigInt::from(m - 1),
                BigInt::from(m) * tail,
            ),
            Equal => BigRational::zero(),
        }
    };
    let scale = if total < 3 {
        BigRational::zero()
    } else {
        frac(2, (total - 1) * (total - 2))
    };
    Ok(FormulaResult::with_displays(
        ScoreVector::new(scores),
        |c| c * &scale,
        centralization,
    ))
}

/// Cocktail party graph on `2n` vertices: every vertex scores `1/2`.
pub fn cocktail_party_centrality(n: usize) -> Result<FormulaResult> {
    at_least("cocktail", n, 2)?;
    let order = 2 * n;
    Ok(FormulaResult::with_displays(
        ScoreVector::new(vec![ratio(1, 2); order]),
        |_| frac(1, (2 * n - 1) * (2 * n - 2)),
        BigRational::zero(),
    ))
}

/// Crown graph on `2n` vertices: every vertex scores `(n+1)/2`.
pub fn crown_centrality(n: usize) -> Result<FormulaResult> {
    at_least("crown", n, 3)?;
    Ok(FormulaResult::with_displays(
        ScoreVector::new(vec![frac(n + 1, 2); 2 * n]),
        |_| frac(n + 1, (2 * n - 1) * (2 * n - 2)),
        BigRational::zero(),
    ))
}

/// Path `P_n`: the vertex at 1-indexed position `k` scores `(k-1)(n-k)`.
///
/// Relative scores use `2(k-1)(n-k)/((n-1)(n-2))`; the commonly quoted
/// `2(k-1)n-k)` numerator is a typo for this.
pub fn path_centrality(n: usize) -> Result<FormulaResult> {
    at_least("path", n, 1)?;
    let scores: Vec<BigRational> = (1..=n).map(|k| int((k - 1) * (n - k))).collect();
    if n < 3 {
        return Ok(FormulaResult::derived(ScoreVector::new(scores)));
    }
    let relative = (1..=n)
        .map(|k| frac(2 * (k - 1) * (n - k), (n - 1) * (n - 2)))
        .collect();
    let centralization = if n % 2 == 1 {
        frac(n * (n + 1), 6 * (n - 1) * (n - 2))
    } else {
        frac(n * (n + 2), 6 * (n - 1) * (n - 1))
    };
    Ok(FormulaResult {
        per_vertex: ScoreVector::new(scores),
        relative: Some(relative),
        centralization: Some(centralization),
    })
}

/// Betweenness of the `k`-th vertex (1-indexed) of either row of `L_n`:
///
/// `(k-1)(n-k) + Σ_{j=0}^{k-1} Σ_{i=1}^{n-k} (k-j)/(k-j+i)
///            + Σ_{j=0}^{k-2} Σ_{i=0}^{n-k} (i+1)/(k-j+i)`
///
/// Empty index ranges sum to zero.
pub fn ladder_vertex_value(n: usize, k: usize) -> BigRational {
    assert!((1..=n).contains(&k), "k must lie in 1..=n");
    let mut value = int((k - 1) * (n - k));
    for j in 0..k {
        for i in 1..=n - k {
            value += frac(k - j, k - j + i);
        }
    }
    for j in 0..k.saturating_sub(1) {
        for i in 0..=n - k {
            value += frac(i + 1, k - j + i);
        }
    }
    value
}

/// Ladder `L_n` with top row `0..n` and bottom row `n..2n`.
pub fn ladder_centrality(n: usize) -> Result<FormulaResult> {
    at_least("ladder", n, 2)?;
    let row: Vec<BigRational> = (1..=n).map(|k| ladder_vertex_value(n, k)).collect();
    let scores = row.iter().chain(&row).cloned().collect();
    Ok(FormulaResult::derived(ScoreVector::new(scores)))
}

/// Branch sizes of a tree at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDecomposition {
    pub vertex: usize,
    /// Orders of the components of `tree - vertex`, largest first.
    pub branch_sizes: Vec<usize>,
}

/// Orders of the components left when `v` is removed from `tree`.
pub fn tree_branch_decomposition(tree: &Graph, v: usize) -> Result<BranchDecomposition> {
    tree.check_vertex(v)?;
    if !tree.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges, connected: {}",
            tree.order(),
            tree.size(),
            tree.is_connected()
        )));
    }
    let mut seen = vec![false; tree.order()];
    seen[v] = true;
    let mut branch_sizes: Vec<usize> = tree
        .neighbors(v)
        .iter()
        .map(|&root| {
            seen[root] = true;
            let mut stack = vec![root];
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for &y in tree.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            size
        })
        .collect();
    branch_sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BranchDecomposition {
        vertex: v,
        branch_sizes,
    })
}

/// `Σ_{i<j} n_i n_j`, evaluated as `((Σ n_i)^2 - Σ n_i^2) / 2`.
pub fn tree_centrality_value(branch_sizes: &[usize]) -> Result<BigRational> {
    if branch_sizes.is_empty() {
        return Err(Error::param("branch size list is empty"));
    }
    let sum: BigInt = branch_sizes.iter().map(|&x| BigInt::from(x)).sum();
    let squares: BigInt = branch_sizes.iter().map(|&x| BigInt::from(x * x)).sum();
    Ok(BigRational::from_integer((&sum * &sum - squares) / 2))
}

/// Per-vertex tree scores from branch decompositions.
pub fn tree_centrality(tree: &Graph) -> Result<FormulaResult> {
    if tree.order() < 2 {
        return Err(Error::param("tree needs at least two vertices"));
    }
    let scores = (0..tree.order())
        .map(|v| tree_centrality_value(&tree_branch_decomposition(tree, v)?.branch_sizes))
        .collect::<Result<Vec<_>>>()?;
    Ok(FormulaResult::derived(ScoreVector::new(scores)))
}

/// Every possible branch-size multiset at a vertex of a tree of the given
/// order (the partitions of `order - 1`), with its score. Rows are grouped
/// by number of branches, most first, then listed lexicographically.
pub fn enumerate_tree_values(order: usize) -> Result<Vec<(Vec<usize>, BigRational)>> {
    at_least("tree", order, 2)?;
    fn partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            current.push(part);
            partitions(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut all = Vec::new();
    partitions(order - 1, order - 1, &mut Vec::new(), &mut all);
    all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    all.into_iter()
        .map(|p| {
            let value = tree_centrality_value(&p)?;
            Ok((p, value))
        })
        .collect()
}

/// Cycle `C_n`: `(n-2)^2/8` for even `n`, `(n-1)(n-3)/8` for odd `n`.
pub fn cycle_centrality(n: usize) -> Result<FormulaResult> {
    at_least("cycle", n, 3)?;
    let (score, relative) = if n.is_multiple_of(2) {
        (frac((n - 2) * (n - 2), 8), frac(n - 2, 4 * (n - 1)))
    } else {
        (frac((n - 1) * (n - 3), 8), frac(n - 3, 4 * (n - 2)))
    };
    Ok(FormulaResult::with_displays(
        ScoreVector::new(vec![score; n]),
        |_| relative.clone(),
        BigRational::zero(),
    ))
}

/// Circular ladder `CL_n` on `2n` vertices: `((n-1)^2+1)/4` for even `n`,
/// `(n-1)^2/4` for odd `n`.
pub fn circular_ladder_centrality(n: usize) -> Result<FormulaResult> {
    at_least("circladder", n, 3)?;
    let (score, relative) = if n.is_multiple_of(2) {
        (
            frac((n - 1) * (n - 1) + 1, 4),
            frac((n - 1) * (n - 1) + 1, 2 * (2 * n - 1) * (2 * n - 2)),
        )
    } else {
        (frac((n - 1) * (n - 1), 4), frac(n - 1, 4 * (2 * n - 1)))
    };
    Ok(FormulaResult::with_displays(
        ScoreVector::new(vec![score; 2 * n]),
        |_| relative.clone(),
        BigRational::zero(),
    ))
}

/// Hypercube `Q_d`: every vertex scores `2^(d-2)(d-2) + 1/2` for `d >= 2`;
/// `Q_1 = K_2` scores zero.
pub fn hypercube_centrality(d: u32) -> Result<FormulaResult> {
    at_least("hypercube", d as usize, 1)?;
    if d == 1 {
        return Ok(FormulaResult::derived(ScoreVector::zeros(2)));
    }
    let order = BigInt::from(1u8) << d;
    let pow = |e: u32| BigInt::from(1u8) << e;
    let dm2 = BigInt::from(d - 2);
    let score = BigRational::from_integer(pow(d - 2) * &dm2) + ratio(1, 2);
    let relative = BigRational::new(pow(d - 1) * &dm2 + 1, (&order - 1) * (&order - 2));
    let n = 1usize << d;
    Ok(FormulaResult::with_displays(
        ScoreVector::new(vec![score; n]),
        |_| relative.clone(),
        BigRational::zero(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Star,
    Complete,
}

/// The two extremes: the star hub scores `C(n-1, 2)` with centralization 1,
/// the complete graph scores zero everywhere.
pub fn star_and_complete_centrality(n: usize, which: Extreme) -> Result<FormulaResult> {
    at_least("star/complete", n, 2)?;
    let result = match which {
        Extreme::Star => {
            let mut scores = vec![BigRational::zero(); n];
            scores[0] = int(choose2(n - 1));
            let hub = scores[0].clone();
            // relative score is 1 at the hub and 0 elsewhere
            FormulaResult::with_displays(
                ScoreVector::new(scores),
                |c| {
                    if *c == hub {
                        int(1)
                    } else {
                        BigRational::zero()
                    }
                },
                int(1),
            )
        }
        Extreme::Complete => FormulaResult::with_displays(
            ScoreVector::zeros(n),
            |_| BigRational::zero(),
            BigRational::zero(),
        ),
    };
    Ok(result)
}

/// Closed form for any family instance.
pub fn closed_form(spec: &FamilySpec) -> Result<FormulaResult> {
    spec.validate()?;
    match *spec {
        FamilySpec::Star(n) => star_and_complete_centrality(n, Extreme::Star),
        FamilySpec::Complete(n) => star_and_complete_centrality(n, Extreme::Complete),
        FamilySpec::Wheel(n) => wheel_centrality(n),
        FamilySpec::CompleteMinusEdge(n) => complete_minus_edge_centrality(n),
        FamilySpec::CompleteBipartite(m, n) => complete_bipartite_centrality(m, n),
        FamilySpec::CocktailParty(n) => cocktail_party_centrality(n),
        FamilySpec::Crown(n) => crown_centrality(n),
        FamilySpec::Path(n) => path_centrality(n),
        FamilySpec::Ladder(n) => ladder_centrality(n),
        FamilySpec::Cycle(n) => cycle_centrality(n),
        FamilySpec::CircularLadder(n) => circular_ladder_centrality(n),
        FamilySpec::Hypercube(d) => hypercube_centrality(d),
        FamilySpec::Tree { .. } => tree_centrality(&generate(spec)?),
    }
}
