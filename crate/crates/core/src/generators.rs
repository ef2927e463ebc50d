//! Constructors for the special graph families, each with a fixed canonical
//! labeling that the closed-form evaluators index into.
//!
//! Labeling contract:
//! - `Star(n)`: vertex 0 is the hub, `1..n` the leaves.
//! - `Wheel(n)`: `n` vertices in total; vertex 0 is the hub, `1..n` the rim cycle in order.
//! - `CompleteMinusEdge(n)`: the deleted edge is `(0, 1)`.
//! - `CompleteBipartite(m, n)`: side U is `0..m`, side W is `m..m+n`.
//! - `CocktailParty(n)`: `K_2n` minus the matching `(i, n+i)`.
//! - `Crown(n)`: sides `0..n` and `n..2n`, `i ~ n+j` iff `i != j`.
//! - `Path(n)`, `Cycle(n)`: vertices in path/cycle order.
//! - `Ladder(n)`: top row `0..n`, bottom row `n..2n`, rungs `(i, n+i)`.
//! - `CircularLadder(n)`: as `Ladder(n)` with both rows closed into cycles.
//! - `Hypercube(d)`: the vertex id is the bit label.

use std::collections::VecDeque;
use std::fmt;
use std::ops::RangeInclusive;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest hypercube dimension the generator will materialize.
pub const MAX_HYPERCUBE_DIM: u32 = 24;

/// Graph families with a closed-form betweenness result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Star,
    Complete,
    Wheel,
    CompleteMinusEdge,
    CompleteBipartite,
    CocktailParty,
    Crown,
    Path,
    Ladder,
    Cycle,
    CircularLadder,
    Hypercube,
    Tree,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Star,
        Family::Complete,
        Family::Wheel,
        Family::CompleteMinusEdge,
        Family::CompleteBipartite,
        Family::CocktailParty,
        Family::Crown,
        Family::Path,
        Family::Ladder,
        Family::Cycle,
        Family::CircularLadder,
        Family::Hypercube,
        Family::Tree,
    ];

    /// Short name used in spec strings (`wheel:7`, `kmn:2,3`, ...).
    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Wheel => "wheel",
            Family::CompleteMinusEdge => "kminus",
            Family::CompleteBipartite => "kmn",
            Family::CocktailParty => "cocktail",
            Family::Crown => "crown",
            Family::Path => "path",
            Family::Ladder => "ladder",
            Family::Cycle => "cycle",
            Family::CircularLadder => "circladder",
            Family::Hypercube => "hypercube",
            Family::Tree => "tree",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Smallest admissible value of the family's (first) parameter.
    pub fn min_param(self) -> usize {
        match self {
            Family::Path | Family::CompleteBipartite | Family::Hypercube => 1,
            Family::Star
            | Family::Complete
            | Family::CocktailParty
            | Family::Ladder
            | Family::Tree => 2,
            Family::CompleteMinusEdge | Family::Crown | Family::Cycle | Family::CircularLadder => 3,
            Family::Wheel => 4,
        }
    }

    /// Every vertex has the same betweenness by symmetry.
    pub fn is_vertex_transitive(self) -> bool {
        matches!(
            self,
            Family::Complete
                | Family::CocktailParty
                | Family::Crown
                | Family::Cycle
                | Family::CircularLadder
                | Family::Hypercube
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named family instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Star(usize),
    Complete(usize),
    /// Total order, hub included.
    Wheel(usize),
    CompleteMinusEdge(usize),
    CompleteBipartite(usize, usize),
    /// Half order: the graph has `2n` vertices.
    CocktailParty(usize),
    /// Half order: the graph has `2n` vertices.
    Crown(usize),
    Path(usize),
    /// Rung count.
    Ladder(usize),
    Cycle(usize),
    /// Length of each of the two cycles.
    CircularLadder(usize),
    /// Dimension.
    Hypercube(u32),
    Tree {
        order: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Star(_) => Family::Star,
            FamilySpec::Complete(_) => Family::Complete,
            FamilySpec::Wheel(_) => Family::Wheel,
            FamilySpec::CompleteMinusEdge(_) => Family::CompleteMinusEdge,
            FamilySpec::CompleteBipartite(..) => Family::CompleteBipartite,
            FamilySpec::CocktailParty(_) => Family::CocktailParty,
            FamilySpec::Crown(_) => Family::Crown,
            FamilySpec::Path(_) => Family::Path,
            FamilySpec::Ladder(_) => Family::Ladder,
            FamilySpec::Cycle(_) => Family::Cycle,
            FamilySpec::CircularLadder(_) => Family::CircularLadder,
            FamilySpec::Hypercube(_) => Family::Hypercube,
            FamilySpec::Tree { .. } => Family::Tree,
        }
    }

    /// Builds the single-parameter instance of `family`. Fails for the
    /// two-parameter and edge-list families.
    pub fn single(family: Family, p: usize) -> Result<FamilySpec> {
        let spec = match family {
            Family::Star => FamilySpec::Star(p),
            Family::Complete => FamilySpec::Complete(p),
            Family::Wheel => FamilySpec::Wheel(p),
            Family::CompleteMinusEdge => FamilySpec::CompleteMinusEdge(p),
            Family::CocktailParty => FamilySpec::CocktailParty(p),
            Family::Crown => FamilySpec::Crown(p),
            Family::Path => FamilySpec::Path(p),
            Family::Ladder => FamilySpec::Ladder(p),
            Family::Cycle => FamilySpec::Cycle(p),
            Family::CircularLadder => FamilySpec::CircularLadder(p),
            Family::Hypercube => {
                let d =
                    u32::try_from(p).map_err(|_| Error::param("hypercube dimension too large"))?;
                FamilySpec::Hypercube(d)
            }
            Family::CompleteBipartite | Family::Tree => {
                return Err(Error::param(format!(
                    "{family} does not take a single parameter"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n) => n,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::CocktailParty(n)
            | FamilySpec::Crown(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::CircularLadder(n) => 2 * n,
            FamilySpec::Hypercube(d) => 1usize << d,
            FamilySpec::Tree { order, .. } => order,
        }
    }

    /// Checks the family minima (and tree shape for `Tree`).
    pub fn validate(&self) -> Result<()> {
        let family = self.family();
        let check = |p: usize| {
            if p < family.min_param() {
                Err(Error::param(format!(
                    "{family} requires parameter >= {}, got {p}",
                    family.min_param()
                )))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::CompleteBipartite(m, n) => {
                check(*m)?;
                check(*n)
            }
            FamilySpec::Hypercube(d) => {
                check(*d as usize)?;
                if *d > MAX_HYPERCUBE_DIM {
                    return Err(Error::param(format!(
                        "hypercube dimension {d} exceeds {MAX_HYPERCUBE_DIM}"
                    )));
                }
                Ok(())
            }
            FamilySpec::Tree { order, edges } => {
                check(*order)?;
                let g = Graph::from_edges(*order, edges.iter().copied())?;
                if edges.len() + 1 != *order || g.size() != edges.len() || !g.is_connected() {
                    return Err(Error::NotATree(format!(
                        "{} edges on {order} vertices do not form a tree",
                        edges.len()
                    )));
                }
                Ok(())
            }
            other => check(other.order_param()),
        }
    }

    fn order_param(&self) -> usize {
        match *self {
            FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::CocktailParty(n)
            | FamilySpec::Crown(n)
            | FamilySpec::Path(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::CircularLadder(n) => n,
            FamilySpec::CompleteBipartite(m, _) => m,
            FamilySpec::Hypercube(d) => d as usize,
            FamilySpec::Tree { order, .. } => order,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family().name();
        match self {
            FamilySpec::CompleteBipartite(m, n) => write!(f, "{name}:{m},{n}"),
            FamilySpec::Hypercube(d) => write!(f, "{name}:{d}"),
            FamilySpec::Tree { order, .. } => write!(f, "{name}[{order}]"),
            other => write!(f, "{name}:{}", other.order_param()),
        }
    }
}

/// Default parameter range swept by family validation. For
/// `CompleteBipartite` the range applies to both sides; `Tree` is the
/// range of random tree orders.
pub fn default_range(family: Family) -> RangeInclusive<usize> {
    match family {
        Family::Star | Family::Complete => 2..=40,
        Family::Wheel => 4..=40,
        Family::CompleteMinusEdge => 3..=40,
        Family::CompleteBipartite => 1..=15,
        Family::CocktailParty => 2..=20,
        Family::Crown => 3..=20,
        Family::Path => 1..=60,
        Family::Ladder => 2..=25,
        Family::Cycle => 3..=60,
        Family::CircularLadder => 3..=25,
        Family::Hypercube => 1..=8,
        Family::Tree => 2..=40,
    }
}

/// Every instance of `family` whose parameter lies in `range`, clipped to
/// the family minimum. `Tree` has no deterministic grid and yields nothing.
pub fn family_grid(family: Family, range: RangeInclusive<usize>) -> Vec<FamilySpec> {
    let lo = (*range.start()).max(family.min_param());
    let hi = *range.end();
    match family {
        Family::Tree => Vec::new(),
        Family::CompleteBipartite => (lo..=hi)
            .flat_map(|m| (lo..=hi).map(move |n| FamilySpec::CompleteBipartite(m, n)))
            .collect(),
        _ => (lo..=hi)
            .filter_map(|p| FamilySpec::single(family, p).ok())
            .collect(),
    }
}

/// Materializes the family instance under its canonical labeling.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match *spec {
        FamilySpec::Star(n) => edges.extend((1..n).map(|i| (0, i))),
        FamilySpec::Complete(n) => edges.extend(complete_edges(0..n)),
        FamilySpec::Wheel(n) => {
            let rim = n - 1;
            edges.extend((1..n).map(|i| (0, i)));
            edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        }
        FamilySpec::CompleteMinusEdge(n) => {
            edges.extend(complete_edges(0..n).filter(|&e| e != (0, 1)));
        }
        FamilySpec::CompleteBipartite(m, w) => {
            edges.extend((0..m).flat_map(|u| (m..m + w).map(move |v| (u, v))));
        }
        FamilySpec::CocktailParty(h) => {
            edges.extend(complete_edges(0..2 * h).filter(|&(u, v)| v != u + h));
        }
        FamilySpec::Crown(h) => {
            edges.extend(
                (0..h).flat_map(|i| (0..h).filter(move |&j| j != i).map(move |j| (i, h + j))),
            );
        }
        FamilySpec::Path(n) => edges.extend((1..n).map(|i| (i - 1, i))),
        FamilySpec::Cycle(n) => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Ladder(h) => {
            edges.extend((1..h).flat_map(|i| [(i - 1, i), (h + i - 1, h + i)]));
            edges.extend((0..h).map(|i| (i, h + i)));
        }
        FamilySpec::CircularLadder(h) => {
            edges.extend((0..h).flat_map(|i| [(i, (i + 1) % h), (h + i, h + (i + 1) % h)]));
            edges.extend((0..h).map(|i| (i, h + i)));
        }
        FamilySpec::Hypercube(d) => {
            edges.extend((0..n).flat_map(|u| {
                (0..d)
                    .map(move |b| (u, u ^ (1 << b)))
                    .filter(|&(u, v)| u < v)
            }));
        }
        FamilySpec::Tree {
            edges: ref tree, ..
        } => edges.extend_from_slice(tree),
    }
    Graph::from_edges(n, edges)
}

fn complete_edges(range: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

/// Structural recognition check: `g` has the order, size and degree sequence
/// of `spec`, and is isomorphic to its canonical instance.
///
/// Isomorphism is decided by backtracking up to [`ISOMORPHISM_CAP`] vertices;
/// larger graphs must match the canonical adjacency exactly or agree on the
/// per-vertex distance profiles.
pub fn verify_family(g: &Graph, spec: &FamilySpec) -> bool {
    let Ok(reference) = generate(spec) else {
        return false;
    };
    if g.order() != reference.order()
        || g.size() != reference.size()
        || g.degree_sequence() != reference.degree_sequence()
    {
        return false;
    }
    if *g == reference {
        return true;
    }
    let (sig_g, sig_r) = (distance_signatures(g), distance_signatures(&reference));
    let mut sorted_g = sig_g.clone();
    let mut sorted_r = sig_r.clone();
    sorted_g.sort();
    sorted_r.sort();
    if sorted_g != sorted_r {
        return false;
    }
    if g.order() > ISOMORPHISM_CAP {
        return true;
    }
    find_isomorphism(g, &reference, &sig_g, &sig_r).is_some()
}

/// Above this order [`verify_family`] stops at invariant comparison.
pub const ISOMORPHISM_CAP: usize = 32;

/// Histogram of BFS distances from each vertex.
fn distance_signatures(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|s| {
            let mut hist = Vec::new();
            for d in g.distances_from(s).expect("in range") {
                let d = d.map_or(0, |d| d + 1);
                if hist.len() <= d {
                    hist.resize(d + 1, 0);
                }
                hist[d] += 1;
            }
            hist
        })
        .collect()
}

/// Backtracking search for a bijection `g -> h` preserving adjacency.
fn find_isomorphism(
    g: &Graph,
    h: &Graph,
    sig_g: &[Vec<usize>],
    sig_h: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let n = g.order();
    // Visit g in BFS order so each new vertex has mapped neighbours to check against.
    let mut visit = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            visit.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        visit: &[usize],
        g: &Graph,
        h: &Graph,
        sig_g: &[Vec<usize>],
        sig_h: &[Vec<usize>],
        map: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = visit.get(depth) else {
            return true;
        };
        for cand in 0..h.order() {
            if used[cand] || sig_g[v] != sig_h[cand] {
                continue;
            }
            let consistent = (0..depth).all(|i| {
                let u = visit[i];
                let image = map[u].expect("mapped earlier");
                g.has_edge(u, v) == h.has_edge(image, cand)
            });
            if !consistent {
                continue;
            }
            map[v] = Some(cand);
            used[cand] = true;
            if extend(depth + 1, visit, g, h, sig_g, sig_h, map, used) {
                return true;
            }
            map[v] = None;
            used[cand] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if extend(0, &visit, g, h, sig_g, sig_h, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.expect("complete")).collect())
    } else {
        None
    }
}

/// Uniformly random labeled tree on `order` vertices (Prüfer decoding).
pub fn random_tree<R: Rng + ?Sized>(order: usize, rng: &mut R) -> FamilySpec {
    assert!(order >= 2, "trees need at least two vertices");
    let code: Vec<usize> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
    let mut degree = vec![1usize; order];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    for &c in &code {
        let leaf = (0..order)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..order).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    FamilySpec::Tree { order, edges }
}

/// Erdős–Rényi `G(n, p)` resampled until connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 1 && p > 0.0, "need n >= 1 and p > 0");
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("generated edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Isomorphism by trying every permutation; only for tiny graphs.
    fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, a: &Graph, b: &Graph) -> bool {
            if k == perm.len() {
                return a.edges().all(|(u, v)| b.has_edge(perm[u], perm[v]));
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if permute(k + 1, perm, a, b) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        a.order() == b.order()
            && a.size() == b.size()
            && permute(0, &mut (0..a.order()).collect(), a, b)
    }

    #[test]
    fn cocktail_party_three() {
        let g = generate(&FamilySpec::CocktailParty(3)).unwrap();
        assert_eq!((g.order(), g.size()), (6, 12));
        assert!((0..6).all(|v| g.degree(v) == 4));
        assert!(!g.has_edge(0, 3) && !g.has_edge(2, 5));
    }

    #[test]
    fn crown_four_is_cubic_bipartite() {
        let g = generate(&FamilySpec::Crown(4)).unwrap();
        assert_eq!(g.order(), 8);
        assert!((0..8).all(|v| g.degree(v) == 3));
        // no edges inside a side
        assert!(g.edges().all(|(u, v)| (u < 4) != (v < 4)));
    }

    #[test]
    fn hypercube_three() {
        let g = generate(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!((g.order(), g.size(), g.diameter()), (8, 12, 3));
    }

    #[test]
    fn labeling_contract() {
        let w = generate(&FamilySpec::Wheel(7)).unwrap();
        assert_eq!(w.degree(0), 6);
        assert!(w.has_edge(6, 1) && w.has_edge(1, 2) && !w.has_edge(1, 3));
        let k = generate(&FamilySpec::CompleteMinusEdge(5)).unwrap();
        assert!(!k.has_edge(0, 1) && k.size() == 9);
        let kmn = generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(kmn.neighbors(0), &[2, 3, 4]);
        assert_eq!(kmn.neighbors(4), &[0, 1]);
        let l = generate(&FamilySpec::Ladder(3)).unwrap();
        assert_eq!(l.neighbors(1), &[0, 2, 4]);
        let cl = generate(&FamilySpec::CircularLadder(4)).unwrap();
        assert_eq!(cl.neighbors(0), &[1, 3, 4]);
        assert_eq!(cl.neighbors(7), &[3, 4, 6]);
    }

    #[test]
    fn minima_rejected() {
        for spec in [
            FamilySpec::Wheel(3),
            FamilySpec::CocktailParty(1),
            FamilySpec::Crown(2),
            FamilySpec::Cycle(2),
            FamilySpec::CircularLadder(2),
            FamilySpec::Hypercube(0),
            FamilySpec::CompleteBipartite(0, 3),
            FamilySpec::Hypercube(MAX_HYPERCUBE_DIM + 1),
        ] {
            assert!(
                matches!(generate(&spec), Err(Error::Parameter(_))),
                "{spec}"
            );
        }
        let cyclic = FamilySpec::Tree {
            order: 4,
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(matches!(generate(&cyclic), Err(Error::NotATree(_))));
    }

    #[test]
    fn edge_and_degree_counts() {
        for n in 2..12 {
            let l = generate(&FamilySpec::Ladder(n)).unwrap();
            assert_eq!((l.order(), l.size()), (2 * n, n + 2 * (n - 1)));
        }
        for d in 1..9u32 {
            let q = generate(&FamilySpec::Hypercube(d)).unwrap();
            assert_eq!(q.order(), 1 << d);
            assert_eq!(q.size(), d as usize * (1 << (d - 1)));
            assert!((0..q.order()).all(|v| q.degree(v) == d as usize));
        }
        for n in 2..10 {
            let cp = generate(&FamilySpec::CocktailParty(n)).unwrap();
            assert!((0..2 * n).all(|v| cp.degree(v) == 2 * n - 2));
        }
        for n in 3..10 {
            let cr = generate(&FamilySpec::Crown(n)).unwrap();
            assert!((0..2 * n).all(|v| cr.degree(v) == n - 1));
            let cl = generate(&FamilySpec::CircularLadder(n)).unwrap();
            assert!((0..2 * n).all(|v| cl.degree(v) == 3));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for spec in [
            FamilySpec::Crown(6),
            FamilySpec::Hypercube(5),
            FamilySpec::Wheel(9),
        ] {
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
    }

    #[test]
    fn verify_family_examples() {
        let crown3 = generate(&FamilySpec::Crown(3)).unwrap();
        assert!(verify_family(&crown3, &FamilySpec::Crown(3)));
        assert!(verify_family(&crown3, &FamilySpec::Cycle(6)));
        assert!(isomorphic_by_permutation(
            &crown3,
            &generate(&FamilySpec::Cycle(6)).unwrap()
        ));

        let cl4 = generate(&FamilySpec::CircularLadder(4)).unwrap();
        assert!(verify_family(&cl4, &FamilySpec::Hypercube(3)));
        assert!(isomorphic_by_permutation(
            &cl4,
            &generate(&FamilySpec::Hypercube(3)).unwrap()
        ));

        let p5 = generate(&FamilySpec::Path(5)).unwrap();
        assert!(!verify_family(&p5, &FamilySpec::Cycle(5)));
    }

    #[test]
    fn verify_family_rejects_same_degree_sequence() {
        // Two disjoint triangles vs C_6: both 2-regular on 6 vertices.
        let triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!verify_family(&triangles, &FamilySpec::Cycle(6)));
        // CL_3 (prism) and K_{3,3} are both cubic on 6 vertices.
        let prism = generate(&FamilySpec::CircularLadder(3)).unwrap();
        assert!(!verify_family(&prism, &FamilySpec::CompleteBipartite(3, 3)));
        assert!(!isomorphic_by_permutation(
            &prism,
            &generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap()
        ));
    }

    #[test]
    fn verify_family_accepts_relabelled_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [
            FamilySpec::Wheel(8),
            FamilySpec::Ladder(5),
            FamilySpec::Crown(5),
        ] {
            let g = generate(&spec).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).collect();
            rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
            let relabelled =
                Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
            assert!(verify_family(&relabelled, &spec), "{spec}");
        }
    }

    #[test]
    fn cross_family_identities() {
        let pairs = [
            (FamilySpec::CocktailParty(2), FamilySpec::Cycle(4)),
            (FamilySpec::Ladder(2), FamilySpec::Cycle(4)),
            (FamilySpec::Hypercube(2), FamilySpec::Cycle(4)),
            (FamilySpec::CompleteBipartite(1, 5), FamilySpec::Star(6)),
            (FamilySpec::CompleteMinusEdge(3), FamilySpec::Path(3)),
            (FamilySpec::Wheel(4), FamilySpec::Complete(4)),
        ];
        for (a, b) in pairs {
            assert!(verify_family(&generate(&a).unwrap(), &b), "{a} vs {b}");
        }
    }

    #[test]
    fn default_grid_sizes() {
        let count = |f| family_grid(f, default_range(f)).len();
        assert_eq!(count(Family::Wheel), 37);
        assert_eq!(count(Family::CompleteBipartite), 225);
        assert_eq!(count(Family::Hypercube), 8);
        assert_eq!(count(Family::Path), 60);
        assert_eq!(count(Family::Tree), 0);
        assert_eq!(
            family_grid(Family::Cycle, 0..=4),
            vec![FamilySpec::Cycle(3), FamilySpec::Cycle(4)]
        );
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for order in 2..40 {
            let spec = random_tree(order, &mut rng);
            let g = generate(&spec).unwrap();
            assert!(g.is_tree());
        }
    }

    #[test]
    fn random_connected_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 4..=12 {
            assert!(random_connected_graph(n, 0.3, &mut rng).is_connected());
        }
    }

    #[test]
    fn spec_display_and_names() {
        assert_eq!(FamilySpec::CompleteBipartite(2, 3).to_string(), "kmn:2,3");
        assert_eq!(FamilySpec::CircularLadder(6).to_string(), "circladder:6");
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
        assert_eq!(
            FamilySpec::single(Family::Hypercube, 3).unwrap(),
            FamilySpec::Hypercube(3)
        );
        assert!(FamilySpec::single(Family::Wheel, 2).is_err());
    }
}
