//! Immutable undirected simple graphs and single-source geodesic counting.
//!
//! Vertices are dense ids `0..n`. Every other module consumes [`Graph`] and
//! the per-source [`GeodesicProfile`] produced by [`Graph::bfs_profile`].

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Undirected simple graph in sorted adjacency-list form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// are collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Degree sequence sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    /// Hop distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(s)?;
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance(&self, s: usize, t: usize) -> Result<Option<usize>> {
        self.check_vertex(t)?;
        Ok(self.distances_from(s)?[t])
    }

    /// Connected component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// True for the empty graph and for any graph with a single component.
    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Largest finite distance over connected pairs.
    pub fn diameter(&self) -> usize {
        (0..self.order())
            .filter_map(|s| {
                self.distances_from(s)
                    .expect("in range")
                    .into_iter()
                    .flatten()
                    .max()
            })
            .max()
            .unwrap_or(0)
    }

    /// Breadth-first shortest-path DAG rooted at `s` with exact geodesic counts.
    pub fn bfs_profile(&self, s: usize) -> Result<GeodesicProfile> {
        self.check_vertex(s)?;
        let n = self.order();
        let mut dist = vec![None; n];
        let mut sigma = vec![BigUint::zero(); n];
        let mut predecessors = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);

        dist[s] = Some(0);
        sigma[s] = BigUint::one();
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let dv = dist[v].expect("queued vertices have a distance");
            for &w in self.neighbors(v) {
                match dist[w] {
                    None => {
                        dist[w] = Some(dv + 1);
                        queue.push_back(w);
                    }
                    Some(dw) if dw != dv + 1 => continue,
                    Some(_) => {}
                }
                let add = sigma[v].clone();
                sigma[w] += add;
                predecessors[w].push(v);
            }
        }

        Ok(GeodesicProfile {
            source: s,
            dist,
            sigma,
            predecessors,
            order,
        })
    }

    /// σ_st: number of distinct geodesics between `s` and `t`. Zero when the
    /// pair is disconnected and one when `s == t`.
    pub fn num_geodesics(&self, s: usize, t: usize) -> Result<BigUint> {
        self.check_vertex(t)?;
        Ok(self.bfs_profile(s)?.sigma[t].clone())
    }

    /// σ_st(v): number of `s`–`t` geodesics that pass through `v`.
    pub fn geodesics_through(&self, s: usize, t: usize, v: usize) -> Result<BigUint> {
        for x in [s, t, v] {
            self.check_vertex(x)?;
        }
        if s == t || s == v || t == v {
            return Err(Error::NotDistinct { s, t, v });
        }
        let from_s = self.bfs_profile(s)?;
        let from_v = self.bfs_profile(v)?;
        let on_geodesic = match (from_s.dist[v], from_v.dist[t], from_s.dist[t]) {
            (Some(sv), Some(vt), Some(st)) => sv + vt == st,
            _ => false,
        };
        if on_geodesic {
            Ok(&from_s.sigma[v] * &from_v.sigma[t])
        } else {
            Ok(BigUint::zero())
        }
    }
}

/// Distances, geodesic counts and shortest-path predecessors for one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicProfile {
    pub source: usize,
    /// Hop distance per vertex; `None` for unreachable vertices.
    pub dist: Vec<Option<usize>>,
    /// Number of geodesics from `source` per vertex (zero if unreachable).
    pub sigma: Vec<BigUint>,
    /// Predecessors of each vertex in the shortest-path DAG.
    pub predecessors: Vec<Vec<usize>>,
    /// Reachable vertices in nondecreasing distance order.
    pub order: Vec<usize>,
}
