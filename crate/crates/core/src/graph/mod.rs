//! Simple undirected graphs on a contiguous vertex range and the small-graph
//! algorithms built on them.
//!
//! Vertices are indexed `0..n` in the Rust API. Every text format (edge list,
//! DOT, certificates printed by the CLI) shows them as `1..=n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub mod generate;
pub mod io;
pub mod iso;
pub mod named;
pub mod planar;
pub mod search;

/// A set of vertices of some graph, kept sorted.
pub type VertexSet = BTreeSet<usize>;

/// Simple undirected graph stored as one adjacency bit row per vertex.
///
/// The representation is canonical, so `==` is exact edge-set equality on
/// graphs of equal order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from 0-based vertex pairs. Duplicate pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Malformed("graph order must be positive".into()));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!(
                    "edge ({}, {}) has an endpoint outside 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Malformed(format!("self-loop at vertex {}", u + 1)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as raw bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == r)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::Malformed(
                "induced subgraph of an empty vertex set".into(),
            ));
        }
        if let Some(&v) = set.iter().next_back().filter(|&&v| v >= self.n) {
            return Err(Error::Malformed(format!(
                "vertex {} outside 1..={}",
                v + 1,
                self.n
            )));
        }
        let members: Vec<usize> = set.iter().copied().collect();
        Ok(self.induced_by_list(&members))
    }

    /// Induced subgraph on `members` (distinct, in range), keeping their order.
    pub(crate) fn induced_by_list(&self, members: &[usize]) -> Graph {
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `map[v]`; `map` must be a bijection.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        debug_assert_eq!(map.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(map[u], map[v]);
        }
        g
    }

    /// `N(u) - {v} = N(v) - {u}`, whether or not `u` and `v` are adjacent.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).enumerate().all(|(i, (&a, &b))| {
            let mut mask = !0u64;
            for x in [u, v] {
                if x / 64 == i {
                    mask &= !(1 << (x % 64));
                }
            }
            a & mask == b & mask
        })
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A single-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (u + 1, v + 1))
            .collect();
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Checks that `path` visits every vertex of `g` once along edges.
pub fn is_hamiltonian_path(g: &Graph, path: &[usize]) -> bool {
    if path.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in path {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
