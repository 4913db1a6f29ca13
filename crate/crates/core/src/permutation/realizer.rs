//! Bounded search for a realizer of a graph.
//!
//! Vertices are assigned to positions left to right. Once a set of vertices
//! holds the first positions, their relative values are forced: a new vertex
//! must sit above every earlier non-neighbour and below every earlier
//! neighbour. So the only choice is which vertex takes the next position,
//! and a partial assignment is viable iff the earlier vertices, sorted by
//! value, list all of the newcomer's non-neighbours before its neighbours.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order accepted by [`find_realizer`].
pub const REALIZER_MAX_ORDER: usize = 12;

/// A permutation together with the vertex-to-position map that makes its
/// inversion graph equal to a given graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizerCertificate {
    pub pi: Permutation,
    /// `vertex_to_position[v]` is the 0-based position of vertex `v`.
    pub vertex_to_position: Vec<usize>,
}

impl RealizerCertificate {
    /// Exact check: relabelling `g` by the map reproduces `pi`'s inversion graph.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.pi.len() != n || self.vertex_to_position.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &p in &self.vertex_to_position {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        g.relabel(&self.vertex_to_position) == self.pi.graph()
    }
}

struct Search<'a> {
    g: &'a Graph,
    candidates: Vec<usize>,
    placed: Vec<bool>,
    by_position: Vec<usize>,
    by_value: Vec<usize>,
    dead: HashSet<Vec<usize>>,
}

impl Search<'_> {
    /// Index at which `v` can enter `by_value`, if any.
    fn slot(&self, v: usize) -> Option<usize> {
        let split = self
            .by_value
            .iter()
            .position(|&u| self.g.has_edge(u, v))
            .unwrap_or(self.by_value.len());
        self.by_value[split..]
            .iter()
            .all(|&u| self.g.has_edge(u, v))
            .then_some(split)
    }

    fn run(&mut self) -> bool {
        if self.by_position.len() == self.g.order() {
            return true;
        }
        if self.dead.contains(&self.by_value) {
            return false;
        }
        for i in 0..self.candidates.len() {
            let v = self.candidates[i];
            if self.placed[v] {
                continue;
            }
            let Some(at) = self.slot(v) else { continue };
            self.placed[v] = true;
            self.by_position.push(v);
            self.by_value.insert(at, v);
            if self.run() {
                return true;
            }
            self.by_value.remove(at);
            self.by_position.pop();
            self.placed[v] = false;
        }
        self.dead.insert(self.by_value.clone());
        false
    }
}

/// A realizer of `g`, or `None` when `g` is not a permutation graph.
pub fn find_realizer(g: &Graph) -> Result<Option<RealizerCertificate>> {
    find_realizer_bounded(g, REALIZER_MAX_ORDER)
}

pub fn find_realizer_bounded(g: &Graph, limit: usize) -> Result<Option<RealizerCertificate>> {
    let n = g.order();
    if n > limit {
        return Err(Error::capacity("realizer search order", n, limit));
    }
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        candidates,
        placed: vec![false; n],
        by_position: Vec::with_capacity(n),
        by_value: Vec::with_capacity(n),
        dead: HashSet::new(),
    };
    if !search.run() {
        return Ok(None);
    }
    let mut vertex_to_position = vec![0; n];
    for (p, &v) in search.by_position.iter().enumerate() {
        vertex_to_position[v] = p;
    }
    let mut values = vec![0; n];
    for (rank, &v) in search.by_value.iter().enumerate() {
        values[vertex_to_position[v]] = rank + 1;
    }
    let cert = RealizerCertificate {
        pi: Permutation::new(values)?,
        vertex_to_position,
    };
    assert!(
        cert.verify(g),
        "realizer search produced an invalid certificate"
    );
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn complete_graph() {
        let cert = find_realizer(&complete(4)).unwrap().unwrap();
        assert_eq!(cert.pi.to_string(), "[4,3,2,1]");
        assert!(cert.verify(&complete(4)));
    }

    #[test]
    fn cycles() {
        assert!(find_realizer(&cycle(3)).unwrap().is_some());
        let c4 = find_realizer(&cycle(4)).unwrap().unwrap();
        assert!(c4.verify(&cycle(4)));
        assert!(find_realizer(&cycle(5)).unwrap().is_none());
        assert!(find_realizer(&cycle(6)).unwrap().is_none());
    }

    #[test]
    fn c4_from_known_realizer() {
        let pi: Permutation = "[3,4,1,2]".parse().unwrap();
        assert_eq!(pi.graph().edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(pi.graph().is_regular(2));
    }

    #[test]
    fn petersen_and_cube_are_not_permutation_graphs() {
        assert!(find_realizer(&petersen()).unwrap().is_none());
        assert!(find_realizer(&cube()).unwrap().is_none());
        assert!(find_realizer(&prism()).unwrap().is_none());
        assert!(find_realizer(&complete_bipartite(3, 3)).unwrap().is_some());
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            find_realizer(&path(13)),
            Err(Error::Capacity { .. })
        ));
        assert!(find_realizer_bounded(&path(13), 13).unwrap().is_some());
    }

    #[test]
    fn verify_rejects_bad_maps() {
        let cert = find_realizer(&path(3)).unwrap().unwrap();
        let mut bad = cert.clone();
        bad.vertex_to_position = vec![0, 0, 1];
        assert!(!bad.verify(&path(3)));
        assert!(!cert.verify(&complete(3)));
    }
}
