//! Backtracking searches: (induced) subgraph embeddings, large holes,
//! ladders and Hamiltonian paths.

use super::named::ladder;
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Default largest order accepted by [`hamiltonian_path_bruteforce`].
pub const HAMILTON_MAX_ORDER: usize = 20;

/// Orders pattern vertices so each one is preceded by as many of its
/// neighbours as possible; ties go to higher degree, then lower label.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = pattern.neighbors(v).filter(|&u| placed[u]).count();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Embedder<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Embedder<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let anchor = self
            .pattern
            .neighbors(v)
            .find(|&u| self.image[u] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(a) => self.host.neighbors(self.image[a]).collect(),
            None => (0..self.host.order()).collect(),
        };
        let need = self.pattern.degree(v);
        for x in candidates {
            if self.used[x] || self.host.degree(x) < need {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let p = self.pattern.has_edge(u, v);
                let h = self.host.has_edge(self.image[u], x);
                if self.induced {
                    p == h
                } else {
                    !p || h
                }
            });
            if !consistent {
                continue;
            }
            self.image[v] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[x] = false;
            self.image[v] = usize::MAX;
        }
        false
    }
}

/// Finds an injective map from `pattern` into `host` preserving edges, and
/// non-edges too when `induced` is set.
pub fn find_embedding(host: &Graph, pattern: &Graph, induced: bool) -> Option<Vec<usize>> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut e = Embedder {
        host,
        pattern,
        induced,
        order: search_order(pattern),
        image: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
    };
    e.extend(0).then_some(e.image)
}

/// A vertex set of `g` inducing a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    find_embedding(g, h, true).map(|img| img.into_iter().collect())
}

/// A chordless cycle of length at least five, listed in cycle order.
pub fn large_hole_cycle(g: &Graph) -> Option<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let s = path[0];
        let last = *path.last().expect("path is nonempty");
        let k = path.len() - 1;
        let candidates: Vec<usize> = g
            .neighbors(last)
            .filter(|&x| x > s && !on_path[x])
            .collect();
        for x in candidates {
            // Interior vertices p_1..p_{k-1} must stay non-adjacent to x.
            if path[1..k.max(1)].iter().any(|&p| g.has_edge(p, x)) {
                continue;
            }
            if k >= 1 && g.has_edge(x, s) {
                if k + 2 >= 5 {
                    path.push(x);
                    return true;
                }
                continue;
            }
            path.push(x);
            on_path[x] = true;
            if grow(g, path, on_path) {
                return true;
            }
            on_path[x] = false;
            path.pop();
        }
        false
    }

    let mut on_path = vec![false; g.order()];
    for s in 0..g.order() {
        let mut path = vec![s];
        on_path[s] = true;
        if grow(g, &mut path, &mut on_path) {
            return Some(path);
        }
        on_path[s] = false;
    }
    None
}

/// Vertex set of an induced cycle of length at least five.
pub fn has_large_hole(g: &Graph) -> Option<VertexSet> {
    large_hole_cycle(g).map(|c| c.into_iter().collect())
}

/// Embeds the ladder with `rungs` rungs (labelled as [`ladder`]) as a
/// not necessarily induced subgraph of `g`.
pub fn has_ladder_subgraph(g: &Graph, rungs: usize) -> Result<Option<Vec<usize>>> {
    if rungs < 2 {
        return Err(Error::Domain(format!(
            "a ladder needs at least two rungs, got {rungs}"
        )));
    }
    Ok(find_embedding(g, &ladder(rungs), false))
}

/// Hamiltonian path by dynamic programming over vertex subsets.
pub fn hamiltonian_path_bruteforce(g: &Graph) -> Result<Option<Vec<usize>>> {
    hamiltonian_path_bounded(g, HAMILTON_MAX_ORDER)
}

pub fn hamiltonian_path_bounded(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > limit.min(30) {
        return Err(Error::capacity(
            "Hamiltonian path search order",
            n,
            limit.min(30),
        ));
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32).collect();
    let full = (1u32 << n) - 1;
    // ends[mask]: vertices at which some path covering exactly `mask` ends.
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask as usize];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    if ends[full as usize] == 0 {
        return Ok(None);
    }
    let mut cur = ends[full as usize].trailing_zeros() as usize;
    let mut mask = full;
    let mut path = vec![cur];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << cur);
        let prev = ends[rest as usize] & adj[cur];
        cur = prev.trailing_zeros() as usize;
        mask = rest;
        path.push(cur);
    }
    path.reverse();
    Ok(Some(path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_hamiltonian_path;
    use crate::graph::named::*;

    #[test]
    fn induced_examples() {
        let s = contains_induced(&cycle(6), &path(4)).unwrap();
        assert_eq!(cycle(6).induced_subgraph(&s).unwrap().size(), 3);
        assert!(contains_induced(&complete(4), &cycle(4)).is_none());
        let s = contains_induced(&petersen(), &cycle(5)).unwrap();
        assert_eq!(s.len(), 5);
        assert!(petersen().induced_subgraph(&s).unwrap().is_regular(2));
    }

    #[test]
    fn cube_minus_antipodal_pair_is_c6() {
        let keep: VertexSet = (1..7).collect();
        let c6 = cube().induced_subgraph(&keep).unwrap();
        assert!(crate::graph::iso::are_isomorphic(&c6, &cycle(6))
            .unwrap()
            .is_some());
    }

    #[test]
    fn holes() {
        assert_eq!(has_large_hole(&cycle(5)), Some((0..5).collect()));
        assert!(has_large_hole(&cycle(4)).is_none());
        assert!(has_large_hole(&complete(5)).is_none());
        let c = large_hole_cycle(&cycle(7)).unwrap();
        assert_eq!(c.len(), 7);
        assert!(has_large_hole(&petersen()).is_some());
        // C6 with one long chord splits into two C4s.
        let mut g = cycle(6);
        g.add_edge(0, 3);
        assert!(has_large_hole(&g).is_none());
    }

    #[test]
    fn ladders() {
        let l4 = ladder(4);
        let emb = has_ladder_subgraph(&l4, 4).unwrap().unwrap();
        assert_eq!(l4.relabel(&emb), l4);
        assert!(has_ladder_subgraph(&complete(4), 2).unwrap().is_some());
        assert!(has_ladder_subgraph(&complete(4), 3).unwrap().is_none());
        assert!(has_ladder_subgraph(&l4, 1).is_err());
    }

    #[test]
    fn hamiltonian_examples() {
        let k4 = complete(4);
        let p = hamiltonian_path_bruteforce(&k4).unwrap().unwrap();
        assert!(is_hamiltonian_path(&k4, &p));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(hamiltonian_path_bruteforce(&two).unwrap().is_none());
        let pet = petersen();
        assert!(is_hamiltonian_path(
            &pet,
            &hamiltonian_path_bruteforce(&pet).unwrap().unwrap()
        ));
        assert!(hamiltonian_path_bruteforce(&path(HAMILTON_MAX_ORDER + 1)).is_err());
        assert!(hamiltonian_path_bruteforce(&complete_bipartite(2, 4))
            .unwrap()
            .is_none());
    }
}
