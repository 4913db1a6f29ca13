//! Exhaustive generation of small connected graphs of bounded degree, up to
//! isomorphism.
//!
//! Graphs grow one vertex at a time. Every connected graph has a vertex order
//! whose prefixes are connected, and each prefix is an induced subgraph with
//! the same degree bound, so extending every isomorphism class of prefixes by
//! a new vertex joined to a nonempty set of unsaturated vertices reaches
//! every class. Duplicates are removed by canonical form at every level.

use std::collections::BTreeMap;

use super::io::encode_graph6;
use super::iso::canonical_form;
use super::Graph;

fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        items: &[usize],
        start: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut cur, &mut out);
    out
}

fn extend(g: &Graph, nbrs: &[usize]) -> Graph {
    let n = g.order();
    let mut h = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for &u in nbrs {
        h.add_edge(u, n);
    }
    h
}

/// One augmentation step; `keep` filters children before deduplication.
fn grow(level: &[Graph], max_degree: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
    for g in level {
        let open: Vec<usize> = (0..g.order())
            .filter(|&v| g.degree(v) < max_degree)
            .collect();
        for nbrs in subsets_up_to(&open, max_degree) {
            let child = extend(g, &nbrs);
            if !keep(&child) {
                continue;
            }
            let canon =
                canonical_form(&child).expect("generation stays within the canonical-form bound");
            seen.entry(encode_graph6(&canon)).or_insert(canon);
        }
    }
    seen.into_values().collect()
}

/// Connected graphs with maximum degree at most `max_degree`, grouped by
/// order: entry `k - 1` holds the graphs on `k` vertices, in canonical form,
/// sorted by graph6 string.
pub fn connected_bounded_degree(max_order: usize, max_degree: usize) -> Vec<Vec<Graph>> {
    let mut levels = Vec::new();
    if max_order == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1)]);
    for _ in 1..max_order {
        let next = grow(levels.last().expect("nonempty"), max_degree, |_| true);
        levels.push(next);
    }
    levels
}

/// Connected `degree`-regular graphs on `n` vertices, canonical and sorted.
pub fn connected_regular(n: usize, degree: usize) -> Vec<Graph> {
    if n == 1 && degree == 0 {
        return vec![Graph::empty(1)];
    }
    if n < 2 || degree >= n || n * degree % 2 == 1 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let remaining = n - k;
        level = grow(&level, degree, |child| {
            // Vertices already placed only gain edges from vertices yet to come.
            let deficit: usize = (0..k).map(|v| degree - child.degree(v)).sum();
            deficit <= degree * remaining && (remaining > 0 || deficit == 0)
        });
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        // Connected graphs on 1..=5 vertices: 1, 1, 2, 6, 21. All have
        // maximum degree at most 4 at order 5.
        let levels = connected_bounded_degree(5, 4);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn subcubic_trees_are_included() {
        let levels = connected_bounded_degree(4, 3);
        // Order 4 connected graphs with max degree <= 3: all 6.
        assert_eq!(levels[3].len(), 6);
    }

    #[test]
    fn cubic_counts_small() {
        assert_eq!(connected_regular(4, 3).len(), 1);
        assert_eq!(connected_regular(6, 3).len(), 2);
        assert_eq!(connected_regular(8, 3).len(), 5);
        assert_eq!(connected_regular(5, 3).len(), 0);
        assert_eq!(connected_regular(5, 2).len(), 1);
    }
}
