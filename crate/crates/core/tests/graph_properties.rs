use std::collections::HashSet;

use proptest::prelude::*;

use permgraph::graph::io::{decode_graph6, encode_graph6};
use permgraph::graph::iso::{are_isomorphic, canonical_form};
use permgraph::graph::named;
use permgraph::graph::planar::is_planar;
use permgraph::graph::search::{contains_induced, find_embedding, has_large_hole};
use permgraph::{Graph, VertexSet};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graphs(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

fn is_cycle(g: &Graph) -> bool {
    g.is_regular(2) && g.is_connected()
}

/// Contractions of `g` by every connected vertex partition, up to isomorphism.
fn contractions(g: &Graph) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut stack = vec![g.clone()];
    let mut out = Vec::new();
    while let Some(h) = stack.pop() {
        if !seen.insert(canonical_form(&h).unwrap()) {
            continue;
        }
        for (a, b) in h.edges() {
            let keep: Vec<usize> = (0..h.order()).filter(|&v| v != b).collect();
            let index = |v: usize| {
                keep.iter()
                    .position(|&k| k == if v == b { a } else { v })
                    .unwrap()
            };
            let mut edges = Vec::new();
            for (x, y) in h.edges() {
                let (p, q) = (index(x), index(y));
                if p != q {
                    edges.push((p, q));
                }
            }
            stack.push(Graph::from_edges(keep.len(), &edges).unwrap());
        }
        out.push(h);
    }
    out
}

/// Planarity by forbidden minors.
fn planar_by_minors(g: &Graph) -> bool {
    let k5 = named::complete(5);
    let k33 = named::complete_bipartite(3, 3);
    contractions(g).iter().all(|c| {
        find_embedding(c, &k5, false).is_none() && find_embedding(c, &k33, false).is_none()
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graphs(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn isomorphism_maps_are_exact((g, perm) in relabelled(10)) {
        let h = g.relabel(&perm);
        let forward = are_isomorphic(&g, &h).unwrap().expect("relabelled copy is isomorphic");
        prop_assert_eq!(g.relabel(&forward), h.clone());
        let back = are_isomorphic(&h, &g).unwrap().expect("isomorphism is symmetric");
        prop_assert_eq!(h.relabel(&back), g.clone());
        let me = are_isomorphic(&g, &g).unwrap().expect("isomorphism is reflexive");
        prop_assert_eq!(g.relabel(&me), g);
    }

    #[test]
    fn non_isomorphic_when_invariants_differ(g in graphs(8), h in graphs(8)) {
        let found = are_isomorphic(&g, &h).unwrap();
        let mut dg = g.degrees();
        let mut dh = h.degrees();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            prop_assert!(found.is_none());
        }
        if let Some(map) = found {
            prop_assert_eq!(g.relabel(&map), h);
        }
    }

    #[test]
    fn induced_search_matches_subsets(g in graphs(9), h in graphs(4)) {
        let found = contains_induced(&g, &h);
        let exists = subsets(g.order())
            .filter(|s| s.len() == h.order())
            .any(|s| are_isomorphic(&g.induced_subgraph(&s).unwrap(), &h).unwrap().is_some());
        prop_assert_eq!(found.is_some(), exists);
        if let Some(s) = found {
            prop_assert!(are_isomorphic(&g.induced_subgraph(&s).unwrap(), &h).unwrap().is_some());
        }
    }

    #[test]
    fn large_holes_match_exhaustive_search(g in graphs(8)) {
        let exists = subsets(g.order())
            .filter(|s| s.len() >= 5)
            .any(|s| is_cycle(&g.induced_subgraph(&s).unwrap()));
        let found = has_large_hole(&g);
        prop_assert_eq!(found.is_some(), exists);
        if let Some(s) = found {
            prop_assert!(s.len() >= 5 && is_cycle(&g.induced_subgraph(&s).unwrap()));
        }
    }

    #[test]
    fn planarity_matches_minors(g in graphs(7)) {
        let planar = is_planar(&g);
        if g.order() >= 3 && g.size() > 3 * g.order() - 6 {
            prop_assert!(!planar);
        }
        prop_assert_eq!(planar, planar_by_minors(&g));
    }

    #[test]
    fn planarity_is_hereditary(g in graphs(11), v in any::<prop::sample::Index>()) {
        if is_planar(&g) && g.order() > 1 {
            let drop = v.index(g.order());
            let rest: VertexSet = (0..g.order()).filter(|&u| u != drop).collect();
            prop_assert!(is_planar(&g.induced_subgraph(&rest).unwrap()));
        }
    }

    #[test]
    fn graph6_round_trips(g in graphs(9)) {
        prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn graph6_round_trips_exhaustively() {
    for n in 1..=6 {
        let m = n * (n - 1) / 2;
        for mask in 0u32..1 << m {
            let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
            let g = graph_from_bits(n, &bits);
            assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn graph6_long_headers() {
    for n in [62, 63, 64, 100] {
        let g = named::cycle(n);
        let text = encode_graph6(&g);
        assert_eq!(text.starts_with('~'), n >= 63);
        assert_eq!(decode_graph6(&text).unwrap(), g);
    }
}

#[test]
fn planar_corpus() {
    let mut planar = vec![
        named::cube(),
        named::prism(),
        named::ladder(6),
        named::complete(4),
        named::cycle(9),
    ];
    planar.push(named::path(1));
    for g in &planar {
        assert!(is_planar(g));
    }
    let nonplanar = [
        named::complete(5),
        named::complete_bipartite(3, 3),
        named::petersen(),
        named::complete(7),
    ];
    for g in &nonplanar {
        assert!(!is_planar(g));
    }
}
