//! Standard small graphs.

use super::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// The 3-cube `Q3`; vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    build(
        8,
        (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v),
    )
}

/// The triangular prism `K3 x K2`.
pub fn prism() -> Graph {
    build(
        6,
        [
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// Ladder `P2 x Pk` with rails `u_i = i` and `v_i = k + i` (0-based `i`),
/// rung `i` joining `u_i` and `v_i`.
pub fn ladder(rungs: usize) -> Graph {
    let k = rungs;
    let rails = (1..k).flat_map(|i| [(i - 1, i), (k + i - 1, k + i)]);
    let rung_edges = (0..k).map(|i| (i, k + i));
    build(2 * k, rails.chain(rung_edges))
}

/// Ladder labelled along its perimeter Hamiltonian path
/// `u_1, .., u_k, v_k, .., v_1`, which starts and ends at degree-2 corners.
pub fn ladder_perimeter(rungs: usize) -> Graph {
    let k = rungs;
    let perimeter = (1..2 * k).map(|i| (i - 1, i));
    // u_j sits at j - 1, v_j at 2k - j.
    let rung_edges = (1..=k)
        .map(|j| (j - 1, 2 * k - j))
        .filter(|&(a, b)| b != a + 1);
    build(2 * k, perimeter.chain(rung_edges))
}
