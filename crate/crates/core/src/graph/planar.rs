//! Planarity by incremental face embedding (Demoucron, Malgrange and
//! Pertuiset), run separately on every biconnected block.

use std::collections::VecDeque;

use super::Graph;

/// Edge sets of the biconnected blocks of `g` (bridges form their own block).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(s: &mut State, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let nbrs: Vec<usize> = s.g.neighbors(u).collect();
        for v in nbrs {
            if Some(v) == parent {
                continue;
            }
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                dfs(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// True iff `g` has a crossing-free drawing in the plane.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|edges| {
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() <= 4 {
            return true;
        }
        let index = |x: usize| verts.binary_search(&x).expect("block vertex");
        let local: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        let block = Graph::from_edges(verts.len(), &local).expect("valid block");
        block.size() <= 3 * block.order() - 6 && embed_biconnected(&block)
    })
}

/// A cycle through the edge at vertex 0: the shortest detour around it.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let start = 0;
    let target = g
        .neighbors(start)
        .next()
        .expect("block vertices have neighbours");
    let mut prev = vec![usize::MAX; n];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if (u, v) == (start, target) || prev[v] != usize::MAX {
                continue;
            }
            prev[v] = u;
            if v == target {
                let mut cycle = vec![v];
                let mut x = v;
                while x != start {
                    x = prev[x];
                    cycle.push(x);
                }
                return cycle;
            }
            queue.push_back(v);
        }
    }
    unreachable!("every edge of a biconnected block lies on a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// `Some` for a single chord between embedded vertices.
    chord: Option<(usize, usize)>,
    /// Non-embedded vertices of the fragment.
    interior: Vec<usize>,
}

fn embed_biconnected(g: &Graph) -> bool {
    let n = g.order();
    let total_edges = g.size();
    let cycle = find_cycle(g);
    let mut in_h = vec![false; n];
    let mut h = Graph::empty(n);
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        h.add_edge(v, cycle[(i + 1) % cycle.len()]);
    }
    let mut faces = vec![cycle.clone(), cycle];

    while h.size() < total_edges {
        let fragments = fragments(g, &h, &in_h);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((fi, admissible[0])),
                _ => {}
            }
        }
        let (fi, face_idx) = choice.expect("an unembedded fragment exists");
        let path = fragment_path(g, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h.add_edge(w[0], w[1]);
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn fragments(g: &Graph, h: &Graph, in_h: &[bool]) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h.has_edge(u, v) {
            out.push(Fragment {
                attachments: vec![u, v],
                chord: Some((u, v)),
                interior: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if in_h[v] {
                    attachments.push(v);
                } else if !seen[v] {
                    seen[v] = true;
                    interior.push(v);
                    queue.push_back(v);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            chord: None,
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let mut in_frag = vec![false; g.order()];
    for &v in &frag.interior {
        in_frag[v] = true;
    }
    let mut prev = vec![usize::MAX; g.order()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for c in g.neighbors(a).filter(|&c| in_frag[c]) {
        prev[c] = a;
        queue.push_back(c);
    }
    while let Some(u) = queue.pop_front() {
        if let Some(b) = g.neighbors(u).find(|&b| in_h[b] && b != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while prev[x] != a {
                x = prev[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for v in g.neighbors(u) {
            if in_frag[v] && prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits a face boundary along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("path has ends");
    let len = face.len();
    let i = face.iter().position(|&x| x == a).expect("a on face");
    let j = face.iter().position(|&x| x == b).expect("b on face");
    let arc = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(face[k]);
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut first = arc(i, j);
    first.extend(interior.iter().rev());
    let mut second = arc(j, i);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen()));
        assert!(is_planar(&complete(4)));
    }

    #[test]
    fn planar_families() {
        assert!(is_planar(&cube()));
        assert!(is_planar(&prism()));
        assert!(is_planar(&ladder(6)));
        assert!(is_planar(&cycle(9)));
        assert!(is_planar(&path(7)));
        assert!(is_planar(&Graph::empty(3)));
        assert!(is_planar(&complete_bipartite(2, 5)));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // Replace edge {0,3} of K3,3 by a path through a new vertex.
        let k = complete_bipartite(3, 3);
        let mut edges: Vec<(usize, usize)> =
            k.edges().into_iter().filter(|&e| e != (0, 3)).collect();
        edges.extend([(0, 6), (6, 3)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn nonplanar_block_behind_a_bridge() {
        let k5 = complete(5);
        let g = k5.disjoint_union(&path(2));
        let mut edges = g.edges();
        edges.push((4, 5));
        let g = Graph::from_edges(7, &edges).unwrap();
        assert!(!is_planar(&g));
    }
}
