//! Realizer normalisation: rewrite a permutation so that every pair of
//! twins sits in a contiguous run of consecutive values, decreasing for
//! adjacent twins and increasing otherwise.

use super::Permutation;

/// Whether positions `p < q` bound a run of consecutive values moving in the
/// direction that matches the twins' adjacency.
fn in_run(values: &[usize], p: usize, q: usize, adjacent: bool) -> bool {
    values[p..=q].windows(2).all(|w| {
        if adjacent {
            w[0] == w[1] + 1
        } else {
            w[0] + 1 == w[1]
        }
    })
}

/// Moves value `high` next to value `low` as `low + 1`: right of it when
/// `adjacent` is false, left of it otherwise. Values strictly between them
/// shift up by one.
fn pull_together(values: &[usize], low: usize, high: usize, adjacent: bool) -> Vec<usize> {
    let mut out = Vec::with_capacity(values.len());
    for &x in values {
        if x == high {
            continue;
        }
        let shifted = if x > low && x < high { x + 1 } else { x };
        if x == low && adjacent {
            out.push(low + 1);
        }
        out.push(shifted);
        if x == low && !adjacent {
            out.push(low + 1);
        }
    }
    out
}

/// Applies the twin-gathering rewrite until every twin pair of the realized
/// graph satisfies the run condition. The result realizes a graph
/// isomorphic to `pi`'s.
pub fn normalize_twins(pi: &Permutation) -> Permutation {
    let n = pi.len();
    let mut values = pi.values().to_vec();
    // Each rewrite settles one pair without breaking settled ones.
    for _ in 0..=n * n {
        let g = Permutation(values.clone()).graph();
        let offending = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .find(|&(p, q)| g.are_twins(p, q) && !in_run(&values, p, q, g.has_edge(p, q)));
        match offending {
            None => return Permutation(values),
            Some((p, q)) => {
                let (low, high) = (values[p].min(values[q]), values[p].max(values[q]));
                values = pull_together(&values, low, high, g.has_edge(p, q));
            }
        }
    }
    unreachable!("twin normalisation failed to converge")
}

/// True iff every twin pair of `pi`'s inversion graph lies in a matching run.
pub fn twins_are_normalized(pi: &Permutation) -> bool {
    let g = pi.graph();
    let n = pi.len();
    (0..n).all(|p| {
        (p + 1..n).all(|q| !g.are_twins(p, q) || in_run(pi.values(), p, q, g.has_edge(p, q)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn already_normal() {
        assert_eq!(normalize_twins(&perm("[2,1]")), perm("[2,1]"));
        assert_eq!(
            normalize_twins(&Permutation::identity(6)),
            Permutation::identity(6)
        );
        assert_eq!(normalize_twins(&perm("[4,3,2,1]")), perm("[4,3,2,1]"));
    }

    #[test]
    fn c4_realizers() {
        for s in ["[3,4,1,2]", "[2,4,1,3]", "[3,1,4,2]"] {
            let p = perm(s);
            if !p.graph().is_regular(2) {
                continue;
            }
            let q = normalize_twins(&p);
            assert!(twins_are_normalized(&q), "{s} -> {q}");
            assert!(are_isomorphic(&p.graph(), &q.graph()).unwrap().is_some());
            // Opposite vertices of C4 are non-adjacent twins: increasing pairs.
            let v = q.values();
            let g = q.graph();
            for a in 0..4 {
                for b in a + 1..4 {
                    if g.are_twins(a, b) {
                        assert_eq!(b, a + 1);
                        assert_eq!(v[a] + 1, v[b]);
                    }
                }
            }
        }
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn exhaustive_on_s6() {
        let mut rewritten = 0;
        for v in all_perms(6) {
            let p = Permutation::new(v).unwrap();
            let q = normalize_twins(&p);
            assert!(twins_are_normalized(&q), "{p} -> {q}");
            assert!(
                are_isomorphic(&p.graph(), &q.graph()).unwrap().is_some(),
                "{p} -> {q}"
            );
            if !twins_are_normalized(&p) {
                rewritten += 1;
            } else {
                assert_eq!(p, q);
            }
        }
        assert!(rewritten > 0);
    }

    #[test]
    fn pull_together_cases() {
        assert_eq!(pull_together(&[3, 1, 4, 2], 1, 2, false), vec![3, 1, 2, 4]);
        assert_eq!(pull_together(&[1, 3, 2], 1, 3, true), vec![2, 1, 3]);
    }
}
