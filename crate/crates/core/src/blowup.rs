//! Graph composition `G[H1, .., Hn]`, blow-ups with clique and independent
//! parts, their realizers, and the twin quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::io::{decode_graph6, encode_graph6};
use crate::graph::{named, Graph};
use crate::permutation::{Permutation, RealizerCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartKind {
    Clique,
    Independent,
}

/// `K_k` or `I_k`. A single vertex is always stored as `K1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlowupPart {
    kind: PartKind,
    size: usize,
}

impl BlowupPart {
    pub fn new(kind: PartKind, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Malformed(
                "blow-up part size must be positive".into(),
            ));
        }
        let kind = if size == 1 { PartKind::Clique } else { kind };
        Ok(BlowupPart { kind, size })
    }

    /// `K_k`; panics if `k == 0`.
    pub fn clique(k: usize) -> Self {
        Self::new(PartKind::Clique, k).expect("positive part size")
    }

    /// `I_k`; panics if `k == 0`.
    pub fn independent(k: usize) -> Self {
        Self::new(PartKind::Independent, k).expect("positive part size")
    }

    pub fn kind(&self) -> PartKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn graph(&self) -> Graph {
        match self.kind {
            PartKind::Clique => named::complete(self.size),
            PartKind::Independent => Graph::empty(self.size),
        }
    }

    /// Decreasing for cliques, increasing for independent sets.
    pub fn realizer(&self) -> Permutation {
        match self.kind {
            PartKind::Clique => Permutation::identity(self.size).reverse(),
            PartKind::Independent => Permutation::identity(self.size),
        }
    }
}

impl fmt::Display for BlowupPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            PartKind::Clique => 'K',
            PartKind::Independent => 'I',
        };
        write!(f, "{c}{}", self.size)
    }
}

impl FromStr for BlowupPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s.chars().next() {
            Some('K') => PartKind::Clique,
            Some('I') => PartKind::Independent,
            _ => {
                return Err(Error::parse(
                    0,
                    format!("expected a part like K2 or I3, found {s:?}"),
                ))
            }
        };
        let size = s[1..]
            .parse::<usize>()
            .map_err(|_| Error::parse(1, format!("bad part size in {s:?}")))?;
        if size == 0 {
            return Err(Error::parse(1, "part size must be positive"));
        }
        BlowupPart::new(kind, size)
    }
}

/// A base graph with one part per base vertex, in label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    base: Graph,
    parts: Vec<BlowupPart>,
}

impl BlowupSpec {
    pub fn new(base: Graph, parts: Vec<BlowupPart>) -> Result<Self> {
        if parts.len() != base.order() {
            return Err(Error::Malformed(format!(
                "{} parts given for a base of order {}",
                parts.len(),
                base.order()
            )));
        }
        Ok(BlowupSpec { base, parts })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[BlowupPart] {
        &self.parts
    }

    /// Order of the blown-up graph.
    pub fn order(&self) -> usize {
        self.parts.iter().map(|p| p.size).sum()
    }
}

/// `graph6` of the base, then one `Kk` or `Ik` token per base vertex.
impl fmt::Display for BlowupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", encode_graph6(&self.base))?;
        for p in &self.parts {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for BlowupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, c) in s.char_indices().chain([(s.len(), ' ')]) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(b)) => {
                    tokens.push((b, &s[b..i]));
                    start = None;
                }
                _ => {}
            }
        }
        let Some(&(at, g6)) = tokens.first() else {
            return Err(Error::parse(0, "empty blow-up spec"));
        };
        let base = decode_graph6(g6).map_err(|e| shift(e, at))?;
        let mut parts = Vec::with_capacity(tokens.len() - 1);
        for &(at, t) in &tokens[1..] {
            parts.push(t.parse::<BlowupPart>().map_err(|e| shift(e, at))?);
        }
        if parts.len() != base.order() {
            return Err(Error::parse(
                s.len(),
                format!(
                    "{} parts given for a base of order {}",
                    parts.len(),
                    base.order()
                ),
            ));
        }
        Ok(BlowupSpec { base, parts })
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::parse(offset + by, message),
        other => other,
    }
}

/// `G[H1, .., Hn]`. Vertices of `parts[i]` come in one block, blocks in the
/// order of `g`'s vertices.
pub fn compose(g: &Graph, parts: &[Graph]) -> Result<Graph> {
    if parts.len() != g.order() {
        return Err(Error::Malformed(format!(
            "{} parts given for a graph of order {}",
            parts.len(),
            g.order()
        )));
    }
    let mut start = Vec::with_capacity(parts.len() + 1);
    start.push(0);
    for h in parts {
        start.push(start.last().unwrap() + h.order());
    }
    let mut out = Graph::empty(start[parts.len()]);
    for (i, h) in parts.iter().enumerate() {
        for (a, b) in h.edges() {
            out.add_edge(start[i] + a, start[i] + b);
        }
    }
    for (i, j) in g.edges() {
        for a in start[i]..start[i + 1] {
            for b in start[j]..start[j + 1] {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

pub fn apply_blowup(spec: &BlowupSpec) -> Graph {
    let parts: Vec<Graph> = spec.parts.iter().map(BlowupPart::graph).collect();
    compose(&spec.base, &parts).expect("spec invariant: one part per base vertex")
}

/// Realizer of `compose(σ's graph, [τ_i's graph])`: position `i` of `σ` is
/// replaced by `τ_i` shifted past every block whose `σ` value is smaller.
pub fn blowup_realizer(sigma: &Permutation, taus: &[Permutation]) -> Result<Permutation> {
    if taus.len() != sigma.len() {
        return Err(Error::Malformed(format!(
            "{} blocks given for a permutation of length {}",
            taus.len(),
            sigma.len()
        )));
    }
    let mut by_value: Vec<usize> = (0..sigma.len()).collect();
    by_value.sort_by_key(|&i| sigma.at(i));
    let mut offset = vec![0; sigma.len()];
    let mut acc = 0;
    for &i in &by_value {
        offset[i] = acc;
        acc += taus[i].len();
    }
    let values = taus
        .iter()
        .zip(&offset)
        .flat_map(|(tau, &t)| tau.values().iter().map(move |v| v + t))
        .collect();
    Permutation::new(values)
}

/// Realizer of `apply_blowup(spec)` from a realizer of its base, with the
/// exact vertex-to-position map. `base` must certify `spec.base()`.
pub fn spec_realizer(spec: &BlowupSpec, base: &RealizerCertificate) -> Result<RealizerCertificate> {
    if !base.verify(spec.base()) {
        return Err(Error::Malformed(
            "base certificate does not realize the spec's base".into(),
        ));
    }
    let n = spec.parts.len();
    let mut at_position = vec![0; n];
    for (v, &p) in base.vertex_to_position.iter().enumerate() {
        at_position[p] = v;
    }
    let taus: Vec<Permutation> = at_position
        .iter()
        .map(|&v| spec.parts[v].realizer())
        .collect();
    let pi = blowup_realizer(&base.pi, &taus)?;
    let mut block_start = vec![0; n];
    let mut acc = 0;
    for &v in &at_position {
        block_start[v] = acc;
        acc += spec.parts[v].size;
    }
    let mut vertex_to_position = Vec::with_capacity(acc);
    for (v, part) in spec.parts.iter().enumerate() {
        vertex_to_position.extend(block_start[v]..block_start[v] + part.size);
    }
    let cert = RealizerCertificate {
        pi,
        vertex_to_position,
    };
    assert!(
        cert.verify(&apply_blowup(spec)),
        "blow-up realizer failed verification"
    );
    Ok(cert)
}

/// Maximal twin classes, each sorted, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    pub classes: Vec<Vec<usize>>,
    /// Singletons are tagged `Clique`.
    pub kinds: Vec<PartKind>,
}

impl TwinPartition {
    /// Class index of each vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = c;
            }
        }
        out
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    let mut kinds = Vec::new();
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let class: Vec<usize> = (v..n)
            .filter(|&u| !assigned[u] && g.are_twins(u, v))
            .collect();
        for &u in &class {
            assigned[u] = true;
        }
        let kind = if class.len() > 1 && !g.has_edge(class[0], class[1]) {
            PartKind::Independent
        } else {
            PartKind::Clique
        };
        classes.push(class);
        kinds.push(kind);
    }
    TwinPartition { classes, kinds }
}

/// Quotient by the maximal twin classes, and the spec that blows it back up
/// to `g`. Vertex `c` of the quotient is class `c` of [`twin_partition`], so
/// `apply_blowup` lists `g`'s vertices class by class.
///
/// One round only: contracting can leave new twins in the quotient, but
/// merging those would need parts that are neither cliques nor independent
/// sets (the quotient of `K3,3` is `K2`, not `K1`).
pub fn minimal_base(g: &Graph) -> (Graph, BlowupSpec) {
    let tp = twin_partition(g);
    let reps: Vec<usize> = tp.classes.iter().map(|c| c[0]).collect();
    let quotient = g.induced_by_list(&reps);
    let parts = tp
        .classes
        .iter()
        .zip(&tp.kinds)
        .map(|(c, &k)| BlowupPart::new(k, c.len()).expect("classes are nonempty"))
        .collect();
    let spec = BlowupSpec {
        base: quotient.clone(),
        parts,
    };
    (quotient, spec)
}

/// If the twin quotient of `g` is a path, its order and the spec over
/// `named::path` reproducing `g`. The path is read from the end with the
/// smaller class representative.
pub fn is_blowup_of_path(g: &Graph) -> Option<(usize, BlowupSpec)> {
    let (q, spec) = minimal_base(g);
    let k = q.order();
    if !q.is_connected() || q.size() != k - 1 || q.max_degree() > 2 {
        return None;
    }
    let start = (0..k)
        .find(|&v| q.degree(v) <= 1)
        .expect("a path has an end");
    let mut order = vec![start];
    while order.len() < k {
        let last = *order.last().unwrap();
        let prev = order.len().checked_sub(2).map(|i| order[i]);
        let next = q
            .neighbors(last)
            .find(|&u| Some(u) != prev)
            .expect("path continues");
        order.push(next);
    }
    let parts = order.iter().map(|&c| spec.parts[c]).collect();
    Some((
        k,
        BlowupSpec::new(named::path(k), parts).expect("one part per path vertex"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::are_isomorphic;
    use crate::graph::named::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn iso(a: &Graph, b: &Graph) -> bool {
        are_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn compose_examples() {
        let k2 = complete(2);
        assert_eq!(compose(&path(2), &[k2.clone(), k2]).unwrap(), complete(4));
        let k33 = compose(
            &path(3),
            &[Graph::empty(1), Graph::empty(3), Graph::empty(2)],
        )
        .unwrap();
        assert!(iso(&k33, &complete_bipartite(3, 3)));
        let p = petersen();
        let ones = vec![Graph::empty(1); 10];
        assert_eq!(compose(&p, &ones).unwrap(), p);
        assert!(compose(&p, &ones[..3]).is_err());
    }

    #[test]
    fn apply_examples() {
        let spec = BlowupSpec::new(path(2), vec![BlowupPart::clique(2); 2]).unwrap();
        assert_eq!(apply_blowup(&spec), complete(4));
        let c4 = BlowupSpec::new(
            cycle(4),
            vec![
                BlowupPart::independent(2),
                BlowupPart::independent(2),
                BlowupPart::clique(1),
                BlowupPart::clique(1),
            ],
        )
        .unwrap();
        let g = apply_blowup(&c4);
        assert!(g.is_regular(3));
        assert!(iso(&g, &complete_bipartite(3, 3)));
    }

    #[test]
    fn quartic_ladder_quotient() {
        let k = |n| BlowupPart::clique(n);
        let spec = BlowupSpec::new(
            ladder_perimeter(4),
            vec![k(2), k(1), k(1), k(2), k(2), k(1), k(1), k(2)],
        )
        .unwrap();
        let g = apply_blowup(&spec);
        assert!(g.is_regular(4));
        assert!(iso(&g, &perm("[5,4,7,2,1,10,3,12,11,6,9,8]").graph()));
    }

    #[test]
    fn offsets_follow_values() {
        let r = blowup_realizer(&perm("[2,1]"), &[perm("[2,1]"), perm("[2,1]")]).unwrap();
        assert_eq!(r, perm("[4,3,2,1]"));
        assert_eq!(r.graph(), complete(4));
        let tau = perm("[3,1,2]");
        assert_eq!(
            blowup_realizer(&perm("[1]"), std::slice::from_ref(&tau)).unwrap(),
            tau
        );
        assert!(blowup_realizer(&perm("[1]"), &[]).is_err());
    }

    #[test]
    fn part_normalisation() {
        assert_eq!(BlowupPart::independent(1), BlowupPart::clique(1));
        assert_eq!("I1".parse::<BlowupPart>().unwrap().to_string(), "K1");
        assert!("K0".parse::<BlowupPart>().is_err());
        assert!("X2".parse::<BlowupPart>().is_err());
        assert!(BlowupPart::new(PartKind::Clique, 0).is_err());
    }

    #[test]
    fn spec_text_round_trip() {
        let spec = BlowupSpec::new(
            path(3),
            vec![
                BlowupPart::clique(2),
                BlowupPart::independent(2),
                BlowupPart::clique(1),
            ],
        )
        .unwrap();
        let text = spec.to_string();
        assert_eq!(text, "Bg K2 I2 K1");
        assert_eq!(text.parse::<BlowupSpec>().unwrap(), spec);
        assert!(matches!(
            "Bg K2 I2".parse::<BlowupSpec>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "Bg K2 Q2 K1".parse::<BlowupSpec>(),
            Err(Error::Parse { offset: 6, .. })
        ));
        assert!("".parse::<BlowupSpec>().is_err());
    }

    #[test]
    fn twin_partition_examples() {
        let tp = twin_partition(&complete(4));
        assert_eq!(tp.classes, vec![vec![0, 1, 2, 3]]);
        assert_eq!(tp.kinds, vec![PartKind::Clique]);
        let tp = twin_partition(&cycle(4));
        assert_eq!(tp.classes, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(tp.kinds, vec![PartKind::Independent; 2]);
        let quartic = perm("[5,4,7,2,1,10,3,12,11,6,9,8]").graph();
        let tp = twin_partition(&quartic);
        assert_eq!(tp.classes.len(), 8);
        assert_eq!(tp.classes.iter().filter(|c| c.len() == 2).count(), 4);
    }

    #[test]
    fn minimal_base_examples() {
        let (q, spec) = minimal_base(&complete(4));
        assert_eq!(q.order(), 1);
        assert_eq!(apply_blowup(&spec), complete(4));
        let quartic = perm("[5,4,7,2,1,10,3,12,11,6,9,8]").graph();
        let (q, spec) = minimal_base(&quartic);
        assert!(iso(&q, &ladder(4)));
        assert!(iso(&apply_blowup(&spec), &quartic));
        assert!(is_blowup_of_path(&quartic).is_none());
    }

    #[test]
    fn k33_is_a_path_blowup() {
        let (k, spec) = is_blowup_of_path(&complete_bipartite(3, 3)).unwrap();
        assert_eq!(k, 2);
        assert_eq!(spec.parts(), &[BlowupPart::independent(3); 2]);
        assert_eq!(is_blowup_of_path(&path(5)).unwrap().0, 5);
        assert!(is_blowup_of_path(&cycle(5)).is_none());
    }

    #[test]
    fn spec_realizer_on_k33() {
        let (_, spec) = minimal_base(&complete_bipartite(3, 3));
        let base = crate::permutation::find_realizer(spec.base())
            .unwrap()
            .unwrap();
        let cert = spec_realizer(&spec, &base).unwrap();
        assert!(cert.verify(&apply_blowup(&spec)));
    }
}
