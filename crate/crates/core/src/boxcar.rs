//! Boxcar graphs: the connected 3-regular permutation graphs other than
//! `K4` and `K3,3`. A boxcar is gadget G1, a run of G2 and G3 gadgets, then
//! G4, each gadget sharing its right terminal with the next one's left.
//!
//! Vertex labels follow gadget order, and inside a gadget the order of its
//! path blow-up, so `boxcar_graph(s) == apply_blowup(&boxcar_blowup_spec(s))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blowup::{
    apply_blowup, compose, is_blowup_of_path, spec_realizer, BlowupPart, BlowupSpec,
};
use crate::error::{Error, Result};
use crate::graph::iso::are_isomorphic;
use crate::graph::{named, Graph};
use crate::permutation::{ForbiddenCatalog, Obstruction, Permutation, RealizerCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GadgetId {
    G1,
    G2,
    G3,
    G4,
}

/// A gadget with its terminals, the vertices shared with neighbouring gadgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

fn k(n: usize) -> BlowupPart {
    BlowupPart::clique(n)
}

fn i(n: usize) -> BlowupPart {
    BlowupPart::independent(n)
}

fn gadget_parts(id: GadgetId) -> Vec<BlowupPart> {
    match id {
        GadgetId::G1 => vec![k(2), i(2), k(1)],
        GadgetId::G2 => vec![k(1), k(1), k(2), k(1)],
        GadgetId::G3 => vec![k(1), k(1), i(2), i(2), k(1)],
        GadgetId::G4 => vec![k(1), k(1), i(2), k(2)],
    }
}

pub fn gadget_graph(id: GadgetId) -> Gadget {
    let parts = gadget_parts(id);
    let graphs: Vec<Graph> = parts.iter().map(BlowupPart::graph).collect();
    let graph = compose(&named::path(parts.len()), &graphs).expect("one part per path vertex");
    let last = graph.order() - 1;
    let (left, right) = match id {
        GadgetId::G1 => (None, Some(last)),
        GadgetId::G2 | GadgetId::G3 => (Some(0), Some(last)),
        GadgetId::G4 => (Some(0), None),
    };
    Gadget { graph, left, right }
}

/// Local Hamiltonian path of each gadget, from its left terminal (or its
/// first vertex) to its right terminal (or any vertex).
fn gadget_path(id: GadgetId) -> &'static [usize] {
    match id {
        GadgetId::G1 => &[0, 2, 1, 3, 4],
        GadgetId::G2 => &[0, 1, 2, 3, 4],
        GadgetId::G3 => &[0, 1, 2, 4, 3, 5, 6],
        GadgetId::G4 => &[0, 1, 2, 4, 5, 3],
    }
}

/// Parts of a boxcar between its end gadgets: 2 for G2, 3 for G3.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct BoxcarSequence(Vec<u8>);

impl BoxcarSequence {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|&&p| p != 2 && p != 3) {
            return Err(Error::Malformed(format!(
                "boxcar parts must be 2 or 3, got {p}"
            )));
        }
        Ok(BoxcarSequence(parts))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Vertex count of the boxcar graph.
    pub fn order(&self) -> usize {
        10 + 2 * self.total()
    }

    pub fn reversed(&self) -> Self {
        BoxcarSequence(self.0.iter().rev().copied().collect())
    }

    fn gadgets(&self) -> impl Iterator<Item = GadgetId> + '_ {
        std::iter::once(GadgetId::G1)
            .chain(
                self.0
                    .iter()
                    .map(|&p| if p == 2 { GadgetId::G2 } else { GadgetId::G3 }),
            )
            .chain(std::iter::once(GadgetId::G4))
    }
}

impl TryFrom<Vec<u8>> for BoxcarSequence {
    type Error = Error;

    fn try_from(parts: Vec<u8>) -> Result<Self> {
        BoxcarSequence::new(parts)
    }
}

impl From<BoxcarSequence> for Vec<u8> {
    fn from(s: BoxcarSequence) -> Self {
        s.0
    }
}

/// Comma-separated parts; the empty sequence is `-`.
impl fmt::Display for BoxcarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for BoxcarSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        if body == "-" {
            return Ok(BoxcarSequence::default());
        }
        let mut parts = Vec::new();
        let mut offset = lead;
        for token in body.split(',') {
            let t = token.trim();
            let at = offset + token.len() - token.trim_start().len();
            match t {
                "2" => parts.push(2),
                "3" => parts.push(3),
                _ => return Err(Error::parse(at, format!("expected 2 or 3, found {t:?}"))),
            }
            offset += token.len() + 1;
        }
        Ok(BoxcarSequence(parts))
    }
}

pub fn boxcar_graph(seq: &BoxcarSequence) -> Graph {
    let mut g = Graph::empty(seq.order());
    let mut next = 0;
    let mut terminal = None;
    for id in seq.gadgets() {
        let gadget = gadget_graph(id);
        let map: Vec<usize> = (0..gadget.graph.order())
            .map(|v| match (Some(v) == gadget.left, terminal) {
                (true, Some(t)) => t,
                _ => {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (a, b) in gadget.graph.edges() {
            g.add_edge(map[a], map[b]);
        }
        terminal = gadget.right.map(|r| map[r]);
    }
    debug_assert_eq!(next, seq.order());
    g
}

/// The path blow-up whose expansion is `boxcar_graph(seq)`.
pub fn boxcar_blowup_spec(seq: &BoxcarSequence) -> BlowupSpec {
    let mut parts = gadget_parts(GadgetId::G1);
    for id in seq.gadgets().skip(1) {
        parts.extend_from_slice(&gadget_parts(id)[1..]);
    }
    BlowupSpec::new(named::path(parts.len()), parts).expect("one part per path vertex")
}

/// A realizer of `named::path(k)`, `k >= 1`, with its vertex map.
pub fn path_realizer(k: usize) -> Result<RealizerCertificate> {
    if k == 0 {
        return Err(Error::Domain("a path needs at least one vertex".into()));
    }
    let even = k + k % 2;
    // 2, 4, 1, 6, 3, 8, 5, .., even-1: consecutive entries of the zig-zag
    // cross exactly once.
    let mut values: Vec<usize> = (1..=even)
        .map(|p| match p {
            1 => 2,
            p if p == even => even - 1,
            p if p % 2 == 0 => p + 2,
            p => p - 2,
        })
        .collect();
    values.truncate(k);
    let pi = Permutation::standardize(&values)?;
    let g = pi.graph();
    let mut order = vec![0];
    while order.len() < k {
        let last = *order.last().unwrap();
        let prev = order.len().checked_sub(2).map(|i| order[i]);
        let next = g
            .neighbors(last)
            .find(|&u| Some(u) != prev)
            .expect("realizer graph is a path");
        order.push(next);
    }
    let cert = RealizerCertificate {
        pi,
        vertex_to_position: order,
    };
    assert!(
        cert.verify(&named::path(k)),
        "zig-zag realizer is not a path"
    );
    Ok(cert)
}

/// Realizer of `boxcar_graph(seq)` with the exact vertex map.
pub fn boxcar_certificate(seq: &BoxcarSequence) -> RealizerCertificate {
    let spec = boxcar_blowup_spec(seq);
    let base = path_realizer(spec.base().order()).expect("boxcar paths are nonempty");
    spec_realizer(&spec, &base).expect("path certificate matches the spec base")
}

pub fn boxcar_realizer(seq: &BoxcarSequence) -> Permutation {
    boxcar_certificate(seq).pi
}

/// The lexicographically smaller of `seq` and its reverse.
pub fn canonicalize_sequence(seq: &BoxcarSequence) -> BoxcarSequence {
    seq.clone().min(seq.reversed())
}

/// A Hamiltonian path of `boxcar_graph(seq)`, gadget by gadget.
pub fn boxcar_hamiltonian_path(seq: &BoxcarSequence) -> Vec<usize> {
    let mut out = Vec::with_capacity(seq.order());
    let mut base = 0;
    for (n, id) in seq.gadgets().enumerate() {
        let local = gadget_path(id);
        // Local 0 of every later gadget is the previous right terminal.
        let (skip, shift) = if n == 0 { (0, 0) } else { (1, base - 1) };
        out.extend(local[skip..].iter().map(|&v| v + shift));
        base += gadget_graph(id).graph.order() - skip;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicClassification {
    IsK4,
    IsK33,
    Boxcar(BoxcarSequence),
    /// `witness` is `None` only if no obstruction turned up either.
    NotPermutationGraph {
        witness: Option<Obstruction>,
    },
}

fn parse_boxcar_parts(parts: &[BlowupPart]) -> Option<BoxcarSequence> {
    let g2 = &gadget_parts(GadgetId::G2)[1..];
    let g3 = &gadget_parts(GadgetId::G3)[1..];
    let g4 = &gadget_parts(GadgetId::G4)[1..];
    let mut rest = parts.strip_prefix(&gadget_parts(GadgetId::G1)[..])?;
    let mut seq = Vec::new();
    while rest != g4 {
        if let Some(r) = rest.strip_prefix(g2) {
            seq.push(2);
            rest = r;
        } else {
            let r = rest.strip_prefix(g3)?;
            seq.push(3);
            rest = r;
        }
    }
    Some(BoxcarSequence(seq))
}

/// Sorts a connected 3-regular graph into `K4`, `K3,3`, a boxcar, or a
/// non-permutation graph with a witness.
pub fn classify_cubic(g: &Graph) -> Result<CubicClassification> {
    if !g.is_regular(3) || !g.is_connected() {
        return Err(Error::Domain(
            "classification needs a connected 3-regular graph".into(),
        ));
    }
    if g.order() == 4 {
        return Ok(CubicClassification::IsK4);
    }
    if g.order() == 6 && are_isomorphic(g, &named::complete_bipartite(3, 3))?.is_some() {
        return Ok(CubicClassification::IsK33);
    }
    if let Some((_, spec)) = is_blowup_of_path(g) {
        let mut parts = spec.parts().to_vec();
        let forward = parse_boxcar_parts(&parts);
        parts.reverse();
        let backward = parse_boxcar_parts(&parts);
        if let Some(seq) = forward.into_iter().chain(backward).min() {
            return Ok(CubicClassification::Boxcar(canonicalize_sequence(&seq)));
        }
    }
    Ok(CubicClassification::NotPermutationGraph {
        witness: ForbiddenCatalog::builtin().find_obstruction(g),
    })
}

/// The path blow-up of order `2nr + r + 1` that is `r`-regular.
pub fn regular_family_spec(r: usize, n: usize) -> Result<BlowupSpec> {
    if r < 3 {
        return Err(Error::Domain(format!(
            "regular family needs r >= 3, got {r}"
        )));
    }
    let len = 4 * n + 2;
    let parts = (1..=len)
        .map(|idx| match idx {
            1 => k(2),
            idx if idx == len => k(r - 1),
            idx => match idx % 4 {
                2 => i(r - 1),
                3 => i(r - 2),
                0 => i(1),
                _ => i(2),
            },
        })
        .collect();
    BlowupSpec::new(named::path(len), parts)
}

pub fn regular_family(r: usize, n: usize) -> Result<Graph> {
    regular_family_spec(r, n).map(|s| apply_blowup(&s))
}

pub fn regular_family_certificate(r: usize, n: usize) -> Result<RealizerCertificate> {
    let spec = regular_family_spec(r, n)?;
    let base = path_realizer(spec.base().order())?;
    spec_realizer(&spec, &base)
}
