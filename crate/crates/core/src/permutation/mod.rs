//! Permutations in one-line notation and their inversion graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub mod catalog;
pub mod realizer;
pub mod twins;

pub use catalog::{
    derive_forbidden_catalog, is_cubic_permutation_graph_fast, ForbiddenCatalog, Obstruction,
};
pub use realizer::{find_realizer, find_realizer_bounded, RealizerCertificate, REALIZER_MAX_ORDER};
pub use twins::normalize_twins;

/// A permutation `[π(1), .., π(n)]` of `1..=n`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Malformed(
                "a permutation needs at least one entry".into(),
            ));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::Malformed(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Malformed(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Ranks of distinct values, e.g. `[30, 10, 20]` becomes `[3, 1, 2]`.
    pub fn standardize(values: &[usize]) -> Result<Self> {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != values.len() {
            return Err(Error::Malformed(
                "values to standardize must be distinct".into(),
            ));
        }
        Permutation::new(
            values
                .iter()
                .map(|v| sorted.binary_search(v).expect("present") + 1)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Pairs `(π(i), π(j))` with `i < j` and `π(i) > π(j)`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let p = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    out.insert((p[i], p[j]));
                }
            }
        }
        out
    }

    /// Inversion graph: vertex `i` is position `i`, and positions `i < j`
    /// are adjacent iff `π(i) > π(j)`.
    pub fn graph(&self) -> Graph {
        let p = &self.0;
        let mut g = Graph::empty(p.len());
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Entries in reverse position order. Its inversion graph is the
    /// complement of this one's, read through the position reversal.
    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }
}

/// Inversion graph of `pi`.
pub fn graph_from_permutation(pi: &Permutation) -> Graph {
    pi.graph()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Comma-separated one-line notation, optionally wrapped in brackets.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        let (body, lead) = match body.strip_prefix('[') {
            Some(rest) => {
                let rest = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::parse(lead + body.len(), "missing closing ']'"))?;
                (rest, lead + 1)
            }
            None => (body, lead),
        };
        let mut values = Vec::new();
        let mut offset = lead;
        for token in body.split(',') {
            let t = token.trim();
            let value = t.parse::<usize>().map_err(|_| {
                Error::parse(
                    offset + token.len() - token.trim_start().len(),
                    format!("expected a positive integer, found {t:?}"),
                )
            })?;
            values.push(value);
            offset += token.len() + 1;
        }
        Permutation::new(values)
    }
}
