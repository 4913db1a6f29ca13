//! Minimal forbidden induced subgraphs of permutation graphs with maximum
//! degree at most 3, recomputed by exhaustive search, and the recognizer
//! built from them.

use serde::{Deserialize, Serialize};

use super::realizer::find_realizer;
use crate::error::{Error, Result};
use crate::graph::generate::connected_bounded_degree;
use crate::graph::io::{decode_graph6, encode_graph6};
use crate::graph::search::{find_embedding, large_hole_cycle};
use crate::graph::Graph;

/// Largest order [`derive_forbidden_catalog`] will search.
pub const CATALOG_MAX_ORDER: usize = 8;

const BUILTIN: &str = include_str!("../../data/forbidden_catalog.g6");

/// Minimal non-permutation graphs with maximum degree at most 3, other than
/// cycles of length five or more, up to a recorded search ceiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenCatalog {
    /// Canonical forms, ordered by order and then graph6 string.
    pub graphs: Vec<Graph>,
    pub max_order_searched: usize,
}

/// Why a graph with maximum degree at most 3 is not a permutation graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Obstruction {
    /// An induced cycle of length at least five, in cycle order.
    LargeHole(Vec<usize>),
    /// Catalog member `index`; `vertices[i]` is the image of its vertex `i`.
    Forbidden { index: usize, vertices: Vec<usize> },
}

fn is_long_cycle(g: &Graph) -> bool {
    g.order() >= 5 && g.is_regular(2) && g.is_connected()
}

fn is_permutation_graph(g: &Graph) -> bool {
    find_realizer(g)
        .expect("catalog candidates stay within the realizer bound")
        .is_some()
}

/// Searches every connected graph with maximum degree at most 3 on at most
/// `max_order` vertices for minimal non-permutation graphs. Disconnected
/// graphs are skipped: a disjoint union of permutation graphs is one, so
/// minimal obstructions are connected.
pub fn derive_forbidden_catalog(max_order: usize) -> Result<ForbiddenCatalog> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(Error::capacity(
            "forbidden catalog search order",
            max_order,
            CATALOG_MAX_ORDER,
        ));
    }
    let mut graphs = Vec::new();
    for level in connected_bounded_degree(max_order, 3) {
        for h in level {
            if is_long_cycle(&h) || is_permutation_graph(&h) {
                continue;
            }
            let minimal = (0..h.order()).all(|v| {
                let rest: Vec<usize> = (0..h.order()).filter(|&u| u != v).collect();
                is_permutation_graph(&h.induced_by_list(&rest))
            });
            if minimal {
                graphs.push(h);
            }
        }
    }
    Ok(ForbiddenCatalog {
        graphs,
        max_order_searched: max_order,
    })
}

impl ForbiddenCatalog {
    /// The catalog shipped with the crate, searched up to order 8.
    pub fn builtin() -> Self {
        Self::from_text(BUILTIN).expect("bundled catalog parses")
    }

    /// Header comment with the search ceiling, then one graph6 line per graph.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# minimal forbidden induced subgraphs for permutation graphs, max degree 3, cycles excluded\n\
             # max_order_searched={}\n",
            self.max_order_searched
        );
        for g in &self.graphs {
            out.push_str(&encode_graph6(g));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut max_order = None;
        let mut graphs = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let body = line.trim();
            if let Some(comment) = body.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("max_order_searched=") {
                    max_order = Some(v.trim().parse::<usize>().map_err(|_| {
                        Error::parse(start, format!("bad max_order_searched value {v:?}"))
                    })?);
                }
                continue;
            }
            if body.is_empty() {
                continue;
            }
            graphs.push(decode_graph6(body).map_err(|e| match e {
                Error::Parse { offset, message } => Error::parse(start + offset, message),
                other => other,
            })?);
        }
        let max_order_searched =
            max_order.ok_or_else(|| Error::parse(0, "missing max_order_searched header"))?;
        Ok(ForbiddenCatalog {
            graphs,
            max_order_searched,
        })
    }

    /// First obstruction found in `g`: a large hole, else a catalog member.
    pub fn find_obstruction(&self, g: &Graph) -> Option<Obstruction> {
        if let Some(cycle) = large_hole_cycle(g) {
            return Some(Obstruction::LargeHole(cycle));
        }
        self.graphs.iter().enumerate().find_map(|(index, h)| {
            find_embedding(g, h, true).map(|vertices| Obstruction::Forbidden { index, vertices })
        })
    }
}

/// Membership test for graphs of maximum degree at most 3: no large hole and
/// no induced catalog member.
pub fn is_cubic_permutation_graph_fast(g: &Graph, catalog: &ForbiddenCatalog) -> Result<bool> {
    if g.max_degree() > 3 {
        return Err(Error::Domain(format!(
            "catalog recognition needs maximum degree at most 3, got {}",
            g.max_degree()
        )));
    }
    if catalog.max_order_searched < CATALOG_MAX_ORDER {
        return Err(Error::Domain(format!(
            "catalog searched only to order {}, recognition needs {CATALOG_MAX_ORDER}",
            catalog.max_order_searched
        )));
    }
    Ok(catalog.find_obstruction(g).is_none())
}
