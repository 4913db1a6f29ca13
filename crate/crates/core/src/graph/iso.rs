//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both routines run colour refinement (1-dimensional Weisfeiler-Leman) to an
//! equitable partition and then branch by individualising one vertex of the
//! first non-singleton colour class. Colours are ranks of sorted signatures,
//! so they mean the same thing in every graph refined together.

use super::Graph;
use crate::error::{Error, Result};

/// Default largest order accepted by [`are_isomorphic`].
pub const ISO_MAX_ORDER: usize = 64;

/// Default largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 24;

type Colors = Vec<u32>;

fn signature(g: &Graph, colors: &[u32], v: usize) -> (u32, Vec<u32>) {
    let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
    nb.sort_unstable();
    (colors[v], nb)
}

fn distinct(colors: &[Colors]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Refines the colourings of several graphs in lockstep until stable.
fn refine(graphs: &[&Graph], colors: &mut [Colors]) {
    let mut classes = distinct(colors);
    loop {
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(colors.iter())
            .map(|(g, c)| (0..g.order()).map(|v| signature(g, c, v)).collect())
            .collect();
        let mut table: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
        table.sort_unstable();
        table.dedup();
        for (c, s) in colors.iter_mut().zip(&sigs) {
            for (slot, sig) in c.iter_mut().zip(s) {
                *slot = table.binary_search(&sig).expect("signature present") as u32;
            }
        }
        if table.len() == classes {
            return;
        }
        classes = table.len();
    }
}

fn histogram(colors: &[u32]) -> Vec<u32> {
    let mut h = colors.to_vec();
    h.sort_unstable();
    h
}

/// Lowest colour that occurs more than once, if any.
fn target_cell(colors: &[u32]) -> Option<u32> {
    let h = histogram(colors);
    h.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Gives `v` a colour just below the rest of its class.
fn individualize(colors: &[u32], v: usize) -> Colors {
    let target = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
        .collect()
}

fn check_order(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::capacity(
            "isomorphism search order",
            g.order(),
            limit,
        ));
    }
    Ok(())
}

/// Returns a bijection `map` with `uv` an edge of `g` iff `map[u]map[v]` is an
/// edge of `h`, or `None` when the graphs are not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    are_isomorphic_bounded(g, h, ISO_MAX_ORDER)
}

pub fn are_isomorphic_bounded(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    check_order(g, limit)?;
    check_order(h, limit)?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    let map = iso_search(g, h, vec![0; g.order()], vec![0; h.order()]);
    debug_assert!(map.as_ref().is_none_or(|m| g.relabel(m) == *h));
    Ok(map)
}

fn iso_search(g: &Graph, h: &Graph, cg: Colors, ch: Colors) -> Option<Vec<usize>> {
    let mut colors = [cg, ch];
    refine(&[g, h], &mut colors);
    let [cg, ch] = colors;
    if histogram(&cg) != histogram(&ch) {
        return None;
    }
    match target_cell(&cg) {
        None => {
            let mut by_color = vec![0; h.order()];
            for (w, &c) in ch.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let map: Vec<usize> = cg.iter().map(|&c| by_color[c as usize]).collect();
            (g.relabel(&map) == *h).then_some(map)
        }
        Some(cell) => {
            let v = cg
                .iter()
                .position(|&c| c == cell)
                .expect("cell is nonempty");
            let next_g = individualize(&cg, v);
            ch.iter()
                .enumerate()
                .filter(|&(_, &c)| c == cell)
                .find_map(|(w, _)| iso_search(g, h, next_g.clone(), individualize(&ch, w)))
        }
    }
}

/// Canonical labelling: `label[v]` is the new name of `v`. Isomorphic graphs
/// relabel to identical graphs.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g, CANON_MAX_ORDER)?;
    let mut colors = vec![0; g.order()];
    refine(&[g], std::slice::from_mut(&mut colors));
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    canon_search(g, colors, &mut best);
    Ok(best.map(|(_, l)| l).unwrap_or_default())
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(g)?))
}

fn canon_search(g: &Graph, colors: Colors, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    match target_cell(&colors) {
        None => {
            let label: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let rows = g.relabel(&label).rows;
            if best.as_ref().is_none_or(|(b, _)| rows < *b) {
                *best = Some((rows, label));
            }
        }
        Some(cell) => {
            let members: Vec<usize> = (0..g.order()).filter(|&v| colors[v] == cell).collect();
            for v in members {
                let mut next = individualize(&colors, v);
                refine(&[g], std::slice::from_mut(&mut next));
                canon_search(g, next, best);
            }
        }
    }
}
