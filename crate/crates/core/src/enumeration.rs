//! Exact counts of connected 3-regular permutation graphs, the generators
//! they are checked against, and an independent census of cubic graphs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::boxcar::{boxcar_graph, canonicalize_sequence, BoxcarSequence};
use crate::error::{Error, Result};
use crate::graph::generate::connected_regular;
use crate::graph::{named, Graph};
use crate::permutation::{find_realizer, is_cubic_permutation_graph_fast, ForbiddenCatalog};

/// Largest order [`census_cubic`] accepts.
pub const CENSUS_MAX_ORDER: usize = 12;

/// Above this order [`crosscheck`] counts sequences instead of building graphs.
pub const MATERIALIZE_MAX_ORDER: usize = 40;

/// Compositions of `x` into parts 2 and 3; zero for negative `x`.
pub fn count_compositions_23(x: i64) -> BigUint {
    if x < 0 {
        return BigUint::ZERO;
    }
    t_table(x as usize).pop().expect("table is nonempty")
}

/// `t(0..=x_max)`.
pub fn t_table(x_max: usize) -> Vec<BigUint> {
    let mut t: Vec<BigUint> = Vec::with_capacity(x_max + 1);
    for x in 0..=x_max {
        let v = match x {
            0 => BigUint::from(1u32),
            1 => BigUint::ZERO,
            2 => BigUint::from(1u32),
            _ => &t[x - 2] + &t[x - 3],
        };
        t.push(v);
    }
    t
}

/// `a(1..=n_max)` at index `n`; index 0 is unused and zero.
fn a_table(n_max: usize) -> Vec<BigUint> {
    let t = t_table(n_max / 4 + 1);
    let mut a: Vec<BigUint> = vec![BigUint::ZERO; n_max + 1];
    for n in 1..=n_max {
        a[n] = match n {
            _ if n % 2 == 1 => BigUint::ZERO,
            2 | 8 | 12 => BigUint::ZERO,
            4 | 6 | 10 | 14 | 16 | 18 | 20 => BigUint::from(1u32),
            _ if n % 4 == 2 => &a[n - 4] + &a[n - 6],
            _ => &a[n - 4] + &a[n - 6] - &t[(n - 20) / 4],
        };
    }
    a
}

/// Number of connected 3-regular permutation graphs on `n` vertices, up to
/// isomorphism, by recurrence.
pub fn count_cubic(n: usize) -> BigUint {
    a_table(n).swap_remove(n)
}

/// `a(n)` for even `n` and `t(x)` on dense ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub a_values: BTreeMap<usize, BigUint>,
    pub t_values: BTreeMap<usize, BigUint>,
}

impl CountTable {
    /// `a(n)` for every `n` in `n_min..=n_max` and `t(x)` for `x <= x_max`.
    pub fn new(n_min: usize, n_max: usize, x_max: usize) -> Self {
        let a = a_table(n_max);
        CountTable {
            a_values: (n_min.max(1)..=n_max).map(|n| (n, a[n].clone())).collect(),
            t_values: t_table(x_max).into_iter().enumerate().collect(),
        }
    }

    /// `n<TAB>a(n)` lines under a header.
    pub fn a_tsv(&self) -> String {
        tsv("n\ta(n)", &self.a_values)
    }

    /// `x<TAB>t(x)` lines under a header.
    pub fn t_tsv(&self) -> String {
        tsv("x\tt(x)", &self.t_values)
    }
}

fn tsv(header: &str, values: &BTreeMap<usize, BigUint>) -> String {
    let mut out = format!("{header}\n");
    for (k, v) in values {
        out.push_str(&format!("{k}\t{v}\n"));
    }
    out
}

fn compositions(m: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if m == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in [2u8, 3] {
        if p as usize <= m {
            prefix.push(p);
            compositions(m - p as usize, prefix, out);
            prefix.pop();
        }
    }
}

/// Canonical sequences with parts summing to `(n - 10) / 2`, sorted.
pub fn generate_sequences(n: usize) -> Result<Vec<BoxcarSequence>> {
    if n % 2 == 1 || n < 10 {
        return Err(Error::Domain(format!(
            "boxcar orders are even and at least 10, got {n}"
        )));
    }
    let mut raw = Vec::new();
    compositions((n - 10) / 2, &mut Vec::new(), &mut raw);
    let mut out: Vec<BoxcarSequence> = raw
        .into_iter()
        .map(|p| canonicalize_sequence(&BoxcarSequence::new(p).expect("parts are 2 or 3")))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every connected 3-regular permutation graph on `n` vertices, one per
/// isomorphism class.
pub fn generate_graphs(n: usize) -> Vec<Graph> {
    match n {
        4 => vec![named::complete(4)],
        6 => vec![named::complete_bipartite(3, 3)],
        _ => generate_sequences(n)
            .map(|seqs| seqs.iter().map(boxcar_graph).collect())
            .unwrap_or_default(),
    }
}

/// Every connected 3-regular graph on `n` vertices up to isomorphism.
pub fn census_cubic(n: usize) -> Result<Vec<Graph>> {
    if n > CENSUS_MAX_ORDER {
        return Err(Error::capacity("cubic census order", n, CENSUS_MAX_ORDER));
    }
    if n < 4 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    Ok(connected_regular(n, 3))
}

/// How census graphs are tested for membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Recognizer {
    Realizer,
    Catalog,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub n: usize,
    /// Decimal, since counts are unbounded.
    pub recurrence: String,
    pub generated: usize,
    /// Whether `generated` counts built graphs or only sequences.
    pub materialized: bool,
    pub census_total: Option<usize>,
    pub census_permutation: Option<usize>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub n_max: usize,
    pub recognizer: Recognizer,
    pub rows: Vec<CrosscheckRow>,
}

impl CrosscheckReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &CrosscheckRow> {
        self.rows.iter().filter(|r| !r.ok)
    }

    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n\trecurrence\tgenerated\tcensus\tcensus-perm\tverdict")?;
        for r in &self.rows {
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                f,
                "{}\t{}\t{}{}\t{}\t{}\t{}",
                r.n,
                r.recurrence,
                r.generated,
                if r.materialized { "" } else { "*" },
                opt(r.census_total),
                opt(r.census_permutation),
                if r.ok { "ok" } else { "MISMATCH" }
            )?;
        }
        let bad = self.discrepancies().count();
        if bad == 0 {
            writeln!(f, "all {} rows agree", self.rows.len())
        } else {
            writeln!(f, "{bad} discrepancies")
        }
    }
}

/// Compares the recurrence with generation for every even `n <= n_max`,
/// and with the census for `n <= 12`.
pub fn crosscheck(n_max: usize, recognizer: Recognizer) -> Result<CrosscheckReport> {
    let a = a_table(n_max.max(1));
    let catalog = ForbiddenCatalog::builtin();
    let mut rows = Vec::new();
    for n in (2..=n_max).step_by(2) {
        let materialized = n <= MATERIALIZE_MAX_ORDER;
        let generated = if materialized {
            generate_graphs(n).len()
        } else {
            generate_sequences(n)?.len()
        };
        let (census_total, census_permutation) = if n <= CENSUS_MAX_ORDER {
            let census = census_cubic(n)?;
            let mut hits = 0;
            for g in &census {
                let member = match recognizer {
                    Recognizer::Realizer => find_realizer(g)?.is_some(),
                    Recognizer::Catalog => is_cubic_permutation_graph_fast(g, &catalog)?,
                };
                hits += usize::from(member);
            }
            (Some(census.len()), Some(hits))
        } else {
            (None, None)
        };
        let expected = &a[n];
        let ok = *expected == BigUint::from(generated)
            && census_permutation.is_none_or(|h| *expected == BigUint::from(h));
        rows.push(CrosscheckRow {
            n,
            recurrence: expected.to_string(),
            generated,
            materialized,
            census_total,
            census_permutation,
            ok,
        });
    }
    Ok(CrosscheckReport {
        n_max,
        recognizer,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn t_values() {
        let t: Vec<BigUint> = (0..=10).map(count_compositions_23).collect();
        let want: Vec<BigUint> = [1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7]
            .into_iter()
            .map(u)
            .collect();
        assert_eq!(t, want);
        assert_eq!(count_compositions_23(-3), u(0));
    }

    #[test]
    fn a_values() {
        assert_eq!(count_cubic(8), u(0));
        assert_eq!(count_cubic(20), u(1));
        let got: Vec<BigUint> = [22, 24, 26, 28, 30, 32, 34, 36]
            .into_iter()
            .map(count_cubic)
            .collect();
        let want: Vec<BigUint> = [2, 2, 3, 3, 5, 5, 8, 9].into_iter().map(u).collect();
        assert_eq!(got, want);
        assert_eq!(count_cubic(21), u(0));
    }

    #[test]
    fn sequences() {
        assert_eq!(
            generate_sequences(10).unwrap(),
            vec![BoxcarSequence::default()]
        );
        assert!(generate_sequences(12).unwrap().is_empty());
        let s: Vec<String> = generate_sequences(24)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(s, ["2,2,3", "2,3,2"]);
        assert!(generate_sequences(11).is_err());
        assert!(generate_sequences(8).is_err());
    }

    #[test]
    fn graphs() {
        assert_eq!(generate_graphs(4), vec![named::complete(4)]);
        assert!(generate_graphs(8).is_empty());
        assert_eq!(generate_graphs(22).len(), 2);
    }

    #[test]
    fn census_bounds() {
        assert!(matches!(census_cubic(14), Err(Error::Capacity { .. })));
        assert_eq!(census_cubic(4).unwrap().len(), 1);
        assert_eq!(census_cubic(6).unwrap().len(), 2);
        assert!(census_cubic(7).unwrap().is_empty());
    }

    #[test]
    fn small_crosscheck() {
        let r = crosscheck(10, Recognizer::Realizer).unwrap();
        assert!(r.all_ok(), "{r}");
        let census: Vec<Option<usize>> = r.rows.iter().map(|r| r.census_permutation).collect();
        assert_eq!(census, [Some(0), Some(1), Some(1), Some(0), Some(1)]);
    }

    #[test]
    fn table_tsv() {
        let t = CountTable::new(20, 24, 3);
        assert_eq!(t.a_tsv(), "n\ta(n)\n20\t1\n21\t0\n22\t2\n23\t0\n24\t2\n");
        assert_eq!(t.t_tsv(), "x\tt(x)\n0\t1\n1\t0\n2\t1\n3\t1\n");
    }
}
