//! Text formats: graph6, plain edge lists and Graphviz DOT.
//!
//! Edge lists and DOT use 1-based vertex labels.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn push_order(out: &mut String, n: usize) {
    let sextets: &[u32] = if n <= 62 {
        &[0]
    } else if n <= 258_047 {
        out.push('~');
        &[12, 6, 0]
    } else {
        out.push_str("~~");
        &[30, 24, 18, 12, 6, 0]
    };
    for &shift in sextets {
        out.push(char::from(63 + ((n as u64 >> shift) & 63) as u8));
    }
}

/// graph6 encoding: order prefix, then the upper triangle column by column
/// in 6-bit groups offset by 63.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from(63 + (acc << (6 - filled))));
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored; offsets in errors are relative to the trimmed text.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let value = |i: usize| -> Result<u64> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) => Err(Error::parse(
                i,
                format!("byte 0x{b:02x} outside the graph6 range"),
            )),
            None => Err(Error::parse(i, "unexpected end of graph6 data")),
        }
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::parse(0, "empty graph6 string")),
        Some(b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0;
            for i in 2..8 {
                n = n << 6 | value(i)?;
            }
            (n as usize, 8)
        }
        Some(b'~') => {
            let mut n = 0;
            for i in 1..4 {
                n = n << 6 | value(i)?;
            }
            (n as usize, 4)
        }
        Some(_) => (value(0)? as usize, 1),
    };
    if n == 0 {
        return Err(Error::parse(0, "graph order must be positive"));
    }
    let bits = n * (n - 1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::parse(
            bytes.len().min(expected),
            format!(
                "expected {expected} bytes for order {n}, found {}",
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut word = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = value(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if word >> left & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, bits);
    if left > 0 && word & ((1 << left) - 1) != 0 {
        return Err(Error::parse(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// `n m` header line followed by one `u v` line per edge, 1-based.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped.
pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let nums: Vec<usize> = fields
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(start, format!("expected two integers, found {body:?}")))?;
        if nums.len() != 2 {
            return Err(Error::parse(
                start,
                format!("expected two integers, found {body:?}"),
            ));
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some((n, _)) => {
                if nums[0] == 0 || nums[1] == 0 || nums[0] > n || nums[1] > n {
                    return Err(Error::parse(
                        start,
                        format!("vertex outside 1..={n} in {body:?}"),
                    ));
                }
                edges.push((nums[0] - 1, nums[1] - 1));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing \"n m\" header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            offset,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

/// Graphviz DOT with vertices and edges in increasing order.
pub fn encode_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {};", v + 1);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// Reads a graph given either as an edge list or as graph6.
pub fn read_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::parse(0, "no graph in input"))?;
    let looks_like_edge_list = first.split_whitespace().count() == 2
        && first
            .split_whitespace()
            .all(|t| t.bytes().all(|b| b.is_ascii_digit()));
    if looks_like_edge_list {
        decode_edge_list(text)
    } else {
        decode_graph6(first)
    }
}

/// One graph6 string per line; blank lines and `#` comments are skipped.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(decode_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&complete(4)), "C~");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        // Matches the encoding used by networkx and nauty for the Petersen graph.
        assert_eq!(encode_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn decode_known() {
        assert_eq!(decode_graph6("C~").unwrap(), complete(4));
        assert_eq!(decode_graph6(">>graph6<<C~\n").unwrap(), complete(4));
        assert_eq!(decode_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn large_order_prefix() {
        let g = path(70);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert_eq!(
            decode_graph6("C~~").unwrap_err(),
            Error::parse(2, "expected 2 bytes for order 4, found 3")
        );
        assert!(matches!(
            decode_graph6("C"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(decode_graph6("C\u{1}"), Err(Error::Parse { .. })));
        assert!(matches!(
            decode_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(decode_graph6("?"), Err(Error::Parse { .. })));
        // "Bw": order 3, bits 111 011 -> padding must be zero.
        assert!(matches!(
            decode_graph6("B~"),
            Err(Error::Parse { offset: 1, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = petersen();
        assert_eq!(decode_edge_list(&encode_edge_list(&g)).unwrap(), g);
        assert_eq!(
            read_graph("# c5\n5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap(),
            cycle(5)
        );
        assert!(matches!(
            decode_edge_list("3 1\n1 4\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(decode_edge_list("3 2\n1 2\n").is_err());
        assert!(matches!(
            decode_edge_list("2 1\n1 1\n"),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn dot_is_deterministic() {
        assert_eq!(
            encode_dot(&path(3)),
            "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n"
        );
    }
}
