//! Edge-list text and graph6 encodings.

use super::Graph;
use crate::error::{Error, Result};

/// Parse the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based ids. Blank lines and `#` comments are skipped. With
/// `one_indexed` the ids are read as 1-based.
pub fn parse_edge_list(text: &str, one_indexed: bool) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [mut u, mut v] = parse_pair(line, body)?;
        if one_indexed {
            if u == 0 || v == 0 {
                return Err(Error::Parse {
                    line,
                    message: "vertex 0 in a 1-indexed edge list".into(),
                });
            }
            u -= 1;
            v -= 1;
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {m} edges but {} were given", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    let bad = |message: String| Error::Parse { line, message };
    if fields.len() != 2 {
        return Err(bad(format!("expected two integers, found {body:?}")));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| bad(format!("{f:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";
/// Largest order representable by the single-byte size prefix.
pub const GRAPH6_MAX_N: usize = 62;

/// Decode one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    parse_graph6_line(line, 1)
}

fn parse_graph6_line(line: &str, lineno: usize) -> Result<Graph> {
    let body = line.trim();
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body).as_bytes();
    let bad = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let (&first, rest) = body
        .split_first()
        .ok_or_else(|| bad("empty graph6 string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(bad(if first == 126 {
            "graph6 orders above 62 are not supported".into()
        } else {
            format!("invalid graph6 size byte {first}")
        }));
    }
    if first == 126 {
        return Err(bad("graph6 orders above 62 are not supported".into()));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(bad(format!(
            "graph6 body for n={n} needs {expected} bytes, found {}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad(format!("invalid graph6 data byte {byte}")));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decode a graph6 stream, one graph per non-blank line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l, i + 1))
        .collect()
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::bound("graph6 order", GRAPH6_MAX_N, n));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::tests::arb_graph;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let text = "# triangle plus pendant\n4 4\n0 1\n\n1 2 # rim\n2 0\n2 3\n";
        let g = parse_edge_list(text, false).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        let one = parse_edge_list("3 2\n1 2\n2 3\n", true).unwrap();
        assert_eq!(one, Family::Path(3).build().unwrap());
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n", false), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 5\n", false), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n", false), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn known_graph6_strings() {
        // Reference encodings from the format description.
        assert_eq!(to_graph6(&Family::Complete(4).build().unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&Family::Path(4).build().unwrap()).unwrap(), "Ch");
        assert_eq!(parse_graph6("Dhc").unwrap(), Family::Cycle(5).build().unwrap());
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Family::Complete(4).build().unwrap());
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("~??").is_err());
        let stream = "C~\n\nDhc\n";
        assert_eq!(parse_graph6_stream(stream).unwrap().len(), 2);
    }

    #[test]
    fn text_round_trip_of_fixtures() {
        let g = fixtures::gap_free_example_graph();
        assert_eq!(parse_edge_list(&to_edge_list(&g), false).unwrap(), g);
        assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(14)) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
    }
}
