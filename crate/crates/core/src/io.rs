//! Reading and writing graphs as edge lists, DIMACS and graph6.
//!
//! Edge list: one edge per line as two whitespace-separated 0-based vertex
//! ids. `#` starts a comment, blank lines are skipped, and an optional first
//! line `n <count>` fixes the order so trailing isolated vertices survive.
//!
//! DIMACS: `c` comment lines, a mandatory `p edge <n> <m>` line and
//! `e <u> <v>` lines with 1-based ids. A wrong `m` only logs a warning.
//!
//! graph6: the standard ASCII packing of the upper adjacency triangle.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ParseError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
    Graph6,
}

impl GraphFormat {
    pub const ALL: [GraphFormat; 3] = [
        GraphFormat::EdgeList,
        GraphFormat::Dimacs,
        GraphFormat::Graph6,
    ];

    /// Guess from a file extension: `.g6` is graph6, `.col`/`.dimacs` is
    /// DIMACS, anything else is an edge list.
    pub fn from_extension(ext: Option<&str>) -> GraphFormat {
        match ext.map(str::to_ascii_lowercase).as_deref() {
            Some("g6") | Some("graph6") => GraphFormat::Graph6,
            Some("col") | Some("dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Dimacs => "dimacs",
            GraphFormat::Graph6 => "graph6",
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            "graph6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format '{other}'")),
        }
    }
}

pub fn parse(format: GraphFormat, input: &str) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(input),
        GraphFormat::Dimacs => parse_dimacs(input),
        GraphFormat::Graph6 => graph6::decode(input.trim()),
    }
}

pub fn serialize(format: GraphFormat, g: &Graph) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::Graph6 => {
            let mut s = graph6::encode(g);
            s.push('\n');
            s
        }
    }
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| {
        ParseError::new(
            line,
            format!("expected a non-negative integer, found '{token}'"),
        )
    })
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>, lines: Vec<usize>) -> Result<Graph, ParseError> {
    for (&(u, v), &line) in edges.iter().zip(&lines) {
        if u >= n || v >= n {
            return Err(ParseError::new(
                line,
                format!("edge ({u}, {v}) out of range for {n} vertices"),
            ));
        }
        if u == v {
            return Err(ParseError::new(line, format!("self-loop on vertex {u}")));
        }
    }
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut first = true;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if first && tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(ParseError::new(line, "header must read 'n <count>'"));
            }
            declared = Some(number(tokens[1], line)?);
            first = false;
            continue;
        }
        first = false;
        if tokens.len() != 2 {
            return Err(ParseError::new(
                line,
                format!("expected two vertex ids, found {} tokens", tokens.len()),
            ));
        }
        edges.push((number(tokens[0], line)?, number(tokens[1], line)?));
        lines.push(line);
    }
    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    build(n, edges, lines)
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let implied = g.edges().map(|(_, v)| v + 1).max().unwrap_or(0);
    if implied != g.n() {
        writeln!(out, "n {}", g.n()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_dimacs(input: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(ParseError::new(
                        line,
                        "problem line must read 'p edge <n> <m>'",
                    ));
                }
                header = Some((number(tokens[2], line)?, number(tokens[3], line)?));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(ParseError::new(line, "edge line before problem line"));
                }
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "edge line must read 'e <u> <v>'"));
                }
                let u = number(tokens[1], line)?;
                let v = number(tokens[2], line)?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "DIMACS vertex ids start at 1"));
                }
                edges.push((u - 1, v - 1));
                lines.push(line);
            }
            Some(other) => {
                return Err(ParseError::new(
                    line,
                    format!("unknown line type '{other}'"),
                ));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(ParseError::new(
            input.lines().count().max(1),
            "missing problem line",
        ));
    };
    let g = build(n, edges, lines)?;
    if g.m() != m {
        log::warn!("DIMACS header declares {m} edges, found {}", g.m());
    }
    Ok(g)
}

fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// graph6 encoding and decoding.
pub mod graph6 {
    use super::*;

    const BIAS: u8 = 63;
    const SMALL_MAX: usize = 62;
    const MEDIUM_MAX: usize = 258_047;
    const LARGE_MAX: usize = (1 << 36) - 1;

    pub(super) fn push_size(out: &mut Vec<u8>, n: usize) {
        if n <= SMALL_MAX {
            out.push(n as u8 + BIAS);
        } else if n <= MEDIUM_MAX {
            out.push(b'~');
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + BIAS);
            }
        } else {
            assert!(n <= LARGE_MAX, "graph6 cannot encode {n} vertices");
            out.extend_from_slice(b"~~");
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 0x3f) as u8 + BIAS);
            }
        }
    }

    /// Encodes `g` without a trailing newline.
    pub fn encode(g: &Graph) -> String {
        let n = g.n();
        let mut out = Vec::with_capacity(8 + n * n / 12);
        push_size(&mut out, n);
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..n {
            for u in 0..v {
                acc = acc << 1 | g.has_edge(u, v) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + BIAS);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + BIAS);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    fn sextet(b: u8) -> Result<u8, ParseError> {
        if (63..=126).contains(&b) {
            Ok(b - BIAS)
        } else {
            Err(ParseError::new(
                1,
                format!("byte {b:#04x} is not a graph6 character"),
            ))
        }
    }

    pub(super) fn read_size(bytes: &[u8]) -> Result<(usize, usize), ParseError> {
        let short = || ParseError::new(1, "truncated graph6 size prefix");
        match bytes {
            [] => Err(short()),
            [b'~', b'~', rest @ ..] => {
                let digits = rest.get(..6).ok_or_else(short)?;
                let n = digits.iter().try_fold(0usize, |acc, &b| {
                    Ok::<_, ParseError>(acc << 6 | sextet(b)? as usize)
                })?;
                Ok((n, 8))
            }
            [b'~', rest @ ..] => {
                let digits = rest.get(..3).ok_or_else(short)?;
                let n = digits.iter().try_fold(0usize, |acc, &b| {
                    Ok::<_, ParseError>(acc << 6 | sextet(b)? as usize)
                })?;
                Ok((n, 4))
            }
            [b, ..] => Ok((sextet(*b)? as usize, 1)),
        }
    }

    /// Decodes one graph6 string (no surrounding whitespace).
    pub fn decode(s: &str) -> Result<Graph, ParseError> {
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        let (n, offset) = read_size(bytes)?;
        let body = &bytes[offset..];
        let pairs = n * n.saturating_sub(1) / 2;
        let expected = pairs.div_ceil(6);
        if body.len() != expected {
            return Err(ParseError::new(
                1,
                format!(
                    "graph6 body has {} bytes, expected {expected} for {n} vertices",
                    body.len()
                ),
            ));
        }
        let mut edges = Vec::new();
        let mut bit = 0;
        'outer: for v in 1..n {
            for u in 0..v {
                if bit >= pairs {
                    break 'outer;
                }
                let word = sextet(body[bit / 6])?;
                if word >> (5 - bit % 6) & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        if let Some(&last) = body.last() {
            let used = pairs - (expected - 1) * 6;
            if sextet(last)? & ((1u8 << (6 - used)) - 1) != 0 {
                return Err(ParseError::new(1, "nonzero graph6 padding bits"));
            }
        }
        Ok(Graph::new(n, edges).expect("decoded pairs are in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_list_basics() {
        assert_eq!(parse(GraphFormat::EdgeList, "0 1\n1 2\n").unwrap(), p3());
        assert_eq!(serialize(GraphFormat::EdgeList, &p3()), "0 1\n1 2\n");
        let g = parse(GraphFormat::EdgeList, "# comment\nn 5\n\n1 0 # trailing\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(serialize(GraphFormat::EdgeList, &g), "n 5\n0 1\n");
        assert_eq!(parse(GraphFormat::EdgeList, "").unwrap().n(), 0);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let e = parse(GraphFormat::EdgeList, "0 1\n1 x\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse(GraphFormat::EdgeList, "0 1\n\n2 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse(GraphFormat::EdgeList, "n 2\n0 5\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse(GraphFormat::EdgeList, "0 1 2\n").is_err());
    }

    #[test]
    fn dimacs_basics() {
        let g = parse(GraphFormat::Dimacs, "c hi\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, p3());
        assert_eq!(
            serialize(GraphFormat::Dimacs, &k3()),
            "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
        );
        // wrong m is tolerated
        assert_eq!(
            parse(GraphFormat::Dimacs, "p edge 3 7\ne 1 2\ne 2 3\n").unwrap(),
            p3()
        );
    }

    #[test]
    fn dimacs_errors() {
        assert_eq!(parse(GraphFormat::Dimacs, "e 1 2\n").unwrap_err().line, 1);
        assert_eq!(
            parse(GraphFormat::Dimacs, "p edge 3 1\ne 0 1\n")
                .unwrap_err()
                .line,
            2
        );
        assert_eq!(
            parse(GraphFormat::Dimacs, "p edge 3 1\ne 1 4\n")
                .unwrap_err()
                .line,
            2
        );
        assert!(parse(GraphFormat::Dimacs, "c only\n").is_err());
        assert!(parse(GraphFormat::Dimacs, "p graph 3 1\n").is_err());
    }

    // Reference strings produced by networkx's graph6 writer.
    #[test]
    fn graph6_reference_strings() {
        assert_eq!(graph6::encode(&p3()), "Bg");
        assert_eq!(graph6::encode(&k3()), "Bw");
        assert_eq!(graph6::decode("Bw").unwrap(), k3());
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6::encode(&g), "DQc");
        assert_eq!(graph6::encode(&Graph::empty(0)), "?");
        assert_eq!(graph6::encode(&Graph::empty(1)), "@");
        assert!(graph6::encode(&Graph::empty(62)).starts_with('}'));
    }

    #[test]
    fn graph6_size_prefixes() {
        for (n, len) in [
            (0, 1),
            (62, 1),
            (63, 4),
            (258_047, 4),
            (258_048, 8),
            (1 << 35, 8),
        ] {
            let mut buf = Vec::new();
            graph6::push_size(&mut buf, n);
            assert_eq!(buf.len(), len);
            assert_eq!(graph6::read_size(&buf).unwrap(), (n, len));
        }
        // reference: n = 63 encodes as "~??~"
        let mut buf = Vec::new();
        graph6::push_size(&mut buf, 63);
        assert_eq!(buf, b"~??~");
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(graph6::decode("").is_err());
        assert!(graph6::decode("Bww").is_err());
        assert!(graph6::decode("B").is_err());
        assert!(graph6::decode("Bx").is_err());
        assert!(graph6::decode("B\x07").is_err());
    }

    #[test]
    fn format_names() {
        for f in GraphFormat::ALL {
            assert_eq!(f.name().parse::<GraphFormat>().unwrap(), f);
        }
        assert_eq!(GraphFormat::from_extension(Some("g6")), GraphFormat::Graph6);
        assert_eq!(
            GraphFormat::from_extension(Some("COL")),
            GraphFormat::Dimacs
        );
        assert_eq!(
            GraphFormat::from_extension(Some("txt")),
            GraphFormat::EdgeList
        );
        assert_eq!(GraphFormat::from_extension(None), GraphFormat::EdgeList);
    }
}
