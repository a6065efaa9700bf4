//! Reading and writing graphs: graph6, a plain "n m" edge list, and DIMACS `p edge`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" | "el" => Ok(Format::Edgelist),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(Error::Unsupported(format!("unknown graph format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Edgelist => "edgelist",
            Format::Dimacs => "dimacs",
        })
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(bytes),
        Format::Edgelist => parse_edgelist(bytes),
        Format::Dimacs => parse_dimacs(bytes),
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s.into_bytes()
        }
        Format::Edgelist => {
            let mut s = format!("{} {}\n", g.n(), g.m());
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            s.into_bytes()
        }
        Format::Dimacs => {
            let mut s = format!("p edge {} {}\n", g.n(), g.m());
            for (u, v) in g.edges() {
                s.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            s.into_bytes()
        }
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 record; an optional `>>graph6<<` header and surrounding whitespace are ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    while start < bytes.len() && bytes[start].is_ascii_whitespace() {
        start += 1;
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let data = &bytes[start..end];
    if data.is_empty() {
        return Err(parse_err(start, "empty graph6 record"));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                start + i,
                format!("byte {b:#04x} outside the graph6 range"),
            ));
        }
    }
    let (n, used) = if data[0] != 126 {
        (usize::from(data[0] - 63), 1)
    } else if data.len() >= 2 && data[1] != 126 {
        if data.len() < 4 {
            return Err(parse_err(start + data.len(), "truncated vertex count"));
        }
        (sixes(&data[1..4]), 4)
    } else {
        if data.len() < 8 {
            return Err(parse_err(start + data.len(), "truncated vertex count"));
        }
        (sixes(&data[2..8]), 8)
    };
    let body = &data[used..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Format(format!(
            "graph6 body has {} bytes, a graph on {n} vertices needs {expected}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(parse_err(end - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn sixes(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | usize::from(b - 63))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Whitespace-separated tokens with their byte offsets, skipping `#` and `c` comment lines.
fn tokens(bytes: &[u8], comment: u8) -> Vec<(usize, Vec<&str>)> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for raw in bytes.split(|&b| b == b'\n') {
        let line_start = offset;
        offset += raw.len() + 1;
        let Ok(s) = std::str::from_utf8(raw) else {
            lines.push((line_start, vec!["\u{fffd}"]));
            continue;
        };
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed.as_bytes()[0] == comment {
            continue;
        }
        lines.push((line_start, trimmed.split_whitespace().collect()));
    }
    lines
}

fn number(tok: &str, offset: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(offset, format!("expected a non-negative integer, found `{tok}`")))
}

/// Edge list: a header line `n m`, then `m` lines `u v` with 0-based endpoints.
pub fn parse_edgelist(bytes: &[u8]) -> Result<Graph> {
    let lines = tokens(bytes, b'#');
    let Some((hoff, header)) = lines.first() else {
        return Err(parse_err(0, "missing `n m` header"));
    };
    if header.len() != 2 {
        return Err(parse_err(*hoff, "header must be `n m`"));
    }
    let n = number(header[0], *hoff)?;
    let m = number(header[1], *hoff)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (off, toks) in &lines[1..] {
        if toks.len() != 2 {
            return Err(parse_err(*off, "edge line must be `u v`"));
        }
        let u = number(toks[0], *off)?;
        let v = number(toks[1], *off)?;
        add_checked(&mut g, u, v, *off)?;
        count += 1;
    }
    if count != m {
        return Err(Error::Format(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

fn add_checked(g: &mut Graph, u: usize, v: usize, offset: usize) -> Result<()> {
    if u == v {
        return Err(parse_err(offset, format!("self-loop at vertex {u}")));
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::Format(format!(
            "edge ({u}, {v}) mentions a vertex outside 0..{}",
            g.n()
        )));
    }
    if g.has_edge(u, v) {
        return Err(parse_err(offset, format!("repeated edge ({u}, {v})")));
    }
    g.add_edge(u, v);
    Ok(())
}

/// DIMACS graph: `c` comments, one `p edge n m` line, then `e u v` lines with 1-based endpoints.
pub fn parse_dimacs(bytes: &[u8]) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared = 0;
    let mut count = 0;
    for (off, toks) in tokens(bytes, b'c') {
        match toks[0] {
            "p" => {
                if g.is_some() {
                    return Err(parse_err(off, "second problem line"));
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(parse_err(off, "problem line must be `p edge n m`"));
                }
                g = Some(Graph::new(number(toks[2], off)?));
                declared = number(toks[3], off)?;
            }
            "e" => {
                let Some(graph) = g.as_mut() else {
                    return Err(parse_err(off, "edge before problem line"));
                };
                if toks.len() != 3 {
                    return Err(parse_err(off, "edge line must be `e u v`"));
                }
                let u = number(toks[1], off)?;
                let v = number(toks[2], off)?;
                if u == 0 || v == 0 {
                    return Err(parse_err(off, "DIMACS vertices are 1-based"));
                }
                add_checked(graph, u - 1, v - 1, off)?;
                count += 1;
            }
            other => return Err(parse_err(off, format!("unexpected line type `{other}`"))),
        }
    }
    let g = g.ok_or_else(|| parse_err(bytes.len(), "missing problem line"))?;
    if count != declared {
        return Err(Error::Format(format!(
            "problem line declares {declared} edges, found {count}"
        )));
    }
    Ok(g)
}
