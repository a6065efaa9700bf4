use std::io::Read;
use std::path::Path;

use minorkit::io::parse_graph;
use minorkit::{Format, Graph};
use sha2::{Digest, Sha256};

use crate::report::Failure;
use crate::Common;

pub struct Input {
    pub bytes: Vec<u8>,
    pub digest: String,
}

pub fn read(common: &Common) -> Result<Input, Failure> {
    let bytes = if common.input == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read(&common.input).map_err(|e| Failure::Input(format!("reading {}: {e}", common.input)))?
    };
    let digest = format!("{:x}", Sha256::digest(&bytes));
    Ok(Input { bytes, digest })
}

pub fn read_graph(common: &Common) -> Result<(Graph, String), Failure> {
    let input = read(common)?;
    let format = common
        .format
        .or_else(|| from_extension(&common.input))
        .unwrap_or_else(|| sniff(&input.bytes));
    let g = parse_graph(&input.bytes, format)?;
    Ok((g, input.digest))
}

fn from_extension(path: &str) -> Option<Format> {
    let ext = Path::new(path).extension()?.to_str()?.to_ascii_lowercase();
    match ext.as_str() {
        "g6" | "graph6" => Some(Format::Graph6),
        "col" | "dimacs" => Some(Format::Dimacs),
        "el" | "edges" | "edgelist" => Some(Format::Edgelist),
        _ => None,
    }
}

/// DIMACS if a line opens with `p` or `c`, an edge list if the first line is two numbers,
/// graph6 otherwise.
fn sniff(bytes: &[u8]) -> Format {
    let text = String::from_utf8_lossy(bytes);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let Some(first) = lines.next() else {
        return Format::Graph6;
    };
    if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
        return Format::Dimacs;
    }
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok()) {
        return Format::Edgelist;
    }
    Format::Graph6
}
