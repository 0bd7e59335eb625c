use std::io::{BufRead, Write};

use crate::{CoreError, MultiGraph};

/// Writes the text edge-list format:
///
/// ```text
/// pa <m> <n> <seed> <vertex_offset>
/// <u> <v>
/// ...
/// ```
///
/// one line per edge in stored order, loops as `u u`, multiplicity by
/// repetition. Round-trips bit-exactly through `read_edge_list`.
pub fn write_edge_list<W: Write>(g: &MultiGraph, mut w: W) -> Result<(), CoreError> {
    writeln!(
        w,
        "pa {} {} {} {}",
        g.m(),
        g.n(),
        g.seed(),
        g.vertex_offset()
    )?;
    for &(u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<MultiGraph, CoreError> {
    let mut lines = Vec::new();
    for line in r.lines() {
        lines.push(line?);
    }
    parse_edge_list_lines(&lines)
}

/// Parses the edge-list format from a string. Never panics on malformed
/// input; every failure names the offending line.
pub fn parse_edge_list(text: &str) -> Result<MultiGraph, CoreError> {
    let lines: Vec<String> = text.lines().map(|s| s.to_owned()).collect();
    parse_edge_list_lines(&lines)
}

fn parse_edge_list_lines(lines: &[String]) -> Result<MultiGraph, CoreError> {
    let err = |line: usize, msg: &str| CoreError::Parse {
        line,
        msg: msg.to_owned(),
    };
    let header = lines.first().ok_or_else(|| err(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "pa" {
        return Err(err(1, "expected header `pa m n seed vertex_offset`"));
    }
    let m: u32 = fields[1].parse().map_err(|_| err(1, "bad m"))?;
    let n: u32 = fields[2].parse().map_err(|_| err(1, "bad n"))?;
    let seed: u64 = fields[3].parse().map_err(|_| err(1, "bad seed"))?;
    let offset: u32 = fields[4].parse().map_err(|_| err(1, "bad vertex_offset"))?;
    if m == 0 {
        return Err(err(1, "m must be positive"));
    }
    if n == 0 || offset == 0 || offset > n {
        return Err(err(1, "need 1 <= vertex_offset <= n"));
    }
    let mut edges = Vec::with_capacity(lines.len().saturating_sub(1));
    for (i, line) in lines.iter().enumerate().skip(1) {
        if line.is_empty() && i == lines.len() - 1 {
            break;
        }
        let mut it = line.split_whitespace();
        let u: u32 = it
            .next()
            .ok_or_else(|| err(i + 1, "missing endpoint"))?
            .parse()
            .map_err(|_| err(i + 1, "bad endpoint"))?;
        let v: u32 = it
            .next()
            .ok_or_else(|| err(i + 1, "missing endpoint"))?
            .parse()
            .map_err(|_| err(i + 1, "bad endpoint"))?;
        if it.next().is_some() {
            return Err(err(i + 1, "trailing fields"));
        }
        if u > v {
            return Err(err(i + 1, "endpoints must satisfy u <= v"));
        }
        if u < offset || v > n {
            return Err(err(i + 1, "endpoint outside vertex range"));
        }
        edges.push((u, v));
    }
    Ok(MultiGraph::from_edges(n, offset, edges, m, seed).expect("validated above"))
}
