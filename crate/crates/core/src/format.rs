//! Plain-text graph and coloring files.
//!
//! A graph file is a header line `n m` followed by `m` lines `u v` with
//! `u < v < n`. A coloring file is a header line `k` followed by lines
//! `u v c` with `1 <= c <= k`, sorted by edge. Both are ASCII decimal,
//! whitespace-separated, with one record per line.

use std::fmt::Write;

use crate::coloring::{Color, PartialEdgeColoring};
use crate::error::{FormatError, GraphError};
use crate::graph::{Edge, Graph};

/// Numbered non-blank lines, numbering from 1.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, fields)| !fields.is_empty())
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], FormatError> {
    if fields.len() != N {
        return Err(FormatError::new(
            line,
            format!("expected {N} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| {
            FormatError::new(line, format!("`{field}` is not a non-negative integer"))
        })?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = records(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| FormatError::new(1, "missing `n m` header"))?;
    let [n, m] = numbers::<2>(header_line, &header)?;
    let mut edges = Vec::with_capacity(m);
    let mut origin = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, fields) in lines {
        let [u, v] = numbers::<2>(line, &fields)?;
        if u >= v {
            return Err(FormatError::new(
                line,
                format!("edge `{u} {v}` must list the smaller endpoint first"),
            ));
        }
        if v >= n {
            return Err(FormatError::new(
                line,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        edges.push(Edge::new(u, v));
        origin.push(line);
        last_line = line;
    }
    if edges.len() != m {
        return Err(FormatError::new(
            last_line,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, edges.iter().copied()).map_err(|err| {
        let line = match err {
            GraphError::DuplicateEdge(e) => {
                origin[edges.iter().rposition(|&f| f == e).unwrap_or(0)]
            }
            _ => header_line,
        };
        FormatError::new(line, err.to_string())
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<PartialEdgeColoring, FormatError> {
    let mut lines = records(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| FormatError::new(1, "missing palette header"))?;
    let [k] = numbers::<1>(header_line, &header)?;
    let k = Color::try_from(k).map_err(|_| FormatError::new(header_line, "palette too large"))?;
    let mut c = PartialEdgeColoring::new(k);
    for (line, fields) in lines {
        let [u, v, col] = numbers::<3>(line, &fields)?;
        if u >= v {
            return Err(FormatError::new(
                line,
                format!("edge `{u} {v}` must list the smaller endpoint first"),
            ));
        }
        if col == 0 || col > k as usize {
            return Err(FormatError::new(
                line,
                format!("color {col} outside 1..={k}"),
            ));
        }
        if c.assign(Edge::new(u, v), col as Color).is_some() {
            return Err(FormatError::new(
                line,
                format!("edge `{u} {v}` colored twice"),
            ));
        }
    }
    Ok(c)
}

pub fn write_coloring(c: &PartialEdgeColoring) -> String {
    let mut out = format!("{}\n", c.palette());
    for (e, col) in c.iter() {
        let _ = writeln!(out, "{} {} {}", e.u(), e.v(), col);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::h7;

    #[test]
    fn graph_round_trip() {
        let g = h7();
        let text = write_graph(&g);
        assert!(text.starts_with("7 9\n0 1\n0 3\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        let err = |t: &str| parse_graph(t).unwrap_err();
        assert_eq!(err("").line, 1);
        assert_eq!(err("3 1\n0 x\n").line, 2);
        assert_eq!(err("3 2\n0 1\n\n0 1\n").line, 4);
        assert_eq!(err("3 1\n0 3\n").line, 2);
        assert_eq!(err("3 1\n1 0\n").line, 2);
        assert_eq!(err("3 1\n1 1\n").line, 2);
        assert!(err("3 2\n0 1\n").message.contains("promises 2"));
        assert!(err("3\n").message.contains("expected 2 fields"));
    }

    #[test]
    fn coloring_round_trip() {
        let mut c = PartialEdgeColoring::new(3);
        c.assign(Edge::new(1, 2), 2);
        c.assign(Edge::new(0, 1), 1);
        let text = write_coloring(&c);
        assert_eq!(text, "3\n0 1 1\n1 2 2\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn coloring_errors() {
        assert_eq!(parse_coloring("2\n0 1 3\n").unwrap_err().line, 2);
        assert_eq!(parse_coloring("2\n0 1 0\n").unwrap_err().line, 2);
        assert_eq!(parse_coloring("2\n0 1 1\n0 1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_coloring("x\n").unwrap_err().line, 1);
    }
}
