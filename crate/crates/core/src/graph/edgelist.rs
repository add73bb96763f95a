use super::Graph;
use crate::error::{Error, Result};

/// Parses `n m` followed by `m` lines `u v`. Edge ids follow file order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing header".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line).map(|[u, v]| (u, v))?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "edge list: header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse(format!("edge list: bad line {line:?}"))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
