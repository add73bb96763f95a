//! graph6 records (no `>>graph6<<` header), as produced by nauty's `geng`.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn decode_byte(b: u8, pos: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(Error::Parse(format!(
            "graph6: byte {b:#04x} at offset {pos} outside '?'..'~'"
        )))
    }
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Parse("graph6: empty record".into()))?;
    if first != 126 {
        return Ok((decode_byte(first, 0)? as usize, 1));
    }
    let (width, skip) = if bytes.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    if bytes.len() < skip + width {
        return Err(Error::Parse("graph6: truncated length field".into()));
    }
    let mut n = 0usize;
    for (i, &b) in bytes[skip..skip + width].iter().enumerate() {
        n = (n << 6) | decode_byte(b, skip + i)? as usize;
    }
    let minimum = if width == 3 { 63 } else { 258_048 };
    if n < minimum {
        return Err(Error::Parse(format!(
            "graph6: non-canonical length field for n = {n}"
        )));
    }
    Ok((n, skip + width))
}

/// Parses one graph6 record. Edge ids follow row-major upper-triangle order,
/// i.e. `(0,1), (0,2), ..., (1,2), ...`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, offset) = parse_order(bytes)?;
    let body = &bytes[offset..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6: expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut present = vec![false; bits];
    for (i, &b) in body.iter().enumerate() {
        let word = decode_byte(b, offset + i)?;
        for k in 0..6 {
            let bit = i * 6 + k;
            let set = word & (1 << (5 - k)) != 0;
            if bit < bits {
                present[bit] = set;
            } else if set {
                return Err(Error::Parse("graph6: nonzero padding bits".into()));
            }
        }
    }
    // graph6 lists the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if present[bit] {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
