//! graph6 records: 6-bit groups offset by 63, column-major upper triangle,
//! zero padding. One graph per line, optional `>>graph6<<` header.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty record".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b} outside printable range 63..=126"
        )));
    }

    let (n, mut pos) = decode_order(bytes)?;
    let pair_bits = n * (n.saturating_sub(1)) / 2;
    let body_len = pair_bits.div_ceil(6);
    if bytes.len() - pos != body_len {
        return Err(Error::Graph6(format!(
            "order {n} needs {body_len} body bytes, found {}",
            bytes.len() - pos
        )));
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 != 0 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    // Padding bits must be zero for the record to be canonical.
    while bit < body_len * 6 {
        let byte = bytes[pos + bit / 6] - 63;
        if byte >> (5 - bit % 6) & 1 != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
        bit += 1;
    }
    pos += body_len;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated length header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Error::Graph6("truncated length header".into()));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    Ok((n, 8))
}

/// Encodes a graph as a canonical graph6 record (shortest length header,
/// zero padding).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
