//! graph6 encoding for graphs of order at most 62.
//!
//! The size byte is `n + 63`. The upper triangle is read column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with zeros to a multiple of
//! six bits, and each six-bit group (most significant bit first) is written
//! as `group + 63`. No header, no sparse6.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {:#04x} at position {pos} is outside the printable range",
            bytes[pos]
        )));
    }
    let n = (head - OFFSET) as usize;
    if n == 63 {
        return Err(Error::Graph6(format!(
            "multi-byte size field is not supported (order > {MAX_ORDER})"
        )));
    }
    if n == 0 {
        return Err(Error::OrderOutOfRange(0));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        let what = if body.len() > expected {
            "trailing garbage"
        } else {
            "truncated adjacency data"
        };
        return Err(Error::Graph6(format!(
            "{what}: order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let padding = expected * 6 - pairs;
    if (pairs..pairs + padding).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
