//! graph6 encoding for graphs of order at most 64.
//!
//! Layout: `N(n)` followed by the upper adjacency triangle in column-major order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, each byte offset
//! by 63. Orders up to 62 use one length byte; 63 and 64 use `~` plus three bytes.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn emit(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing line
/// terminator are accepted. Padding bits must be zero.
pub fn parse(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, line) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    let malformed = |at: usize, reason: String| Error::Malformed {
        offset: skip + at,
        reason,
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(
                i,
                format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(malformed(0, "empty input".into()));
    };

    let (n, header_len) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::Capacity {
                requested: 258_048,
                max: MAX_ORDER,
            });
        }
        if bytes.len() < 4 {
            return Err(malformed(bytes.len(), "truncated order field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((first - 63) as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            requested: n,
            max: MAX_ORDER,
        });
    }

    let body = &bytes[header_len..];
    let expected = body_len(n);
    if body.len() != expected {
        let at = header_len + body.len().min(expected);
        return Err(malformed(
            at,
            format!(
                "expected {expected} adjacency bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(malformed(header_len + expected - 1, "non-zero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj)
}
