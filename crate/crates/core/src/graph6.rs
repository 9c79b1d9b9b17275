//! graph6 codec for undirected graphs of order at most [`MAX_ORDER`].
//!
//! A graph6 line is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix, read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Optional header some tools emit in front of a graph6 stream.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

pub fn from_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=BIAS + 63).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: MAX_ORDER,
        });
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} adjacency bytes, found {}",
            body.len()
        )));
    }

    let mut open = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(body, k) {
                open[i] |= 1 << j;
                open[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (nbits..expected * 6).any(|k| bit(body, k)) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_adjacency_unchecked(open))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(Error::Graph6("empty line".into())),
        [126, 126, ..] => Err(Error::Graph6("order needs the 36-bit form, far above the cap".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - BIAS) as usize, rest)),
    }
}

#[inline]
fn bit(body: &[u8], k: usize) -> bool {
    (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1
}
