use std::collections::BTreeSet;

use super::Graph;
use crate::error::ParseError;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Decodes a graph6 string.
///
/// Accepts the optional `>>graph6<<` header and one trailing newline. Offsets
/// in errors index into `text` as given.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    let mut body = bytes;
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
        body = &bytes[start..];
    }
    if let Some(stripped) = body.strip_suffix(b"\n") {
        body = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    if body.is_empty() {
        return Err(ParseError::Header { offset: start, reason: "empty input" });
    }

    let (n, header_len) = decode_size(body, start)?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or(ParseError::Header { offset: start, reason: "vertex count overflows" })?;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < expected {
        return Err(ParseError::Truncated { offset: start + body.len(), expected });
    }
    if data.len() > expected {
        return Err(ParseError::TrailingGarbage { offset: start + header_len + expected });
    }

    for (idx, &b) in data.iter().enumerate() {
        checked_value(b, start + header_len + idx)?;
    }

    let mut edges = BTreeSet::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let value = data[k / 6] - BIAS;
            if value & (1 << (5 - k % 6)) != 0 {
                edges.insert((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    // unused low bits of the last byte must be zero
    if bits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::Padding { offset: start + header_len + expected - 1 });
        }
    }
    Ok(Graph::from_normalized(n, edges))
}

fn checked_value(b: u8, offset: usize) -> Result<u8, ParseError> {
    if (BIAS..=126).contains(&b) {
        Ok(b - BIAS)
    } else {
        Err(ParseError::ByteOutOfRange { offset, byte: b })
    }
}

fn decode_size(body: &[u8], start: usize) -> Result<(usize, usize), ParseError> {
    let first = body[0];
    if first != 126 {
        return Ok((checked_value(first, start)? as usize, 1));
    }
    let (width, skip) = if body.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    if body.len() < skip + width {
        return Err(ParseError::Header { offset: start + body.len(), reason: "incomplete vertex count" });
    }
    let mut n = 0usize;
    for (i, &b) in body[skip..skip + width].iter().enumerate() {
        n = (n << 6) | checked_value(b, start + skip + i)? as usize;
    }
    Ok((n, skip + width))
}

/// Encodes a graph as graph6, using the shortest size form.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    // bit k of the upper triangle, column by column, is pair (i, j) with
    // k = j(j-1)/2 + i; six bits per byte, most significant first
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for (i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(data.into_iter().map(|b| b + BIAS));
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}
