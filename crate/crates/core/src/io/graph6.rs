//! graph6: the upper triangle of the adjacency matrix, column by column,
//! packed six bits per printable byte (offset 63) after a size header.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Optional leading header some tools write.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const SMALL_LIMIT: usize = 62;
const MEDIUM_LIMIT: usize = 258_047;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= SMALL_LIMIT {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_LIMIT {
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
}

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "{n} vertices exceed {MAX_VERTICES}"
        )));
    }
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    let start = if s.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(Error::parse(start, "empty graph6 string"));
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(
            start + i,
            format!(
                "byte 0x{:02x} is outside the printable range 63..=126",
                body[i]
            ),
        ));
    }
    let sixes = |from: usize, count: usize| -> Result<usize> {
        if body.len() < from + count {
            return Err(Error::parse(start + body.len(), "truncated size header"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0usize, |acc, b| acc << 6 | (b - BIAS) as usize))
    };
    let (n, header_len) = if body[0] != 126 {
        ((body[0] - BIAS) as usize, 1)
    } else if body.get(1) != Some(&126) {
        (sixes(1, 3)?, 4)
    } else {
        (sixes(2, 6)?, 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            start,
            format!("{n} vertices exceed the supported maximum {MAX_VERTICES}"),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < need {
        return Err(Error::parse(
            start + body.len(),
            format!(
                "expected {need} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need {
        return Err(Error::parse(
            start + header_len + need,
            format!("{} unexpected trailing bytes", data.len() - need),
        ));
    }
    let pad = need * 6 - bits;
    if pad > 0 {
        let last = data[need - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(
                start + header_len + need - 1,
                "nonzero padding bits in the final byte",
            ));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_encodings() {
        assert_eq!(encode(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(encode(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(encode(&Graph::cycle(7).unwrap()).unwrap(), "FhCKG");
    }

    #[test]
    fn long_header() {
        let s = encode(&Graph::complete(63).unwrap()).unwrap();
        assert!(s.starts_with("~??~~~~~~~"));
        assert_eq!(decode(&s).unwrap(), Graph::complete(63).unwrap());
        let big = Graph::cycle(512).unwrap();
        assert_eq!(decode(&encode(&big).unwrap()).unwrap(), big);
    }

    #[test]
    fn decoding() {
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode(">>graph6<<Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode("?").unwrap().n(), 0);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        // K_3 with the first padding bit set
        assert!(matches!(decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("Bw?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("B\n"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("~?"), Err(Error::Parse { .. })));
        // 600 vertices
        assert!(matches!(
            decode("~?IW"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }
}
