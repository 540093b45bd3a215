//! graph6: an order header followed by the upper triangle of the adjacency
//! matrix in column order, six bits per printable byte.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the 4-byte header can express.
const SHORT_LIMIT: usize = 258_047;
/// Largest order the 8-byte header can express.
const LONG_LIMIT: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    TrailingBytes(usize),
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("order {0} too large")]
    TooLarge(usize),
}

fn six(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    bytes[offset..]
        .iter()
        .enumerate()
        .try_fold(0u64, |acc, (i, &b)| {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadByte {
                    byte: b,
                    offset: offset + i,
                });
            }
            Ok((acc << 6) | u64::from(b - 63))
        })
}

fn header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let take = |from: usize, len: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < from + len {
            return Err(Graph6Error::Truncated {
                expected: from + len,
                found: bytes.len(),
            });
        }
        Ok(six(&bytes[..from + len], from)? as usize)
    };
    match bytes {
        [] => Err(Graph6Error::Empty),
        [126, 126, ..] => Ok((take(2, 6)?, 8)),
        [126, ..] => Ok((take(1, 3)?, 4)),
        _ => Ok((take(0, 1)?, 1)),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, skip) = header(bytes)?;
    let data = &bytes[skip..];
    if let Some((i, &b)) = data.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::BadByte {
            byte: b,
            offset: skip + i,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes(data.len() - expected));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("upper triangle gives a simple graph"))
}

/// Encodes `g` without the optional header.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_six = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for s in (0..groups).rev() {
            out.push(63 + ((value >> (6 * s)) & 63) as u8);
        }
    };
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= SHORT_LIMIT {
        out.push(126);
        push_six(&mut out, n, 3);
    } else if n <= LONG_LIMIT {
        out.extend([126, 126]);
        push_six(&mut out, n, 6);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn k2_packs_one_bit() {
        assert_eq!(write_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
    }

    #[test]
    fn known_strings() {
        // Hand-packed: K5 has 10 ones, so "D~{" (111111 1111 00).
        assert_eq!(write_graph6(&complete(5)).unwrap(), "D~{");
        assert_eq!(write_graph6(&petersen()).unwrap().len(), 1 + 8);
        assert_eq!(parse_graph6(">>graph6<<D~{\n").unwrap(), complete(5));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn decodes_reference_fixtures() {
        // Edge lists produced by an independent decoder.
        let cases: [(&str, usize, &[(usize, usize)]); 3] = [
            ("D?{", 5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),
            ("Fw?GG", 7, &[(0, 1), (0, 2), (1, 2), (4, 5), (5, 6)]),
            (
                "I?h]@eOWG",
                10,
                &[
                    (0, 4), (0, 6), (0, 8), (1, 5), (1, 6), (1, 9), (2, 4), (2, 7),
                    (2, 9), (3, 5), (3, 7), (3, 8), (4, 5), (6, 7), (8, 9),
                ],
            ),
        ];
        for (s, n, edges) in cases {
            let g = parse_graph6(s).unwrap();
            assert_eq!(g, Graph::from_edges(n, edges).unwrap(), "{s}");
            assert_eq!(write_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6("A"), Err(Graph6Error::Truncated { .. })));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("A "), Err(Graph6Error::Truncated { .. })));
        assert!(matches!(parse_graph6("A_ x"), Err(Graph6Error::BadByte { .. })));
        assert_eq!(parse_graph6("A_?"), Err(Graph6Error::TrailingBytes(1)));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(parse_graph6("~??"), Err(Graph6Error::Truncated { .. })));
    }

    #[test]
    fn long_header_round_trip() {
        let g = path(70);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
