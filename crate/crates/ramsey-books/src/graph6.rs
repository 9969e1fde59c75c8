//! graph6 and sparse6 text codecs and the serde form of a graph.
//!
//! graph6 packs the upper triangle column by column, six bits per printable
//! byte offset by 63; sparse6 (read only here) lists edges in bit groups.
//! Both follow the formats used by the nauty tools. Parse errors carry the
//! byte offset into the original string, headers included.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, MAX_ORDER};

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 18-bit form covers everything up to the crate's order cap
        out.push(b'~');
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
}

/// Decodes one graph6 or sparse6 line, with or without the `>>graph6<<` /
/// `>>sparse6<<` marker some tools prepend.
pub fn decode_graph(text: &str) -> Result<Graph> {
    let line = text.trim_end();
    let (rest, base) = if let Some(r) = line.strip_prefix(">>graph6<<") {
        (r, 10)
    } else if let Some(r) = line.strip_prefix(">>sparse6<<") {
        (r, 11)
    } else {
        (line, 0)
    };
    let bytes = rest.as_bytes();
    if bytes.first() == Some(&b':') {
        decode_sparse6(bytes, base)
    } else {
        decode_graph6(bytes, base)
    }
}

fn val(b: u8, offset: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::parse(
            offset,
            format!("byte {b:#04x} outside the printable range"),
        ))
    }
}

fn read_size(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    match bytes {
        [] => Err(Error::parse(base, "missing size header")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(base + bytes.len(), "truncated size header"));
            }
            let mut n = 0usize;
            for (i, &b) in rest[..6].iter().enumerate() {
                n = n << 6 | val(b, base + 2 + i)? as usize;
            }
            Ok((n, 8))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(base + bytes.len(), "truncated size header"));
            }
            let mut n = 0usize;
            for (i, &b) in rest[..3].iter().enumerate() {
                n = n << 6 | val(b, base + 1 + i)? as usize;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((val(*b, base)? as usize, 1)),
    }
}

fn decode_graph6(bytes: &[u8], base: usize) -> Result<Graph> {
    let (n, consumed) = read_size(bytes, base)?;
    if n > MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: n,
            max: MAX_ORDER,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[consumed..];
    if data.len() < expected {
        return Err(Error::parse(base + bytes.len(), "truncated graph6 data"));
    }
    if data.len() > expected {
        return Err(Error::parse(
            base + consumed + expected,
            "trailing bytes after graph6 data",
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut u = 0;
    let mut v = 1;
    for (idx, &b) in data.iter().enumerate() {
        let x = val(b, base + consumed + idx)?;
        for bitpos in 0..6 {
            let bit = x >> (5 - bitpos) & 1;
            if idx * 6 + bitpos < pairs {
                if bit == 1 {
                    g.set_edge(u, v);
                }
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            } else if bit != 0 {
                return Err(Error::parse(base + consumed + idx, "nonzero padding bits"));
            }
        }
    }
    Ok(g)
}

fn decode_sparse6(bytes: &[u8], base: usize) -> Result<Graph> {
    debug_assert_eq!(bytes.first(), Some(&b':'));
    let body = &bytes[1..];
    let (n, consumed) = read_size(body, base + 1)?;
    if n > MAX_ORDER {
        return Err(Error::CapacityExceeded {
            requested: n,
            max: MAX_ORDER,
        });
    }
    let data = &body[consumed..];
    let mut vals = Vec::with_capacity(data.len());
    for (i, &b) in data.iter().enumerate() {
        vals.push(val(b, base + 1 + consumed + i)?);
    }
    // group width: one flag bit plus enough bits to index a vertex
    let k = if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    let total_bits = vals.len() * 6;
    let bit = |i: usize| vals[i / 6] >> (5 - i % 6) & 1;
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= total_bits {
        let group_offset = base + 1 + consumed + pos / 6;
        let b = bit(pos);
        let mut x = 0usize;
        for j in 0..k {
            x = x << 1 | bit(pos + 1 + j) as usize;
        }
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        // out-of-range groups are the standard all-ones padding
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Error::parse(group_offset, "loop edge in sparse6 data"));
        } else {
            edges.push((x, v));
        }
    }
    build_graph(n, &edges)
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&graph6_encode(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        decode_graph(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_util::random_graph;

    fn parse_offset(err: Error) -> usize {
        match err {
            Error::Parse { offset, .. } => offset,
            other => panic!("expected a parse error, got {other}"),
        }
    }

    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(graph6_encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph6_encode(&Graph::empty(5).unwrap()), "D??");
        assert_eq!(graph6_encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(graph6_encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(graph6_encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn known_decodings() {
        assert_eq!(decode_graph("?").unwrap().order(), 0);
        assert_eq!(decode_graph("@").unwrap().order(), 1);
        let k3 = decode_graph("Bw").unwrap();
        assert_eq!(k3.order(), 3);
        assert_eq!(k3.count_edges(), 3);
        let p = decode_graph("A_\n").unwrap();
        assert_eq!((p.order(), p.count_edges()), (2, 1));
    }

    #[test]
    fn tool_headers_are_stripped() {
        assert_eq!(decode_graph(">>graph6<<Bw").unwrap().count_edges(), 3);
        assert_eq!(decode_graph(">>sparse6<<:BcN").unwrap().count_edges(), 3);
    }

    #[test]
    fn round_trips_small_and_wide() {
        for order in 0..=64 {
            let g = random_graph(order, 43, order as u64 + 7);
            let enc = graph6_encode(&g);
            let back = decode_graph(&enc).unwrap();
            assert!(back == g, "order {order}");
        }
        let g = random_graph(100, 61, 5);
        assert!(decode_graph(&graph6_encode(&g)).unwrap() == g);
    }

    #[test]
    fn orders_beyond_sixty_two_use_the_long_header() {
        let g = random_graph(63, 50, 1);
        let enc = graph6_encode(&g);
        assert!(enc.starts_with("~??~"));
        assert!(decode_graph(&enc).unwrap() == g);
    }

    #[test]
    fn truncation_is_reported_at_end_of_input() {
        assert_eq!(parse_offset(decode_graph("D?").unwrap_err()), 2);
        assert_eq!(parse_offset(decode_graph(">>graph6<<D?").unwrap_err()), 12);
        assert_eq!(parse_offset(decode_graph("~?").unwrap_err()), 2);
    }

    #[test]
    fn trailing_bytes_are_reported_after_the_expected_data() {
        assert_eq!(parse_offset(decode_graph("D???").unwrap_err()), 3);
    }

    #[test]
    fn bytes_outside_the_printable_range_are_rejected() {
        assert_eq!(parse_offset(decode_graph("\x1f").unwrap_err()), 0);
        assert_eq!(parse_offset(decode_graph("B\x20").unwrap_err()), 1);
    }

    #[test]
    fn nonzero_padding_is_rejected() {
        // order 2 has one data bit; '`' sets a padding bit as well
        assert_eq!(parse_offset(decode_graph("A`").unwrap_err()), 1);
    }

    #[test]
    fn oversized_headers_hit_the_capacity_limit() {
        let err = decode_graph("~War").unwrap_err();
        assert!(matches!(err, Error::CapacityExceeded { .. }));
    }

    #[test]
    fn sparse6_triangle_decodes() {
        let g = decode_graph(":BcN").unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
    }

    #[test]
    fn sparse6_single_vertex_decodes() {
        let g = decode_graph(":@").unwrap();
        assert_eq!((g.order(), g.count_edges()), (1, 0));
    }

    #[test]
    fn sparse6_loops_are_rejected() {
        assert_eq!(parse_offset(decode_graph(":A?").unwrap_err()), 2);
    }

    #[test]
    fn serde_uses_the_graph6_text_form() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "\"Bw\"");
        let back: Graph = serde_json::from_str("\"Bw\"").unwrap();
        assert!(back == g);
        assert!(serde_json::from_str::<Graph>("\"A`\"").is_err());
    }
}
